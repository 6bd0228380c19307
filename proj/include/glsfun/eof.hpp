#pragma once

#include <vector>

#include "glsfun/gls_core.hpp"
#include "glsfun/norms.hpp"

namespace glsfun {

// Convex, strictly increasing weight W on [2, inf) driving exponential
// Orlicz functions N(u) = exp(W(ln u)) for u >= e^2. Validation scans are
// hard gates; an unbounded slope is recorded as a diagnostic only.
class WFunction {
public:
    explicit WFunction(ScalarFunction w);
    double operator()(double z) const { return w_(z); }
    double derivative(double z) const;
    bool slope_still_growing() const { return slope_growing_; }
    double asymptotic_slope() const { return slope_hi_; }  // NaN while still growing
    const ScalarFunction& fn() const { return w_; }

private:
    ScalarFunction w_;
    bool slope_growing_;
    double slope_hi_;
};

// N = exp(W(ln u)) above e^2 continued below by the matched power c*u^kappa,
// kappa = W'(2). The seam is C1 by construction; kappa < 1 throws
// ExtensionNotConvex.
OrliczFunction eof_from_W(const WFunction& w);

struct AlphaPatch {
    double alpha, C1, C2, C3, C4, C5;
    OrliczFunction patched;
};

// Rebuilds N near the origin as C1*u^alpha below C2, the tangent line
// C4*u + C3 on [C2, C5], and N itself above C5. C5 is the largest point of
// the scan window (0, e^2] where the elasticity u N'(u)/N(u) has dropped to
// alpha; when it never does, NoValidC5 reports the minimum seen.
AlphaPatch alpha_patch(const OrliczFunction& N, double alpha);

// exp(u^m) with the first j+1 Taylor terms removed; summed as the tail
// series where u^m <= 1. Fails the Young gate (NonYoung) when the leading
// surviving term is concave near the origin.
OrliczFunction trudinger(double m, int j);

// psi(p) = exp(W*(p)/p) on [alpha, b); b is W's asymptotic slope when the
// slope is bounded, +inf otherwise.
GeneratingFunction psi_from_W(const WFunction& w, double alpha);

// Exponential-class construction N(u) = exp(h*(ln u)), h(p) = p ln psi(p),
// evaluated from the signed conjugate of h on the whole semi-axis. Requires
// h convex on the representable window (NonConvex otherwise).
OrliczFunction orlicz_from_psi_eof(const GeneratingFunction& psi);

// GLS norm against the Luxemburg norm of the alpha-patched exponential
// Orlicz function over a sample suite.
ComparisonReport theorem_a_check(const DiscreteMeasureSpace& space, const GeneratingFunction& psi,
                                 const std::vector<std::vector<double>>& fs, double alpha);

}  // namespace glsfun
