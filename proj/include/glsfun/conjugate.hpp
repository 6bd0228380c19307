#pragma once

#include <vector>

#include "glsfun/scalar_fn.hpp"

namespace glsfun {

struct LegendreEval {
    double value;   // +inf when divergence is certified
    double argmax;  // NaN for a certified-divergent value
};

// Young-Fenchel transform g*(q) = sup_{p in supp g} (p*|q| - g(p)). Evenness
// in q is honored by reflecting to |q|. Piecewise-linear tabulations are
// conjugated exactly over their knots; other bodies use a coarse scan plus
// golden refinement. Divergence is certified from growth metadata; a sup that
// is still climbing at the truncation point without a certificate throws
// TruncationUncertain carrying the best value seen.
LegendreEval legendre_eval(const ScalarFunction& g, double q);
double legendre(const ScalarFunction& g, double q);

struct ConjugateResult {
    std::vector<double> q_grid;
    std::vector<double> values;
    std::vector<double> argmax_trace;
};

ConjugateResult legendre_grid(const ScalarFunction& g, const std::vector<double>& q_grid);

// (g*)*(p): equals g(p) for convex closed g, the convex envelope otherwise.
double biconjugate_at(const ScalarFunction& g, double p);
ScalarFunction biconjugate(const ScalarFunction& g, const std::vector<double>& p_grid);

// Largest midpoint defect of g over a uniform n-point grid on its scan
// window; nonpositive (within roundoff) iff midpoint-convex on the grid.
double convexity_defect(const ScalarFunction& g, int n);

}  // namespace glsfun
