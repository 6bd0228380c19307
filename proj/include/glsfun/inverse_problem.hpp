#pragma once

#include <vector>

#include "glsfun/gls_core.hpp"

namespace glsfun {

// Candidate fundamental function phi on [delta_lo, delta_max], delta_lo > 0.
// Construction validates strict increase and a decay-toward-zero screen at
// the left end of the window; failures throw InvalidFundamental.
class FundamentalFunction {
public:
    explicit FundamentalFunction(ScalarFunction phi);
    double operator()(double delta) const { return phi_(delta); }
    const ScalarFunction& phi() const { return phi_; }
    double delta_lo() const { return phi_.domain_lo(); }
    double delta_hi() const { return phi_.domain_hi(); }

private:
    ScalarFunction phi_;
};

// N(z) = 1 / phi^(-1)(1/z) on the window the data covers; inversion outside
// it throws OutOfRange.
ScalarFunction orlicz_from_fundamental(const FundamentalFunction& phi);

struct InversionResult {
    GeneratingFunction psi;  // tabulated on the requested exponent grid
    double C;
    double vstar_defect;   // raw midpoint defect of the shifted log transform
    double p_covered_lo;   // exponent window recoverable without extrapolation
    double p_covered_hi;
};

// Recovers psi from phi: conjugates ln(C + 1/delta) viewed against 1/phi,
// then reads psi(p) = p / V^(-1)(p). The transform must pass a convexity
// gate (NonConvex otherwise), and exponents outside the covered window
// throw OutOfRange.
InversionResult psi_from_fundamental(const FundamentalFunction& phi, double C,
                                     const std::vector<double>& p_grid);
// Same, on an automatic log grid inside the covered window.
InversionResult psi_from_fundamental(const FundamentalFunction& phi, double C);

struct ShiftChoice {
    double C;
    double defect;
};

// Scans a log grid of shift constants (C = 1 included) for the one whose
// transform is most nearly convex; ties prefer C = 1. Throws AllNonConvex
// when every candidate fails the gate.
ShiftChoice choose_C(const FundamentalFunction& phi);

}  // namespace glsfun
