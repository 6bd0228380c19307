#pragma once

#include <string>
#include <vector>

#include "glsfun/conjugate.hpp"
#include "glsfun/scalar_fn.hpp"

namespace glsfun {

// Generating function psi on support [a, b), b <= +inf. Validated on
// construction: positive and continuous on a scan; strictly increasing when
// b = +inf; bounded away from zero when b < +inf.
class GeneratingFunction {
public:
    GeneratingFunction(ScalarFunction psi, double a, double b);
    static GeneratingFunction power(double m, double a = 1.0);           // p^(1/m) on [a, inf)
    static GeneratingFunction grand(double beta, double b, double a = 1.0);  // (b-p)^(-beta)
    GeneratingFunction scaled(double C) const;

    double operator()(double p) const { return psi_(p); }
    double a() const { return a_; }
    double b() const { return b_; }
    const ScalarFunction& psi() const { return psi_; }
    double inf_psi() const { return inf_psi_; }  // over the validation scan

    // p-grid over [a, min(b, p_max)), right-dense toward finite b; shared by
    // the fundamental-function sup and the norm sup so the two sides of the
    // indicator identity see identical exponents.
    std::vector<double> support_grid(int n = num::defaults::sup_grid_n) const;

private:
    ScalarFunction psi_;
    double a_, b_;
    double inf_psi_;
};

// Catalog selection syntax: power:m=<v>[,a=<v>] | grand:beta=<v>,b=<v>[,a=<v>]
// | scaled:C=<v>,inner=<spec> | csv:<path>.
GeneratingFunction parse_psi_spec(const std::string& spec);

// Young function N: even, N(0) = 0, strictly increasing and convex on the
// right semi-axis. Holds the right branch; evaluation reflects to |u|. The
// stored domain is truncated where evaluation overflows, and inversion
// beyond it reports the attainable range.
class OrliczFunction {
public:
    explicit OrliczFunction(ScalarFunction right_branch);
    double operator()(double u) const;
    double inverse(double y) const;  // right-branch inverse, y >= 0
    const ScalarFunction& right_branch() const { return right_; }

private:
    ScalarFunction right_;
};

// sup over [a, min(b, p_max)) of delta^(1/p) / psi(p). Tail certificates
// close the window for b = +inf; an uncertifiable tail throws
// TruncationUncertain.
double fundamental_direct(const GeneratingFunction& psi, double delta);

// Inverse of p -> p/psi(p), extended by +inf outside its range. Requires that
// map to be strictly increasing on [a, b); throws NotIncreasing otherwise.
ScalarFunction nu_from_psi(const GeneratingFunction& psi);

// N(u) = exp(nu*(u)) - exp(nu*(0)) with nu* the Young-Fenchel transform of nu.
OrliczFunction orlicz_from_psi(const GeneratingFunction& psi);

double theta_from_orlicz(const OrliczFunction& N, double delta);  // 1 / N^(-1)(1/delta)
double theta(const GeneratingFunction& psi, double delta);

struct ComparisonRow {
    double key;   // delta, or a suite index
    double lhs;   // phi_direct, or the GLS norm
    double rhs;   // theta, or the Orlicz norm
    double ratio; // rhs / lhs
    bool valid;
    std::string note;
};

struct ComparisonReport {
    std::string key_name, lhs_name, rhs_name;
    std::vector<ComparisonRow> rows;
    double ratio_min = 0.0, ratio_max = 0.0;
    // ln(rhs)/ln(lhs) at the smallest valid key; meaningful for the
    // fundamental-function comparison.
    double log_ratio_at_smallest_key = 0.0;
};

ComparisonReport compare_fundamental(const GeneratingFunction& psi,
                                     const std::vector<double>& delta_grid);

}  // namespace glsfun
