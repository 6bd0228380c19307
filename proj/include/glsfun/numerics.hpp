#pragma once

#include <functional>
#include <string>
#include <vector>

namespace glsfun::num {

namespace defaults {
// Truncation point for scans and grids over unbounded domains.
inline constexpr double p_max = 1e4;
inline constexpr int monotone_scan_n = 1024;
inline constexpr int sup_grid_n = 256;
inline constexpr int golden_iters = 120;
inline constexpr double invert_tol = 1e-10;
}  // namespace defaults

std::string fmt(double x);

std::vector<double> lin_grid(double lo, double hi, int n);
std::vector<double> log_grid(double lo, double hi, int n);

// Grid on [lo, hi) whose last gaps shrink geometrically toward hi; the final
// point sits at hi - (hi - lo)*1e-12. For right-open intervals where the
// behaviour of interest concentrates at the right endpoint.
std::vector<double> right_dense_grid(double lo, double hi, int n);

double kahan_sum(const std::vector<double>& xs);

struct MaxResult {
    double arg;
    double value;
};

// Golden-section maximization on [lo, hi] tracking the best point ever seen,
// endpoints included, so a non-unimodal objective still yields a valid lower
// bound on the sup.
MaxResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                     int iters = defaults::golden_iters);

// Grid scan followed by golden refinement bracketed by the argmax neighbours.
MaxResult scan_max(const std::function<double(double)>& f, const std::vector<double>& xs,
                   int golden_iters = defaults::golden_iters);

// Solve f(x) = z on [lo, hi] for a nondecreasing continuous f; the caller
// guarantees f(lo) <= z <= f(hi).
double bisect_increasing(const std::function<double(double)>& f, double z, double lo,
                         double hi, int iters = 200);

// Second-order one-sided derivative; side = +1 steps right, -1 steps left.
double one_sided_derivative(const std::function<double(double)>& f, double x, double h,
                            int side);

struct MonotoneScan {
    bool ok;
    double where;    // right endpoint of the worst step when !ok
    double margin;   // f(x_{i+1}) - f(x_i) at that step
};

MonotoneScan scan_strictly_increasing(const std::function<double(double)>& f,
                                      const std::vector<double>& xs);

// Largest midpoint defect f(mid) - (f(x) + f(z))/2 over same-parity index
// pairs of a uniform n-point grid on [lo, hi]. Nonpositive for convex f.
// Raw value; callers apply their own tolerance and scale.
double midpoint_convexity_defect(const std::function<double(double)>& f, double lo,
                                 double hi, int n);

// Relative chord defect max_i (f(b) - interp(a, c at b)) / local_scale over
// consecutive grid triples a < b < c. Detects non-convexity at any magnitude,
// unlike the uniform-grid defect whose scale is global. Nonpositive (within
// roundoff) for convex f.
double triple_convexity_defect(const std::function<double(double)>& f,
                               const std::vector<double>& xs);

}  // namespace glsfun::num
