#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "glsfun/errors.hpp"
#include "glsfun/numerics.hpp"

namespace glsfun {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Monotonicity { unknown, increasing, decreasing };
enum class Convexity { unknown, convex, concave };

// Behaviour toward +inf on unbounded domains; drives the divergence
// certificates of the Young-Fenchel transform.
enum class Growth { unknown, bounded_domain, sublinear, linear, superlinear };

enum class Interp { linear, loglog };

struct PowerForm { double c, e; };            // c * x^e
struct GrandForm { double beta, b, scale; };  // scale * (b - x)^(-beta)
struct AffineForm { double a0, a1; };         // a0 + a1*x
struct QuadraticForm { double c0, c1, c2; };  // c0 + c1*x + c2*x^2
struct ExpAffineForm { double a0, a1; };      // exp(a0 + a1*x)

struct Tabulation {
    std::vector<double> x, y;
    Interp rule;
};

struct Callable {
    std::function<double(double)> f;
    std::string label;
};

// Immutable real function on an interval. The right endpoint may be +inf or
// excluded (right-open), and evaluation outside the domain either signals
// DomainError or returns +inf when so configured. Instances are safe to share
// across threads.
class ScalarFunction {
public:
    static ScalarFunction power(double c, double e, double lo, double hi);
    static ScalarFunction grand(double beta, double b, double lo, double scale = 1.0);
    static ScalarFunction affine(double a0, double a1, double lo, double hi);
    static ScalarFunction quadratic(double c0, double c1, double c2, double lo, double hi);
    static ScalarFunction exp_affine(double a0, double a1, double lo, double hi);
    static ScalarFunction tabulation(std::vector<double> x, std::vector<double> y,
                                     Interp rule = Interp::linear);
    static ScalarFunction callable(std::function<double(double)> f, double lo, double hi,
                                   std::string label);

    ScalarFunction with_monotonicity(Monotonicity m) const;
    ScalarFunction with_convexity(Convexity c) const;
    ScalarFunction with_growth(Growth g, double slope = 0.0) const;
    ScalarFunction with_outside_infinity() const;
    ScalarFunction with_right_open() const;
    ScalarFunction scaled(double c) const;  // pointwise c*f for c > 0, catalog-preserving

    double domain_lo() const;
    double domain_hi() const;  // kInf when unbounded
    bool right_open() const;
    Monotonicity monotonicity() const;
    Convexity convexity() const;
    Growth growth() const;
    double growth_slope() const;  // meaningful for Growth::linear only
    bool outside_is_infinity() const;
    const Tabulation* as_tabulation() const;
    const PowerForm* as_power() const;
    const AffineForm* as_affine() const;
    std::string describe() const;

    bool contains(double x) const;
    double operator()(double x) const;

    // Largest abscissa scans may touch: the approach point of a right-open
    // endpoint, p_max on unbounded domains, domain_hi otherwise.
    double scan_hi(double p_max = num::defaults::p_max) const;
    // Scan grid respecting the domain shape: right-dense toward an open finite
    // endpoint, log-spaced on wide positive domains, uniform otherwise.
    std::vector<double> scan_grid(int n, double p_max = num::defaults::p_max) const;

    // Cached strict-monotonicity scan in the declared (or inferred) direction.
    const num::MonotoneScan& verified_monotone_scan() const;

    struct Impl;  // defined in scalar_fn.cpp; opaque to callers

private:
    std::shared_ptr<const Impl> impl_;
    explicit ScalarFunction(std::shared_ptr<const Impl> impl);
};

struct MonotoneReport {
    bool ok;
    Monotonicity direction;  // the direction that was checked
    double where;
    double margin;
};

MonotoneReport check_monotone(const ScalarFunction& f,
                              int n = num::defaults::monotone_scan_n,
                              double p_max = num::defaults::p_max);

// Solves f(x) = z for strictly monotone f. Tabulations invert their
// interpolation rule exactly; other bodies use bracketing bisection after a
// cached verification scan. Throws NotMonotone or OutOfRange.
double invert_monotone(const ScalarFunction& f, double z,
                       double tol = num::defaults::invert_tol);

// Tabulates f on a strictly increasing grid inside its domain; monotonicity
// and convexity tags carry over only when the sampled values confirm them.
ScalarFunction tabulate(const ScalarFunction& f, const std::vector<double>& grid,
                        Interp rule = Interp::linear);

}  // namespace glsfun
