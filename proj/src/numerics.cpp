#include "glsfun/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace glsfun::num {

namespace {
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::vector<double> lin_grid(double lo, double hi, int n) {
    if (n < 2 || !(lo < hi)) throw std::invalid_argument("lin_grid: need n >= 2 and lo < hi");
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_grid: need 0 < lo < hi");
    if (n < 2) throw std::invalid_argument("log_grid: need n >= 2");
    const double llo = std::log(lo), lhi = std::log(hi);
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

std::vector<double> right_dense_grid(double lo, double hi, int n) {
    if (n < 2 || !(lo < hi)) throw std::invalid_argument("right_dense_grid: need n >= 2 and lo < hi");
    // Distances from hi decay geometrically from (hi-lo) to (hi-lo)*1e-12.
    const double span = hi - lo;
    const double q = std::pow(1e-12, 1.0 / (n - 1));
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = hi - span * std::pow(q, i);
    xs.front() = lo;
    return xs;
}

double kahan_sum(const std::vector<double>& xs) {
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

MaxResult golden_max(const std::function<double(double)>& f, double lo, double hi, int iters) {
    MaxResult best{lo, f(lo)};
    const double fhi = f(hi);
    if (fhi > best.value) best = {hi, fhi};
    if (!(hi > lo)) return best;
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    if (f1 > best.value) best = {x1, f1};
    if (f2 > best.value) best = {x2, f2};
    for (int i = 0; i < iters; ++i) {
        if (b - a <= 1e-15 * std::max({1.0, std::fabs(a), std::fabs(b)})) break;
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
            if (f2 > best.value) best = {x2, f2};
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
            if (f1 > best.value) best = {x1, f1};
        }
    }
    return best;
}

MaxResult scan_max(const std::function<double(double)>& f, const std::vector<double>& xs,
                   int golden_iters) {
    if (xs.empty()) throw std::invalid_argument("scan_max: empty grid");
    MaxResult best{xs[0], f(xs[0])};
    std::size_t arg = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double v = f(xs[i]);
        if (v > best.value) {
            best = {xs[i], v};
            arg = i;
        }
    }
    const double lo = xs[arg == 0 ? 0 : arg - 1];
    const double hi = xs[arg + 1 < xs.size() ? arg + 1 : arg];
    if (hi > lo) {
        const MaxResult refined = golden_max(f, lo, hi, golden_iters);
        if (refined.value > best.value) best = refined;
    }
    return best;
}

double bisect_increasing(const std::function<double(double)>& f, double z, double lo,
                         double hi, int iters) {
    double a = lo, b = hi;
    for (int i = 0; i < iters; ++i) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        if (f(m) < z)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

double one_sided_derivative(const std::function<double(double)>& f, double x, double h,
                            int side) {
    const double s = side >= 0 ? 1.0 : -1.0;
    return s * (-3.0 * f(x) + 4.0 * f(x + s * h) - f(x + 2.0 * s * h)) / (2.0 * h);
}

MonotoneScan scan_strictly_increasing(const std::function<double(double)>& f,
                                      const std::vector<double>& xs) {
    MonotoneScan r{true, xs.front(), std::numeric_limits<double>::infinity()};
    double prev = f(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double cur = f(xs[i]);
        const double step = cur - prev;
        if (step <= 0.0 && (r.ok || step < r.margin)) {
            r.ok = false;
            r.where = xs[i];
            r.margin = step;
        }
        prev = cur;
    }
    if (r.ok) r.margin = 0.0;
    return r;
}

double midpoint_convexity_defect(const std::function<double(double)>& f, double lo,
                                 double hi, int n) {
    if (n < 3) throw std::invalid_argument("midpoint_convexity_defect: need n >= 3");
    const std::vector<double> xs = lin_grid(lo, hi, n);
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = f(xs[i]);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i + 2 < n; ++i) {
        for (int j = i + 2; j < n; j += 2) {
            const double d = ys[(i + j) / 2] - 0.5 * (ys[i] + ys[j]);
            if (d > worst) worst = d;
        }
    }
    return worst;
}

double triple_convexity_defect(const std::function<double(double)>& f,
                               const std::vector<double>& xs) {
    if (xs.size() < 3) throw std::invalid_argument("triple_convexity_defect: need 3 points");
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
        const double a = xs[i], b = xs[i + 1], c = xs[i + 2];
        const double t = (b - a) / (c - a);
        const double chord = ys[i] + t * (ys[i + 2] - ys[i]);
        const double scale =
            std::max({std::fabs(ys[i]), std::fabs(ys[i + 1]), std::fabs(ys[i + 2]), 1e-300});
        const double d = (ys[i + 1] - chord) / scale;
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace glsfun::num
