#include "glsfun/scalar_fn.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace glsfun {

using num::fmt;

struct ScalarFunction::Impl {
    double lo = 0.0, hi = kInf;
    bool open_right = false;
    std::variant<PowerForm, GrandForm, AffineForm, QuadraticForm, ExpAffineForm, Tabulation,
                 Callable>
        body;
    Monotonicity mono = Monotonicity::unknown;
    Convexity conv = Convexity::unknown;
    Growth growth = Growth::unknown;
    double growth_slope = 0.0;
    bool outside_inf = false;

    mutable std::mutex scan_mu;
    mutable bool scanned = false;
    mutable num::MonotoneScan scan{true, 0.0, 0.0};
    mutable Monotonicity scan_direction = Monotonicity::unknown;

    Impl() = default;
    Impl(const Impl& o)
        : lo(o.lo),
          hi(o.hi),
          open_right(o.open_right),
          body(o.body),
          mono(o.mono),
          conv(o.conv),
          growth(o.growth),
          growth_slope(o.growth_slope),
          outside_inf(o.outside_inf) {}

    double eval(double x) const {
        return std::visit(
            [x](const auto& form) -> double {
                using T = std::decay_t<decltype(form)>;
                if constexpr (std::is_same_v<T, PowerForm>) {
                    return form.c * std::pow(x, form.e);
                } else if constexpr (std::is_same_v<T, GrandForm>) {
                    return form.scale * std::pow(form.b - x, -form.beta);
                } else if constexpr (std::is_same_v<T, AffineForm>) {
                    return form.a0 + form.a1 * x;
                } else if constexpr (std::is_same_v<T, QuadraticForm>) {
                    return form.c0 + x * (form.c1 + x * form.c2);
                } else if constexpr (std::is_same_v<T, ExpAffineForm>) {
                    return std::exp(form.a0 + form.a1 * x);
                } else if constexpr (std::is_same_v<T, Tabulation>) {
                    const auto& t = form;
                    const auto it = std::lower_bound(t.x.begin(), t.x.end(), x);
                    std::size_t j = it - t.x.begin();
                    if (j < t.x.size() && t.x[j] == x) return t.y[j];
                    // x lies strictly inside segment (j-1, j)
                    const double x0 = t.x[j - 1], x1 = t.x[j];
                    const double y0 = t.y[j - 1], y1 = t.y[j];
                    if (t.rule == Interp::linear)
                        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
                    const double lt = (std::log(x) - std::log(x0)) / (std::log(x1) - std::log(x0));
                    return std::exp(std::log(y0) + lt * (std::log(y1) - std::log(y0)));
                } else {
                    return form.f(x);
                }
            },
            body);
    }
};

ScalarFunction::ScalarFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

std::shared_ptr<ScalarFunction::Impl> make_impl() {
    return std::make_shared<ScalarFunction::Impl>();
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

}  // namespace

ScalarFunction ScalarFunction::power(double c, double e, double lo, double hi) {
    require(lo < hi, "power: need lo < hi");
    auto impl = make_impl();
    impl->lo = lo;
    impl->hi = hi;
    impl->body = PowerForm{c, e};
    if (c > 0.0 && lo >= 0.0) {
        impl->mono = e > 0.0 ? Monotonicity::increasing
                             : (e < 0.0 ? Monotonicity::decreasing : Monotonicity::unknown);
        impl->conv = (e >= 1.0 || e <= 0.0) ? Convexity::convex : Convexity::concave;
        if (hi == kInf)
            impl->growth = e > 1.0  ? Growth::superlinear
                           : e == 1.0 ? Growth::linear
                                      : Growth::sublinear;
        else
            impl->growth = Growth::bounded_domain;
        if (impl->growth == Growth::linear) impl->growth_slope = c;
    } else if (hi < kInf) {
        impl->growth = Growth::bounded_domain;
    }
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::grand(double beta, double b, double lo, double scale) {
    require(lo < b, "grand: need lo < b");
    require(beta > 0.0 && scale > 0.0, "grand: need beta > 0 and scale > 0");
    auto impl = make_impl();
    impl->lo = lo;
    impl->hi = b;
    impl->open_right = true;  // pole at b
    impl->body = GrandForm{beta, b, scale};
    impl->mono = Monotonicity::increasing;
    impl->conv = Convexity::convex;
    impl->growth = Growth::bounded_domain;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::affine(double a0, double a1, double lo, double hi) {
    require(lo < hi, "affine: need lo < hi");
    auto impl = make_impl();
    impl->lo = lo;
    impl->hi = hi;
    impl->body = AffineForm{a0, a1};
    impl->mono = a1 > 0.0 ? Monotonicity::increasing
                          : (a1 < 0.0 ? Monotonicity::decreasing : Monotonicity::unknown);
    impl->conv = Convexity::convex;  // affine is both; convex suffices downstream
    impl->growth = hi == kInf ? Growth::linear : Growth::bounded_domain;
    impl->growth_slope = a1;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::quadratic(double c0, double c1, double c2, double lo, double hi) {
    require(lo < hi, "quadratic: need lo < hi");
    auto impl = make_impl();
    impl->lo = lo;
    impl->hi = hi;
    impl->body = QuadraticForm{c0, c1, c2};
    if (c2 > 0.0) {
        impl->conv = Convexity::convex;
        if (c1 + 2.0 * c2 * lo >= 0.0) impl->mono = Monotonicity::increasing;
        impl->growth = hi == kInf ? Growth::superlinear : Growth::bounded_domain;
    } else if (c2 < 0.0) {
        impl->conv = Convexity::concave;
        if (hi < kInf) impl->growth = Growth::bounded_domain;
    } else if (hi < kInf) {
        impl->growth = Growth::bounded_domain;
    }
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::exp_affine(double a0, double a1, double lo, double hi) {
    require(lo < hi, "exp_affine: need lo < hi");
    auto impl = make_impl();
    impl->lo = lo;
    impl->hi = hi;
    impl->body = ExpAffineForm{a0, a1};
    impl->mono = a1 > 0.0 ? Monotonicity::increasing
                          : (a1 < 0.0 ? Monotonicity::decreasing : Monotonicity::unknown);
    impl->conv = Convexity::convex;
    impl->growth = hi < kInf          ? Growth::bounded_domain
                   : a1 > 0.0         ? Growth::superlinear
                                      : Growth::sublinear;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::tabulation(std::vector<double> x, std::vector<double> y,
                                          Interp rule) {
    require(x.size() == y.size(), "tabulation: abscissae/value size mismatch");
    require(x.size() >= 2, "tabulation: need at least two knots");
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(std::isfinite(x[i]) && std::isfinite(y[i]),
                "tabulation: knots must be finite");
        if (i) require(x[i] > x[i - 1], "tabulation: abscissae must be strictly increasing");
        if (rule == Interp::loglog)
            require(x[i] > 0.0 && y[i] > 0.0, "tabulation: loglog needs positive knots");
    }
    auto impl = make_impl();
    impl->lo = x.front();
    impl->hi = x.back();
    impl->growth = Growth::bounded_domain;
    impl->body = Tabulation{std::move(x), std::move(y), rule};
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::callable(std::function<double(double)> f, double lo, double hi,
                                        std::string label) {
    require(lo < hi, "callable: need lo < hi");
    auto impl = make_impl();
    impl->lo = lo;
    impl->hi = hi;
    if (hi < kInf) impl->growth = Growth::bounded_domain;
    impl->body = Callable{std::move(f), std::move(label)};
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::with_monotonicity(Monotonicity m) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->mono = m;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::with_convexity(Convexity c) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->conv = c;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::with_growth(Growth g, double slope) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->growth = g;
    impl->growth_slope = slope;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::with_outside_infinity() const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->outside_inf = true;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::with_right_open() const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->open_right = true;
    return ScalarFunction(impl);
}

ScalarFunction ScalarFunction::scaled(double c) const {
    require(c > 0.0, "scaled: need c > 0");
    auto impl = std::make_shared<Impl>(*impl_);
    if (auto* p = std::get_if<PowerForm>(&impl->body)) {
        p->c *= c;
    } else if (auto* g = std::get_if<GrandForm>(&impl->body)) {
        g->scale *= c;
    } else if (auto* a = std::get_if<AffineForm>(&impl->body)) {
        a->a0 *= c;
        a->a1 *= c;
    } else if (auto* q = std::get_if<QuadraticForm>(&impl->body)) {
        q->c0 *= c;
        q->c1 *= c;
        q->c2 *= c;
    } else if (auto* e = std::get_if<ExpAffineForm>(&impl->body)) {
        e->a0 += std::log(c);
    } else if (auto* t = std::get_if<Tabulation>(&impl->body)) {
        for (double& y : t->y) y *= c;
    } else {
        auto inner = impl_;
        const std::string label = "scaled(" + fmt(c) + ", " + describe() + ")";
        impl->body = Callable{[inner, c](double x) { return c * inner->eval(x); }, label};
    }
    if (impl->growth == Growth::linear) impl->growth_slope *= c;
    return ScalarFunction(impl);
}

double ScalarFunction::domain_lo() const { return impl_->lo; }
double ScalarFunction::domain_hi() const { return impl_->hi; }
bool ScalarFunction::right_open() const { return impl_->open_right; }
Monotonicity ScalarFunction::monotonicity() const { return impl_->mono; }
Convexity ScalarFunction::convexity() const { return impl_->conv; }
Growth ScalarFunction::growth() const { return impl_->growth; }
double ScalarFunction::growth_slope() const { return impl_->growth_slope; }
bool ScalarFunction::outside_is_infinity() const { return impl_->outside_inf; }

const Tabulation* ScalarFunction::as_tabulation() const {
    return std::get_if<Tabulation>(&impl_->body);
}
const PowerForm* ScalarFunction::as_power() const { return std::get_if<PowerForm>(&impl_->body); }
const AffineForm* ScalarFunction::as_affine() const {
    return std::get_if<AffineForm>(&impl_->body);
}

std::string ScalarFunction::describe() const {
    return std::visit(
        [](const auto& form) -> std::string {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, PowerForm>) {
                return "power(c=" + fmt(form.c) + ", e=" + fmt(form.e) + ")";
            } else if constexpr (std::is_same_v<T, GrandForm>) {
                return (form.scale == 1.0 ? std::string() : fmt(form.scale) + "*") +
                       "(b-x)^(-beta), beta=" + fmt(form.beta) + ", b=" + fmt(form.b);
            } else if constexpr (std::is_same_v<T, AffineForm>) {
                return "affine(" + fmt(form.a0) + " + " + fmt(form.a1) + "*x)";
            } else if constexpr (std::is_same_v<T, QuadraticForm>) {
                return "quadratic(" + fmt(form.c0) + ", " + fmt(form.c1) + ", " + fmt(form.c2) +
                       ")";
            } else if constexpr (std::is_same_v<T, ExpAffineForm>) {
                return "exp(" + fmt(form.a0) + " + " + fmt(form.a1) + "*x)";
            } else if constexpr (std::is_same_v<T, Tabulation>) {
                return "tabulation(" + std::to_string(form.x.size()) + " knots, " +
                       (form.rule == Interp::linear ? "linear" : "loglog") + ")";
            } else {
                return form.label;
            }
        },
        impl_->body);
}

bool ScalarFunction::contains(double x) const {
    if (!(x >= impl_->lo)) return false;
    if (impl_->hi == kInf) return std::isfinite(x);
    return impl_->open_right ? x < impl_->hi : x <= impl_->hi;
}

double ScalarFunction::operator()(double x) const {
    if (!contains(x)) {
        if (impl_->outside_inf) return kInf;
        throw DomainError("evaluate: x=" + fmt(x) + " outside domain [" + fmt(impl_->lo) + ", " +
                          fmt(impl_->hi) + (impl_->open_right ? ")" : "]") + " of " + describe());
    }
    return impl_->eval(x);
}

double ScalarFunction::scan_hi(double p_max) const {
    if (impl_->hi == kInf) return std::max(p_max, impl_->lo + 1.0);
    if (impl_->open_right) return impl_->hi - (impl_->hi - impl_->lo) * 1e-12;
    return impl_->hi;
}

std::vector<double> ScalarFunction::scan_grid(int n, double p_max) const {
    const double lo = impl_->lo;
    if (impl_->open_right && impl_->hi < kInf) return num::right_dense_grid(lo, impl_->hi, n);
    const double hi = scan_hi(p_max);
    if (lo > 0.0 && hi / lo >= 100.0) return num::log_grid(lo, hi, n);
    return num::lin_grid(lo, hi, n);
}

const num::MonotoneScan& ScalarFunction::verified_monotone_scan() const {
    std::lock_guard<std::mutex> lock(impl_->scan_mu);
    if (!impl_->scanned) {
        Monotonicity dir = impl_->mono;
        const auto xs = scan_grid(num::defaults::monotone_scan_n);
        if (dir == Monotonicity::unknown) {
            dir = impl_->eval(xs.back()) >= impl_->eval(xs.front()) ? Monotonicity::increasing
                                                                    : Monotonicity::decreasing;
        }
        if (dir == Monotonicity::increasing) {
            impl_->scan = num::scan_strictly_increasing([this](double x) { return impl_->eval(x); },
                                                        xs);
        } else {
            impl_->scan = num::scan_strictly_increasing(
                [this](double x) { return -impl_->eval(x); }, xs);
        }
        impl_->scan_direction = dir;
        impl_->scanned = true;
    }
    return impl_->scan;
}

MonotoneReport check_monotone(const ScalarFunction& f, int n, double p_max) {
    Monotonicity dir = f.monotonicity();
    const auto xs = f.scan_grid(n, p_max);
    if (dir == Monotonicity::unknown)
        dir = f(xs.back()) >= f(xs.front()) ? Monotonicity::increasing : Monotonicity::decreasing;
    num::MonotoneScan s =
        dir == Monotonicity::increasing
            ? num::scan_strictly_increasing([&](double x) { return f(x); }, xs)
            : num::scan_strictly_increasing([&](double x) { return -f(x); }, xs);
    if (dir == Monotonicity::decreasing) s.margin = -s.margin;
    return MonotoneReport{s.ok, dir, s.where, s.margin};
}

namespace {

// Exact inversion of the interpolation rule; knots return their abscissa.
double invert_tabulation(const ScalarFunction& f, const Tabulation& t, double z) {
    const bool increasing = t.y.back() >= t.y.front();
    for (std::size_t i = 1; i < t.y.size(); ++i) {
        const bool step_up = t.y[i] > t.y[i - 1];
        if (step_up != increasing || t.y[i] == t.y[i - 1])
            throw NotMonotone("invert_monotone: tabulation is not strictly monotone near x=" +
                                  num::fmt(t.x[i]) + " (step " + num::fmt(t.y[i] - t.y[i - 1]) +
                                  ")",
                              t.x[i], increasing ? t.y[i] - t.y[i - 1] : t.y[i - 1] - t.y[i]);
    }
    const double y_lo = increasing ? t.y.front() : t.y.back();
    const double y_hi = increasing ? t.y.back() : t.y.front();
    if (z < y_lo || z > y_hi)
        throw OutOfRange("invert_monotone: z=" + num::fmt(z) + " outside attained range [" +
                             num::fmt(y_lo) + ", " + num::fmt(y_hi) + "] of " + f.describe(),
                         z, y_lo, y_hi);
    // Locate the bracketing segment.
    std::size_t j = 1;
    if (increasing) {
        while (j + 1 < t.y.size() && t.y[j] < z) ++j;
    } else {
        while (j + 1 < t.y.size() && t.y[j] > z) ++j;
    }
    const double x0 = t.x[j - 1], x1 = t.x[j];
    const double y0 = t.y[j - 1], y1 = t.y[j];
    if (z == y0) return x0;
    if (z == y1) return x1;
    if (t.rule == Interp::linear) return x0 + (x1 - x0) * (z - y0) / (y1 - y0);
    const double lt = (std::log(z) - std::log(y0)) / (std::log(y1) - std::log(y0));
    return std::exp(std::log(x0) + lt * (std::log(x1) - std::log(x0)));
}

}  // namespace

double invert_monotone(const ScalarFunction& f, double z, double tol) {
    if (const Tabulation* t = f.as_tabulation()) return invert_tabulation(f, *t, z);

    const num::MonotoneScan& scan = f.verified_monotone_scan();
    if (!scan.ok)
        throw NotMonotone("invert_monotone: " + f.describe() +
                              " is not strictly monotone; worst step at x=" + num::fmt(scan.where) +
                              " (increment " + num::fmt(scan.margin) + ")",
                          scan.where, scan.margin);

    const double lo = f.domain_lo();
    const double hi = f.scan_hi();
    const double f_lo = f(lo), f_hi = f(hi);
    // Same direction inference the verification scan used.
    const bool increasing = f.monotonicity() == Monotonicity::unknown
                                ? f_hi >= f_lo
                                : f.monotonicity() == Monotonicity::increasing;
    const double y_lo = increasing ? f_lo : f_hi;
    const double y_hi = increasing ? f_hi : f_lo;
    const double slack = tol * std::max(1.0, std::fabs(z));
    if (z < y_lo - slack || z > y_hi + slack)
        throw OutOfRange("invert_monotone: z=" + num::fmt(z) + " outside attained range [" +
                             num::fmt(y_lo) + ", " + num::fmt(y_hi) + "] of " + f.describe(),
                         z, y_lo, y_hi);

    const double x = increasing
                         ? num::bisect_increasing([&](double u) { return f(u); }, z, lo, hi)
                         : num::bisect_increasing([&](double u) { return -f(u); }, -z, lo, hi);
    const double resid = std::fabs(f(x) - z);
    if (resid > std::max(slack, 1e-9 * std::max(std::fabs(y_lo), std::fabs(y_hi))))
        throw Error("invert_monotone: residual " + num::fmt(resid) + " exceeds tolerance for " +
                    f.describe());
    return x;
}

ScalarFunction tabulate(const ScalarFunction& f, const std::vector<double>& grid, Interp rule) {
    if (grid.size() < 2) throw DomainError("tabulate: need at least two grid points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i && !(grid[i] > grid[i - 1]))
            throw DomainError("tabulate: grid must be strictly increasing (at index " +
                              std::to_string(i) + ")");
        if (!f.contains(grid[i]))
            throw DomainError("tabulate: grid point " + num::fmt(grid[i]) + " outside domain of " +
                              f.describe());
    }
    std::vector<double> ys(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) ys[i] = f(grid[i]);

    ScalarFunction tab = ScalarFunction::tabulation(grid, ys, rule);

    // Carry tags only when the sampled values confirm them.
    bool strictly_up = true, strictly_down = true;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        if (!(ys[i] > ys[i - 1])) strictly_up = false;
        if (!(ys[i] < ys[i - 1])) strictly_down = false;
    }
    if (f.monotonicity() == Monotonicity::increasing && strictly_up)
        tab = tab.with_monotonicity(Monotonicity::increasing);
    if (f.monotonicity() == Monotonicity::decreasing && strictly_down)
        tab = tab.with_monotonicity(Monotonicity::decreasing);
    if (f.convexity() != Convexity::unknown) {
        double prev_slope = (ys[1] - ys[0]) / (grid[1] - grid[0]);
        double max_abs = std::fabs(prev_slope);
        bool slopes_up = true, slopes_down = true;
        for (std::size_t i = 2; i < grid.size(); ++i) {
            const double s = (ys[i] - ys[i - 1]) / (grid[i] - grid[i - 1]);
            max_abs = std::max(max_abs, std::fabs(s));
            const double tol = 1e-12 * std::max(1.0, max_abs);
            if (s < prev_slope - tol) slopes_up = false;
            if (s > prev_slope + tol) slopes_down = false;
            prev_slope = s;
        }
        if (f.convexity() == Convexity::convex && slopes_up)
            tab = tab.with_convexity(Convexity::convex);
        if (f.convexity() == Convexity::concave && slopes_down)
            tab = tab.with_convexity(Convexity::concave);
    }
    return tab;
}

}  // namespace glsfun
