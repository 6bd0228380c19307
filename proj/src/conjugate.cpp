#include "glsfun/conjugate.hpp"

#include <algorithm>
#include <cmath>

namespace glsfun {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

LegendreEval conjugate_linear_tab(const Tabulation& t, double q) {
    // The objective p*q - g(p) is piecewise linear, so its sup sits on a knot.
    double best = -kInf, arg = t.x.front();
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        const double v = t.x[i] * q - t.y[i];
        if (v > best) {
            best = v;
            arg = t.x[i];
        }
    }
    return {best, arg};
}

}  // namespace

LegendreEval legendre_eval(const ScalarFunction& g, double q) {
    q = std::fabs(q);

    if (const Tabulation* t = g.as_tabulation(); t && t->rule == Interp::linear)
        return conjugate_linear_tab(*t, q);

    const bool unbounded = g.domain_hi() == kInf;
    if (unbounded) {
        if (const AffineForm* a = g.as_affine()) {
            if (q > a->a1) return {kInf, kNaN};
            if (q == a->a1) return {-a->a0, g.domain_lo()};
            // q < slope: objective decreasing, attained at the left endpoint.
            return {g.domain_lo() * q - g(g.domain_lo()), g.domain_lo()};
        }
        if (g.growth() == Growth::sublinear && q > 0.0) return {kInf, kNaN};
        if (g.growth() == Growth::linear && q > g.growth_slope()) return {kInf, kNaN};
    }

    const auto objective = [&](double p) {
        const double gp = g(p);
        return std::isfinite(gp) ? p * q - gp : -kInf;
    };
    const int n = g.convexity() == Convexity::convex ? 65 : 257;
    std::vector<double> grid;
    if (const Tabulation* t = g.as_tabulation())
        grid = t->x;  // loglog tabulation: knots bracket the smooth pieces
    else
        grid = g.scan_grid(n);

    std::size_t arg = 0;
    double best = objective(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double v = objective(grid[i]);
        if (v > best) {
            best = v;
            arg = i;
        }
    }

    const bool at_boundary = arg + 1 == grid.size();
    if (at_boundary && grid.size() >= 2 && (unbounded || g.right_open())) {
        // A sup that is merely stationary at the window edge is attained; a
        // positive one-sided slope there means the true sup lies beyond the
        // window with no divergence certificate to name it.
        const double zh = grid.back();
        const double step = std::max(zh, 1.0) * 1e-9;
        const double inner = std::max(grid.front(), zh - step);
        const double slope = (objective(zh) - objective(inner)) / (zh - inner);
        if (std::isfinite(slope) && slope > 1e-6 * std::max(1.0, q))
            throw TruncationUncertain(
                "conjugate: sup of p*q - g(p) still climbing at p=" + num::fmt(zh) +
                    " for q=" + num::fmt(q) + ", g=" + g.describe() +
                    "; best value seen " + num::fmt(best),
                best);
    }

    const double lo = grid[arg == 0 ? 0 : arg - 1];
    const double hi = grid[at_boundary ? arg : arg + 1];
    num::MaxResult refined{grid[arg], best};
    if (hi > lo) {
        const num::MaxResult r = num::golden_max(objective, lo, hi, 200);
        if (r.value > refined.value) refined = r;
    }
    return {refined.value, refined.arg};
}

double legendre(const ScalarFunction& g, double q) { return legendre_eval(g, q).value; }

ConjugateResult legendre_grid(const ScalarFunction& g, const std::vector<double>& q_grid) {
    ConjugateResult r;
    r.q_grid = q_grid;
    r.values.reserve(q_grid.size());
    r.argmax_trace.reserve(q_grid.size());
    for (double q : q_grid) {
        const LegendreEval e = legendre_eval(g, q);
        r.values.push_back(e.value);
        r.argmax_trace.push_back(e.argmax);
    }
    return r;
}

double biconjugate_at(const ScalarFunction& g, double p) {
    const auto gstar = [&](double q) { return legendre_eval(g, q).value; };
    const auto objective = [&](double q) {
        const double v = gstar(q);
        return std::isfinite(v) ? p * q - v : -kInf;
    };

    // The argmax q* is a subgradient of g at p; expand until the objective
    // turns over (it is concave in q).
    const double lo = g.domain_lo();
    const double hi = g.scan_hi();
    const double h = 1e-4 * std::max(1.0, std::fabs(p));
    const double pl = std::max(lo, std::min(p - h, hi - 2.0 * h));
    const double slope_est = (g(std::min(pl + 2.0 * h, hi)) - g(pl)) / 2.0 / h;
    double q_hi = std::max(1.0, 2.0 * std::fabs(slope_est));
    for (int i = 0; i < 60; ++i) {
        const double v = gstar(q_hi);
        if (!std::isfinite(v)) break;
        if (objective(q_hi) < objective(q_hi * 0.99)) break;
        q_hi *= 2.0;
    }

    std::vector<double> qs = num::lin_grid(0.0, q_hi, 129);
    if (const AffineForm* a = g.as_affine(); a && a->a1 >= 0.0 && a->a1 <= q_hi) {
        qs.push_back(a->a1);  // the only finite conjugate point on unbounded domains
        std::sort(qs.begin(), qs.end());
    }
    const num::MaxResult best = num::scan_max(objective, qs, 200);
    return best.value;
}

ScalarFunction biconjugate(const ScalarFunction& g, const std::vector<double>& p_grid) {
    std::vector<double> vals(p_grid.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i) vals[i] = biconjugate_at(g, p_grid[i]);
    ScalarFunction tab = ScalarFunction::tabulation(p_grid, vals, Interp::linear);
    return tab.with_convexity(Convexity::convex);
}

double convexity_defect(const ScalarFunction& g, int n) {
    return num::midpoint_convexity_defect([&](double x) { return g(x); }, g.domain_lo(),
                                          g.scan_hi(), n);
}

}  // namespace glsfun
