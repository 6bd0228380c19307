#include "glsfun/inverse_problem.hpp"

#include <algorithm>
#include <cmath>

#include "glsfun/errors.hpp"

namespace glsfun {

namespace {

// Shifted log transform sampled against u = 1/phi: knots of
// u_j = 1/phi(delta_j), v_j = ln(C + 1/delta_j), ascending in u.
struct VStar {
    std::vector<double> u, v;
};

VStar build_vstar(const FundamentalFunction& ff, double C) {
    std::vector<double> deltas, phis;
    if (const Tabulation* t = ff.phi().as_tabulation()) {
        deltas = t->x;
        phis = t->y;
    } else {
        deltas = num::log_grid(ff.delta_lo(), ff.delta_hi(), 1025);
        phis.reserve(deltas.size());
        for (double d : deltas) phis.push_back(ff(d));
    }
    VStar vs;
    vs.u.reserve(deltas.size());
    vs.v.reserve(deltas.size());
    for (size_t k = deltas.size(); k-- > 0;) {
        double u = 1.0 / phis[k];
        if (!vs.u.empty() && !(u > vs.u.back())) continue;  // collapse roundoff ties
        vs.u.push_back(u);
        vs.v.push_back(std::log(C + 1.0 / deltas[k]));
    }
    if (vs.u.size() < 3)
        throw DomainError("fundamental data leaves fewer than three usable transform knots");
    return vs;
}

double interp_vstar(const VStar& vs, double u) {
    auto it = std::lower_bound(vs.u.begin(), vs.u.end(), u);
    if (it == vs.u.begin()) return vs.v.front();
    if (it == vs.u.end()) return vs.v.back();
    size_t j = size_t(it - vs.u.begin());
    double t = (u - vs.u[j - 1]) / (vs.u[j] - vs.u[j - 1]);
    return vs.v[j - 1] + t * (vs.v[j] - vs.v[j - 1]);
}

double vstar_defect(const VStar& vs) {
    return num::midpoint_convexity_defect([&](double u) { return interp_vstar(vs, u); },
                                          vs.u.front(), vs.u.back(), 257);
}

double vstar_scale(const VStar& vs) {
    double s = 0.0;
    for (double v : vs.v) s = std::max(s, std::abs(v));
    return std::max(s, 1e-300);
}

double V_of(const VStar& vs, double q, size_t* argmax = nullptr) {
    double best = -kInf;
    size_t bi = 0;
    for (size_t j = 0; j < vs.u.size(); ++j) {
        double val = q * vs.u[j] - vs.v[j];
        if (val > best) {
            best = val;
            bi = j;
        }
    }
    if (argmax) *argmax = bi;
    return best;
}

// p at which the affine piece of knot j takes over from knot j-1.
double takeover_p(const VStar& vs, size_t j) {
    double q = (vs.v[j] - vs.v[j - 1]) / (vs.u[j] - vs.u[j - 1]);
    return q * vs.u[j] - vs.v[j];
}

}  // namespace

FundamentalFunction::FundamentalFunction(ScalarFunction phi) : phi_(std::move(phi)) {
    double lo = phi_.domain_lo(), hi = phi_.domain_hi();
    if (!(lo > 0.0) || !std::isfinite(hi) || !(lo < hi))
        throw InvalidFundamental("fundamental candidate needs a bounded domain [lo, hi] with lo > 0; got [" +
                                 num::fmt(lo) + ", " + num::fmt(hi) + "]");
    auto rep = check_monotone(phi_);
    if (!rep.ok || rep.direction != Monotonicity::increasing)
        throw InvalidFundamental("fundamental candidate must be strictly increasing; scan found a violation near delta=" +
                                 num::fmt(rep.ok ? lo : rep.where));
    double top = phi_(hi);
    if (!(top > 0.0) || !std::isfinite(top))
        throw InvalidFundamental("fundamental candidate must be positive and finite at delta=" +
                                 num::fmt(hi));
    if (!(phi_(lo) > 0.0))
        throw InvalidFundamental("fundamental candidate must be positive on its window; value " +
                                 num::fmt(phi_(lo)) + " at delta=" + num::fmt(lo));

    // Decay screen at the origin: halving probes must either reach a value
    // negligible against phi(hi) or still be stepping down at a sustained
    // per-octave rate when the data window ends. Rates are normalized by the
    // probe gap in octaves so the final partial step to lo compares fairly.
    std::vector<double> px{hi}, pv{top};
    double d = hi;
    for (int k = 0; k < 60; ++k) {
        d *= 0.5;
        if (d < lo) break;
        px.push_back(d);
        pv.push_back(phi_(d));
    }
    if (px.back() > lo) {
        px.push_back(lo);
        pv.push_back(phi_(lo));
    }
    double minv = pv.back();
    bool pass = minv <= 1e-6 * top;
    if (!pass && pv.size() >= 3) {
        size_t n = pv.size();
        auto rate = [&](size_t i) {  // relative drop per octave across step i-1 -> i
            double w = std::max(std::log2(px[i - 1] / px[i]), 1e-12);
            return (pv[i - 1] - pv[i]) / (pv[i - 1] * w);
        };
        double s_last = rate(n - 1);
        double s_prev = rate(n - 2);
        pass = s_last >= 1e-3 && s_last >= 0.6 * s_prev;
    }
    if (!pass && pv.size() < 3) pass = true;  // window too narrow to judge
    if (!pass)
        throw InvalidFundamental(
            "fundamental candidate does not decay toward zero at the origin: value " +
            num::fmt(minv) + " at the left end of the window against " + num::fmt(top) +
            " at delta=" + num::fmt(hi));
}

ScalarFunction orlicz_from_fundamental(const FundamentalFunction& ff) {
    double zlo = 1.0 / ff(ff.delta_hi());
    double zhi = 1.0 / ff(ff.delta_lo());
    ScalarFunction phi = ff.phi();
    return ScalarFunction::callable(
               [phi](double z) { return 1.0 / invert_monotone(phi, 1.0 / z); }, zlo, zhi,
               "1/phi^(-1)(1/z)")
        .with_monotonicity(Monotonicity::increasing);
}

InversionResult psi_from_fundamental(const FundamentalFunction& ff, double C,
                                     const std::vector<double>& p_grid) {
    if (!(C > 0.0) || !std::isfinite(C))
        throw DomainError("shift constant must be positive and finite, got " + num::fmt(C));
    VStar vs = build_vstar(ff, C);
    double defect = vstar_defect(vs);
    double scale = vstar_scale(vs);
    if (defect > 1e-4 * scale)
        throw NonConvex("shifted log transform is not convex for C=" + num::fmt(C) +
                        ": midpoint defect " + num::fmt(defect) + " against scale " +
                        num::fmt(scale));

    size_t J = vs.u.size() - 1;
    double p_lo_cov = takeover_p(vs, 1);
    double p_hi_cov = takeover_p(vs, J);

    if (p_grid.size() < 2) throw DomainError("inversion needs at least two exponents");
    std::vector<double> psi_vals(p_grid.size());
    for (size_t i = 0; i < p_grid.size(); ++i) {
        double p = p_grid[i];
        if (V_of(vs, 0.0) >= p)
            throw OutOfRange("exponent below the window covered by the fundamental data", p,
                             p_lo_cov, p_hi_cov);
        double q_hi = 1.0;
        while (V_of(vs, q_hi) < p && q_hi < 1e300) q_hi *= 2.0;
        double q = num::bisect_increasing([&](double x) { return V_of(vs, x); }, p, 0.0, q_hi);
        size_t argmax = 0;
        V_of(vs, q, &argmax);
        if (argmax == 0 || argmax == J)
            throw OutOfRange("exponent outside the window covered by the fundamental data", p,
                             p_lo_cov, p_hi_cov);
        psi_vals[i] = p / q;
    }
    ScalarFunction tab = ScalarFunction::tabulation(p_grid, std::move(psi_vals));
    GeneratingFunction psi(tab, p_grid.front(), p_grid.back());
    return InversionResult{std::move(psi), C, defect, p_lo_cov, p_hi_cov};
}

InversionResult psi_from_fundamental(const FundamentalFunction& ff, double C) {
    VStar vs = build_vstar(ff, C);
    double lo = std::max(1.0, takeover_p(vs, 1) * (1.0 + 1e-9));
    double hi = takeover_p(vs, vs.u.size() - 1) * (1.0 - 1e-9);
    if (!(lo < hi))
        throw DomainError("covered exponent window [" + num::fmt(lo) + ", " + num::fmt(hi) +
                          "] is empty; the fundamental data spans too little of the origin");
    return psi_from_fundamental(ff, C, num::log_grid(lo, hi, 129));
}

ShiftChoice choose_C(const FundamentalFunction& ff) {
    auto Cs = num::log_grid(1e-4, 1e4, 81);
    Cs.push_back(1.0);
    std::sort(Cs.begin(), Cs.end());
    double best_rel = kInf, best_C = 0.0, best_defect = 0.0;
    bool any_pass = false;
    for (double C : Cs) {
        VStar vs = build_vstar(ff, C);
        double defect = vstar_defect(vs);
        double scale = vstar_scale(vs);
        double rel = defect / scale;
        if (defect <= 1e-4 * scale) any_pass = true;
        bool better = rel < best_rel - 1e-12 || (C == 1.0 && rel <= best_rel + 1e-12);
        if (better) {
            best_rel = rel;
            best_C = C;
            best_defect = defect;
        }
    }
    if (!any_pass)
        throw AllNonConvex("no shift constant in [1e-4, 1e4] makes the log transform convex");
    return ShiftChoice{best_C, best_defect};
}

}  // namespace glsfun
