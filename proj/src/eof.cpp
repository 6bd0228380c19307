#include "glsfun/eof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glsfun/errors.hpp"

namespace glsfun {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Signed conjugate h*(y) = sup_p (y p - h(p)) with h = p ln psi, written as
// sup_p p (y - ln psi(p)) for conditioning. The grid is the finite-psi part
// of the support grid. Unlike the Young-Fenchel transform this must accept
// negative y (u < 1), where the sup sits at the left support edge.
double hstar(const GeneratingFunction& psi, const std::vector<double>& grid, double y) {
    auto obj = [&](double p) {
        double v = psi(p);
        if (!std::isfinite(v) || v <= 0.0) return -kInf;
        return p * (y - std::log(v));
    };
    size_t arg = 0;
    double best = obj(grid[0]);
    for (size_t i = 1; i < grid.size(); ++i) {
        double v = obj(grid[i]);
        if (v > best) {
            best = v;
            arg = i;
        }
    }
    if (arg + 1 == grid.size() && std::isinf(psi.b())) {
        double ph = grid.back();
        double inner = std::max(grid.front(), ph * (1.0 - 1e-9));
        double slope = (obj(ph) - obj(inner)) / (ph - inner);
        if (std::isfinite(slope) && slope > 1e-6 * std::max(1.0, std::abs(y)))
            throw TruncationUncertain(
                "exponential-class transform still climbing at p=" + num::fmt(ph) +
                    " for ln(u)=" + num::fmt(y),
                best);
    }
    double lo = grid[arg == 0 ? 0 : arg - 1];
    double hi = grid[arg + 1 == grid.size() ? arg : arg + 1];
    if (hi > lo) {
        auto r = num::golden_max(obj, lo, hi);
        if (r.value > best) best = r.value;
    }
    return best;
}

std::vector<double> finite_psi_grid(const GeneratingFunction& psi, int n) {
    std::vector<double> grid;
    for (double p : psi.support_grid(n)) {
        double v = psi(p);
        if (std::isfinite(v) && v > 0.0) grid.push_back(p);
    }
    if (grid.size() < 8)
        throw DomainError("generating function has too little representable support");
    return grid;
}

}  // namespace

WFunction::WFunction(ScalarFunction w) : w_(std::move(w)), slope_growing_(false), slope_hi_(kNaN) {
    if (w_.domain_lo() != 2.0)
        throw DomainError("weight function must be defined from z=2 upward; domain starts at " +
                          num::fmt(w_.domain_lo()));
    auto grid = w_.scan_grid(num::defaults::monotone_scan_n);
    auto eval = [this](double z) { return w_(z); };
    auto inc = num::scan_strictly_increasing(eval, grid);
    if (!inc.ok)
        throw NotMonotone("weight function must be strictly increasing; step of " +
                              num::fmt(inc.margin) + " ending at z=" + num::fmt(inc.where),
                          inc.where, inc.margin);
    double scale = 1.0;
    for (double z : grid) scale = std::max(scale, std::abs(w_(z)));
    double defect = num::midpoint_convexity_defect(eval, 2.0, w_.scan_hi(), 513);
    if (defect > 1e-8 * scale)
        throw NonConvex("weight function must be convex; midpoint defect " + num::fmt(defect) +
                        " against scale " + num::fmt(scale));

    double hi = w_.scan_hi();
    double d_hi = derivative(hi);
    double d_mid = derivative(2.0 + 0.5 * (hi - 2.0));
    slope_growing_ = d_hi > d_mid * (1.0 + 1e-6) + 1e-12;
    if (const AffineForm* a = w_.as_affine()) {
        slope_growing_ = false;
        slope_hi_ = a->a1;
    } else {
        slope_hi_ = slope_growing_ ? kNaN : d_hi;
    }
}

double WFunction::derivative(double z) const {
    double h = 1e-6 * std::max(1.0, std::abs(z));
    double lo = w_.domain_lo(), hi = w_.scan_hi();
    auto eval = [this](double x) { return w_(x); };
    if (z - h < lo) return num::one_sided_derivative(eval, z, h, +1);
    if (z + h > hi) return num::one_sided_derivative(eval, z, h, -1);
    return (w_(z + h) - w_(z - h)) / (2.0 * h);
}

OrliczFunction eof_from_W(const WFunction& w) {
    double kappa = w.derivative(2.0);
    if (!(kappa >= 1.0 - 1e-9))
        throw ExtensionNotConvex(
            "power extension exponent below one: W'(2)=" + num::fmt(kappa), kappa);
    if (std::abs(kappa - std::round(kappa)) <= 1e-9) kappa = std::round(kappa);
    double c = std::exp(w(2.0) - 2.0 * kappa);
    double e2 = std::exp(2.0);
    ScalarFunction wf = w.fn();
    auto f = [wf, kappa, c, e2](double u) {
        if (u < e2) return u == 0.0 ? 0.0 : c * std::pow(u, kappa);
        double z = std::max(std::log(u), 2.0);  // clamp seam roundoff into the domain
        if (!wf.contains(z)) return kInf;       // tabulated weights end; treat as overflow
        return std::exp(wf(z));
    };
    return OrliczFunction(
        ScalarFunction::callable(f, 0.0, kInf, "exp(W(ln u)) with power extension")
            .with_monotonicity(Monotonicity::increasing)
            .with_convexity(Convexity::convex));
}

AlphaPatch alpha_patch(const OrliczFunction& N, double alpha) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
        throw DomainError("patch exponent must satisfy alpha >= 1, got " + num::fmt(alpha));
    const ScalarFunction& right = N.right_branch();
    double cap = right.domain_hi();
    double hi = std::min(std::exp(2.0), cap / (1.0 + 1e-5));
    auto Nv = [&](double u) { return right(u); };
    auto dN = [&](double u) {
        double h = u * 1e-6;
        return (Nv(u + h) - Nv(u - h)) / (2.0 * h);
    };

    double n_ref = Nv(std::min(1.0, hi));
    double floor_val = 1e-8 * n_ref;
    auto grid = num::log_grid(hi * 1e-10, hi, 2049);
    double C5 = kNaN, min_E = kInf, min_at = kNaN;
    for (size_t k = grid.size(); k-- > 0;) {
        double u = grid[k];
        double nv = Nv(u);
        if (nv < floor_val) break;  // below the evaluation noise floor
        double E = u * dN(u) / nv;
        if (E < min_E) {
            min_E = E;
            min_at = u;
        }
        if (E <= alpha * (1.0 + 1e-9)) {
            C5 = u;
            break;
        }
    }
    if (!std::isfinite(C5))
        throw NoValidC5("elasticity never drops to alpha=" + num::fmt(alpha) +
                            " on the patch window; minimum " + num::fmt(min_E) + " at u=" +
                            num::fmt(min_at),
                        min_E, min_at);

    double C4 = dN(C5);
    double NC5 = Nv(C5);
    double C3raw = NC5 - C4 * C5;
    double C1, C2, C3;
    if (alpha == 1.0) {
        if (std::abs(C3raw) > 1e-9 * NC5)
            throw NoValidC5("tangent at the matching point misses the origin by " +
                                num::fmt(C3raw) + "; no linear patch exists",
                            Nv(C5) > 0 ? C5 * C4 / NC5 : kNaN, C5);
        C3 = 0.0;
        C2 = C5;
        C1 = C4;
    } else {
        if (!(C3raw < 0.0))
            throw NoValidC5("base function is linear near the matching point; no power patch with alpha=" +
                                num::fmt(alpha) + " exists",
                            C5 * C4 / NC5, C5);
        C3 = C3raw;
        C2 = alpha * (-C3) / (C4 * (alpha - 1.0));
        C1 = C4 / (alpha * std::pow(C2, alpha - 1.0));
    }

    ScalarFunction base = right;
    auto pf = [base, C1, C2, C3, C4, C5, alpha](double u) {
        if (u <= C2) return u == 0.0 ? 0.0 : C1 * std::pow(u, alpha);
        if (u <= C5) return C4 * u + C3;
        return base.contains(u) ? base(u) : kInf;
    };
    OrliczFunction patched(
        ScalarFunction::callable(pf, 0.0, kInf, "patched " + base.describe())
            .with_monotonicity(Monotonicity::increasing)
            .with_convexity(Convexity::convex));
    return AlphaPatch{alpha, C1, C2, C3, C4, C5, std::move(patched)};
}

OrliczFunction trudinger(double m, int j) {
    if (!(m > 0.0) || !std::isfinite(m))
        throw DomainError("trudinger exponent must be positive, got " + num::fmt(m));
    if (j < 0) throw DomainError("trudinger cannot drop a negative number of terms");
    auto f = [m, j](double u) {
        if (u == 0.0) return 0.0;
        double x = std::pow(u, m);
        if (x <= 1.0) {
            double term = 1.0;
            for (int l = 1; l <= j + 1; ++l) term *= x / double(l);
            double s = 0.0;
            int l = j + 1;
            while (term > 0.0) {
                s += term;
                ++l;
                term *= x / double(l);
                if (term < s * 1e-18) break;
            }
            return s;
        }
        double s = std::exp(x);
        double t = 1.0;
        for (int l = 0; l <= j; ++l) {
            s -= t;
            t *= x / double(l + 1);
        }
        return s;
    };
    return OrliczFunction(
        ScalarFunction::callable(f, 0.0, kInf, "exp(u^m) Taylor tail")
            .with_monotonicity(Monotonicity::increasing));
}

GeneratingFunction psi_from_W(const WFunction& w, double alpha) {
    if (!(alpha >= 1.0))
        throw DomainError("support must start at alpha >= 1, got " + num::fmt(alpha));
    double b = kInf;
    double s = w.asymptotic_slope();
    if (!w.slope_still_growing() && std::isfinite(s)) b = s;
    ScalarFunction wf = w.fn();
    ScalarFunction psi = ScalarFunction::callable(
        [wf](double p) { return std::exp(legendre(wf, p) / p); }, alpha, b, "exp(W*(p)/p)");
    if (std::isfinite(b)) psi = psi.with_right_open();
    return GeneratingFunction(psi, alpha, b);
}

OrliczFunction orlicz_from_psi_eof(const GeneratingFunction& gf) {
    auto grid = finite_psi_grid(gf, 513);
    auto h = [&gf](double p) { return p * std::log(gf(p)); };
    double defect = num::triple_convexity_defect(h, grid);
    if (defect > 1e-7)
        throw NonConvex("p*ln(psi(p)) is not convex: relative chord defect " + num::fmt(defect) +
                        "; psi is outside the exponential class");

    GeneratingFunction psi = gf;
    std::vector<double> cgrid = grid;
    auto right = ScalarFunction::callable(
                     [psi, cgrid](double u) {
                         if (u == 0.0) return 0.0;
                         try {
                             return std::exp(hstar(psi, cgrid, std::log(u)));
                         } catch (const TruncationUncertain&) {
                             return kInf;  // beyond the certified window
                         }
                     },
                     0.0, kInf, "exp(h*(ln u)), h = p ln psi")
                     .with_monotonicity(Monotonicity::increasing)
                     .with_convexity(Convexity::convex);
    return OrliczFunction(std::move(right));
}

ComparisonReport theorem_a_check(const DiscreteMeasureSpace& space, const GeneratingFunction& psi,
                                 const std::vector<std::vector<double>>& fs, double alpha) {
    OrliczFunction N = orlicz_from_psi_eof(psi);
    AlphaPatch patch = alpha_patch(N, alpha);
    return equivalence_report(space, fs, psi, patch.patched);
}

}  // namespace glsfun
