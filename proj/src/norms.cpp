#include "glsfun/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "glsfun/errors.hpp"

namespace glsfun {

namespace {

void require_same_size(const DiscreteMeasureSpace& sp, const std::vector<double>& f) {
    if (f.size() != sp.size())
        throw DomainError("sample has " + num::fmt(double(f.size())) + " values but the space has " +
                          num::fmt(double(sp.size())) + " atoms");
}

// L_p of a compressed distribution, largest value factored out so the power
// sums stay in range for p up to the truncation point.
double lp_of(const Distribution& d, double p) {
    if (d.values.empty() || d.values.front() == 0.0) return 0.0;
    double top = d.values.front();
    double s = 0.0;
    for (size_t i = 0; i < d.values.size(); ++i) {
        double r = d.values[i] / top;
        if (r == 0.0) continue;
        s += d.masses[i] * std::pow(r, p);
    }
    return top * std::pow(s, 1.0 / p);
}

// Modular of the scaled distribution, +inf past the stored branch of N so
// searches treat the overflow region as infeasible.
double modular_of(const Distribution& d, const OrliczFunction& N, double scale) {
    double cap = N.right_branch().domain_hi();
    double s = 0.0;
    for (size_t i = 0; i < d.values.size(); ++i) {
        double u = d.values[i] * scale;
        if (u == 0.0) continue;
        if (u > cap) return kInf;
        s += d.masses[i] * N(u);
        if (!std::isfinite(s)) return kInf;
    }
    return s;
}

}  // namespace

DiscreteMeasureSpace::DiscreteMeasureSpace(std::vector<double> w, Kind kind)
    : w_(std::move(w)), total_(num::kahan_sum(w_)), kind_(kind) {}

DiscreteMeasureSpace DiscreteMeasureSpace::uniform_probability(int n) {
    if (n < 1) throw DomainError("uniform probability space needs n >= 1 atoms");
    std::vector<double> w(size_t(n), 1.0 / double(n));
    DiscreteMeasureSpace sp(std::move(w), Kind::probability);
    if (std::abs(sp.total_ - 1.0) > 1e-12)
        throw DomainError("uniform probability weights failed to sum to one");
    return sp;
}

DiscreteMeasureSpace DiscreteMeasureSpace::geometric_truncated(double total_mass, int n,
                                                               double spread) {
    if (!(total_mass > 0.0) || !std::isfinite(total_mass))
        throw DomainError("truncated space needs positive finite total mass");
    if (n < 2) throw DomainError("truncated space needs n >= 2 atoms");
    if (!(spread > 1.0)) throw DomainError("truncated space needs weight spread > 1");
    double r = std::pow(spread, 1.0 / double(n - 1));
    double c = total_mass * (r - 1.0) / (std::pow(r, double(n)) - 1.0);
    std::vector<double> w(size_t(n), 0.0);
    for (int i = 0; i < n; ++i) w[size_t(i)] = c * std::pow(r, double(i));
    return DiscreteMeasureSpace(std::move(w), Kind::truncated_infinite);
}

DiscreteMeasureSpace DiscreteMeasureSpace::from_weights(std::vector<double> w, Kind kind) {
    if (w.empty()) throw DomainError("measure space needs at least one atom");
    for (double wi : w)
        if (!(wi > 0.0) || !std::isfinite(wi))
            throw DomainError("atom weights must be finite and positive, got " + num::fmt(wi));
    return DiscreteMeasureSpace(std::move(w), kind);
}

Indicator indicator_of_mass(const DiscreteMeasureSpace& space, double target_mass) {
    if (!(target_mass > 0.0))
        throw DomainError("indicator target mass must be positive, got " + num::fmt(target_mass));
    const auto& w = space.weights();
    std::vector<size_t> order(w.size());
    std::iota(order.begin(), order.end(), size_t(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return w[i] < w[j]; });
    Indicator ind;
    ind.values.assign(w.size(), 0.0);
    std::vector<double> taken;
    double run = 0.0;
    for (size_t i : order) {
        if (run + w[i] > target_mass * (1.0 + 1e-9)) break;
        ind.values[i] = 1.0;
        taken.push_back(w[i]);
        run += w[i];
    }
    ind.achieved_mass = num::kahan_sum(taken);
    return ind;
}

Distribution distribution_of(const DiscreteMeasureSpace& space, const std::vector<double>& f) {
    require_same_size(space, f);
    const auto& w = space.weights();
    std::vector<std::pair<double, double>> vm(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        double v = std::abs(f[i]);
        if (!std::isfinite(v)) throw DomainError("sample contains a non-finite value");
        vm[i] = {v, w[i]};
    }
    std::sort(vm.begin(), vm.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    Distribution d;
    for (const auto& [v, m] : vm) {
        if (!d.values.empty() && d.values.back() == v) {
            d.masses.back() += m;
        } else {
            d.values.push_back(v);
            d.masses.push_back(m);
        }
    }
    return d;
}

double lp_norm(const DiscreteMeasureSpace& space, const std::vector<double>& f, double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw DomainError("lp norm requires finite p > 0, got " + num::fmt(p));
    return lp_of(distribution_of(space, f), p);
}

double gls_norm(const DiscreteMeasureSpace& space, const std::vector<double>& f,
                const GeneratingFunction& psi) {
    Distribution d = distribution_of(space, f);
    if (d.values.empty() || d.values.front() == 0.0) return 0.0;
    auto grid = psi.support_grid();
    auto obj = [&](double p) { return lp_of(d, p) / psi(p); };
    auto best = num::scan_max(obj, grid);
    if (std::isinf(psi.b())) {
        double pm = grid.back();
        double mass_factor = std::pow(std::max(space.total_mass(), 1.0), 1.0 / pm);
        double cert = d.values.front() * mass_factor / psi(pm);
        if (cert > best.value * (1.0 + 1e-6))
            throw TailUncertain(
                "norm sup is not certified past the truncation point p=" + num::fmt(pm) +
                    "; tail bound " + num::fmt(cert) + " exceeds attained " + num::fmt(best.value),
                best.value, cert);
    }
    return best.value;
}

double modular(const DiscreteMeasureSpace& space, const std::vector<double>& f,
               const OrliczFunction& N) {
    return modular_of(distribution_of(space, f), N, 1.0);
}

double luxemburg_norm(const DiscreteMeasureSpace& space, const std::vector<double>& f,
                      const OrliczFunction& N) {
    Distribution d = distribution_of(space, f);
    if (d.values.empty() || d.values.front() == 0.0) return 0.0;
    auto mod_at = [&](double k) { return modular_of(d, N, 1.0 / k); };

    double k_hi = std::max(d.values.front(), 1e-300);
    for (int i = 0; i < 2100 && !(mod_at(k_hi) <= 1.0); ++i) k_hi *= 2.0;
    if (!(mod_at(k_hi) <= 1.0))
        throw DomainError("Luxemburg norm bracket failed: modular stays above one");
    while (k_hi > 1e-300 && mod_at(k_hi * 0.5) <= 1.0) k_hi *= 0.5;
    double k_lo = k_hi * 0.5;  // infeasible side of the ratio-two bracket

    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (k_lo + k_hi);
        if (mid <= k_lo || mid >= k_hi) break;
        double m = mod_at(mid);
        if (m <= 1.0) {
            k_hi = mid;
            if (m >= 1.0 - 1e-12) break;
        } else {
            k_lo = mid;
        }
        if (k_hi - k_lo < 1e-16 * k_hi) break;
    }
    return k_hi;
}

AmemiyaResult orlicz_norm_amemiya(const DiscreteMeasureSpace& space,
                                  const std::vector<double>& f, const OrliczFunction& N) {
    Distribution d = distribution_of(space, f);
    if (d.values.empty() || d.values.front() == 0.0) return {0.0, true};
    auto F = [&](double lnv) {
        double v = std::exp(lnv);
        double m = modular_of(d, N, v);
        return std::isfinite(m) ? (1.0 + m) / v : kInf;
    };
    auto lnv_grid = num::lin_grid(std::log(1e-12), std::log(1e12), 49);
    size_t arg = 0;
    double best = kInf;
    for (size_t i = 0; i < lnv_grid.size(); ++i) {
        double v = F(lnv_grid[i]);
        if (v < best) {
            best = v;
            arg = i;
        }
    }
    bool interior = arg > 0 && arg + 1 < lnv_grid.size();
    if (!interior) return {best, false};
    auto res = num::golden_max([&](double x) { return -F(x); }, lnv_grid[arg - 1],
                               lnv_grid[arg + 1]);
    return {-res.value, true};
}

ComparisonReport equivalence_report(const DiscreteMeasureSpace& space,
                                    const std::vector<std::vector<double>>& fs,
                                    const GeneratingFunction& psi, const OrliczFunction& N) {
    ComparisonReport rep;
    rep.key_name = "id";
    rep.lhs_name = "gls";
    rep.rhs_name = "orlicz";
    double rmin = kInf, rmax = -kInf;
    for (size_t i = 0; i < fs.size(); ++i) {
        ComparisonRow row{double(i), 0.0, 0.0, 0.0, false, ""};
        try {
            row.lhs = gls_norm(space, fs[i], psi);
            row.rhs = luxemburg_norm(space, fs[i], N);
            row.ratio = row.lhs > 0.0 ? row.rhs / row.lhs : (row.rhs > 0.0 ? kInf : 1.0);
            row.valid = true;
            rmin = std::min(rmin, row.ratio);
            rmax = std::max(rmax, row.ratio);
        } catch (const Error& e) {
            row.note = e.what();
        }
        rep.rows.push_back(std::move(row));
    }
    if (std::isfinite(rmin)) {
        rep.ratio_min = rmin;
        rep.ratio_max = rmax;
    }
    return rep;
}

}  // namespace glsfun
