#include "glsfun/gls_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <utility>

#include "glsfun/csv.hpp"
#include "glsfun/errors.hpp"

namespace glsfun {

namespace {

std::vector<double> support_grid_impl(double a, double b, int n) {
    if (std::isinf(b)) {
        double hi = std::max(num::defaults::p_max, 2.0 * a);
        if (hi / a >= 100.0) return num::log_grid(a, hi, n);
        return num::lin_grid(a, hi, n);
    }
    return num::right_dense_grid(a, b, n);
}

double parse_num(const std::string& key, const std::string& s) {
    if (s.empty()) throw DomainError("psi spec: empty value for " + key);
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw DomainError("psi spec: bad numeric value for " + key + ": '" + s + "'");
    return v;
}

std::map<std::string, std::string> parse_kv(const std::string& args) {
    std::map<std::string, std::string> kv;
    size_t pos = 0;
    while (pos < args.size()) {
        size_t eq = args.find('=', pos);
        if (eq == std::string::npos)
            throw DomainError("psi spec: expected key=value near '" + args.substr(pos) + "'");
        std::string key = args.substr(pos, eq - pos);
        if (key == "inner") {  // the inner spec swallows the rest, commas included
            kv[key] = args.substr(eq + 1);
            return kv;
        }
        size_t comma = args.find(',', eq);
        if (comma == std::string::npos) {
            kv[key] = args.substr(eq + 1);
            return kv;
        }
        kv[key] = args.substr(eq + 1, comma - eq - 1);
        pos = comma + 1;
    }
    return kv;
}

double require_key(const std::map<std::string, std::string>& kv, const std::string& key,
                   const std::string& kind) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw DomainError("psi spec: " + kind + " requires " + key + "=<value>");
    return parse_num(key, it->second);
}

}  // namespace

GeneratingFunction::GeneratingFunction(ScalarFunction psi, double a, double b)
    : psi_(std::move(psi)), a_(a), b_(b) {
    if (!(a_ >= 1.0) || !(a_ < b_))
        throw DomainError("generating function support must satisfy 1 <= a < b, got [" +
                          num::fmt(a_) + ", " + num::fmt(b_) + ")");
    auto grid = support_grid_impl(a_, b_, num::defaults::monotone_scan_n);
    double lo_val = kInf;
    std::vector<double> vals;
    vals.reserve(grid.size());
    // A positive-overflow tail is tolerated on unbounded supports: fast
    // generating functions legitimately leave double range before the
    // truncation point. Once overflowed the values must stay overflowed.
    for (size_t i = 0; i < grid.size(); ++i) {
        double v = psi_(grid[i]);
        if (std::isinf(v) && v > 0.0 && !vals.empty()) break;
        if (!std::isfinite(v) || v <= 0.0)
            throw DomainError("generating function must be finite and positive on its support; value " +
                              num::fmt(v) + " at p=" + num::fmt(grid[i]));
        vals.push_back(v);
        lo_val = std::min(lo_val, v);
    }
    if (vals.size() < grid.size()) {
        double tail = psi_(grid.back());
        if (!(std::isinf(tail) && tail > 0.0))
            throw DomainError("generating function returned to finite values after overflowing at p=" +
                              num::fmt(grid[vals.size()]));
    }
    if (std::isinf(b_)) {
        for (size_t i = 0; i + 1 < vals.size(); ++i) {
            if (!(vals[i + 1] > vals[i]))
                throw DomainError(
                    "generating function on unbounded support must be strictly increasing; step of " +
                    num::fmt(vals[i + 1] - vals[i]) + " ending at p=" + num::fmt(grid[i + 1]));
        }
    }
    inf_psi_ = lo_val;
}

GeneratingFunction GeneratingFunction::power(double m, double a) {
    if (!(m > 0.0) || !std::isfinite(m))
        throw DomainError("power generating function requires m > 0, got " + num::fmt(m));
    return GeneratingFunction(ScalarFunction::power(1.0, 1.0 / m, a, kInf), a, kInf);
}

GeneratingFunction GeneratingFunction::grand(double beta, double b, double a) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw DomainError("grand generating function requires beta > 0, got " + num::fmt(beta));
    if (!std::isfinite(b))
        throw DomainError("grand generating function requires finite b");
    return GeneratingFunction(ScalarFunction::grand(beta, b, a), a, b);
}

GeneratingFunction GeneratingFunction::scaled(double C) const {
    if (!(C > 0.0) || !std::isfinite(C))
        throw DomainError("scaling constant must be positive and finite, got " + num::fmt(C));
    return GeneratingFunction(psi_.scaled(C), a_, b_);
}

std::vector<double> GeneratingFunction::support_grid(int n) const {
    return support_grid_impl(a_, b_, n);
}

GeneratingFunction parse_psi_spec(const std::string& spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw DomainError("psi spec must look like kind:args with kind one of power, grand, scaled, csv; got '" +
                          spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    if (kind == "csv") {
        ScalarFunction tab = csv::load_tabulation(args);
        return GeneratingFunction(tab, tab.domain_lo(), tab.domain_hi());
    }
    auto kv = parse_kv(args);
    if (kind == "power") {
        double m = require_key(kv, "m", "power");
        double a = kv.count("a") ? parse_num("a", kv.at("a")) : 1.0;
        return GeneratingFunction::power(m, a);
    }
    if (kind == "grand") {
        double beta = require_key(kv, "beta", "grand");
        double b = require_key(kv, "b", "grand");
        double a = kv.count("a") ? parse_num("a", kv.at("a")) : 1.0;
        return GeneratingFunction::grand(beta, b, a);
    }
    if (kind == "scaled") {
        double C = require_key(kv, "C", "scaled");
        auto it = kv.find("inner");
        if (it == kv.end()) throw DomainError("psi spec: scaled requires inner=<spec>");
        return parse_psi_spec(it->second).scaled(C);
    }
    throw DomainError("psi spec: unknown kind '" + kind +
                      "'; expected power, grand, scaled, or csv");
}

double fundamental_direct(const GeneratingFunction& psi, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw DomainError("fundamental function requires delta > 0, got " + num::fmt(delta));
    auto grid = psi.support_grid();
    auto obj = [&](double p) { return std::pow(delta, 1.0 / p) / psi(p); };
    auto best = num::scan_max(obj, grid);
    if (std::isinf(psi.b())) {
        double pm = grid.back();
        double cert = (delta <= 1.0) ? 1.0 / psi(pm) : std::pow(delta, 1.0 / pm) / psi(pm);
        if (cert > best.value * (1.0 + 1e-6))
            throw TruncationUncertain(
                "fundamental sup at delta=" + num::fmt(delta) +
                    " is not certified past the truncation point p=" + num::fmt(pm) +
                    "; tail bound " + num::fmt(cert) + " exceeds attained " + num::fmt(best.value),
                best.value);
    }
    return best.value;
}

ScalarFunction nu_from_psi(const GeneratingFunction& gf) {
    const ScalarFunction& sf = gf.psi();
    double a = gf.a(), b = gf.b();

    if (const PowerForm* pf = sf.as_power(); pf && pf->e < 1.0) {
        // psi = c*p^e: p/psi = p^(1-e)/c inverts in closed form.
        double ee = 1.0 / (1.0 - pf->e);
        double lo = a / sf(a);
        return ScalarFunction::power(std::pow(pf->c, ee), ee, lo, kInf).with_outside_infinity();
    }

    ScalarFunction m = ScalarFunction::callable([sf](double p) { return p / sf(p); }, a, b,
                                                "p/psi(p)");
    if (std::isfinite(b)) m = m.with_right_open();
    auto rep = check_monotone(m);
    if (!rep.ok || rep.direction != Monotonicity::increasing) {
        double where = rep.ok ? a : rep.where;
        throw NotIncreasing(
            "forward construction requires p/psi(p) to be strictly increasing on the support; "
            "scan found a non-increasing step ending at p=" + num::fmt(where),
            where, rep.margin);
    }

    double p_hi = m.scan_hi();
    double z_lo = m(a), z_hi = m(p_hi);
    auto m_eval = [m](double p) { return m(p); };
    auto inverse = [m_eval, a, p_hi](double z) {
        return num::bisect_increasing(m_eval, z, a, p_hi, 100);
    };
    auto z_grid = num::log_grid(z_lo, z_hi, 4097);
    std::vector<double> p_vals(z_grid.size());
    p_vals.front() = a;
    p_vals.back() = p_hi;
    for (size_t i = 1; i + 1 < z_grid.size(); ++i) p_vals[i] = inverse(z_grid[i]);
    return ScalarFunction::tabulation(std::move(z_grid), std::move(p_vals), Interp::linear)
        .with_outside_infinity();
}

OrliczFunction::OrliczFunction(ScalarFunction right_branch) : right_(std::move(right_branch)) {
    if (right_.domain_lo() != 0.0)
        throw NonYoung("Young function right branch must start at u=0; domain starts at " +
                       num::fmt(right_.domain_lo()));

    // Truncate the stored domain where evaluation overflows so later scans
    // and inversions never touch non-finite values. The hard ceiling keeps
    // bisection on [0, cap] meaningful for slowly growing branches.
    double dh = right_.domain_hi();
    double reach = std::isfinite(dh) ? std::min(dh, 1e18) : 1e18;
    double cap = std::min(1.0, reach);
    while (cap * 2.0 <= reach) {
        double v = right_(cap * 2.0);
        if (!std::isfinite(v) || v > 1e290) break;
        cap *= 2.0;
    }
    while (cap > 1e-280) {
        double v = right_(cap);
        if (std::isfinite(v) && v <= 1e290) break;
        cap *= 0.5;
    }
    if (cap <= 1e-280)
        throw NonYoung("Young function candidate overflows arbitrarily close to u=0");
    if (!right_.as_tabulation() && (std::isinf(right_.domain_hi()) || right_.domain_hi() > cap)) {
        ScalarFunction inner = right_;
        right_ = ScalarFunction::callable([inner](double u) { return inner(u); }, 0.0, cap,
                                          inner.describe())
                     .with_monotonicity(inner.monotonicity())
                     .with_convexity(inner.convexity());
    }

    double hi = right_.scan_hi();
    double v0 = right_(0.0);
    double u_ref = std::min(1.0, hi);
    double n_ref = right_(u_ref);
    if (!std::isfinite(n_ref) || n_ref <= 0.0)
        throw NonYoung("Young function candidate must be positive at u=" + num::fmt(u_ref) +
                       "; got " + num::fmt(n_ref));
    if (!(std::abs(v0) <= 1e-9 * n_ref))
        throw NonYoung("Young function candidate must vanish at u=0; got " + num::fmt(v0));

    // Scan grid: log-spaced, floored where the value drops below the noise
    // floor of cancellation-prone evaluations.
    double floor_val = 1e-8 * n_ref;
    auto probe = num::log_grid(std::min(1.0, hi) * 1e-14, hi, 1025);
    std::vector<double> grid;
    grid.push_back(0.0);
    for (double u : probe)
        if (right_(u) >= floor_val) grid.push_back(u);
    if (grid.size() < 8)
        throw NonYoung("Young function candidate has too little usable range below u=" +
                       num::fmt(hi));

    auto eval = [this](double u) { return right_(u); };
    auto inc = num::scan_strictly_increasing(eval, grid);
    if (!inc.ok)
        throw NonYoung("Young function candidate is not strictly increasing; step of " +
                       num::fmt(inc.margin) + " ending at u=" + num::fmt(inc.where));
    double defect = num::triple_convexity_defect(eval, grid);
    if (defect > 1e-7)
        throw NonYoung("Young function candidate is not convex; relative chord defect " +
                       num::fmt(defect));
}

double OrliczFunction::operator()(double u) const { return right_(std::abs(u)); }

double OrliczFunction::inverse(double y) const {
    if (!(y >= 0.0))
        throw DomainError("Young function inverse requires y >= 0, got " + num::fmt(y));
    if (y == 0.0) return 0.0;
    return invert_monotone(right_, y);
}

OrliczFunction orlicz_from_psi(const GeneratingFunction& psi) {
    ScalarFunction nu = nu_from_psi(psi);
    double base = std::exp(legendre(nu, 0.0));
    auto right = ScalarFunction::callable(
                     [nu, base](double u) { return std::exp(legendre(nu, u)) - base; }, 0.0, kInf,
                     "exp(nu*) - exp(nu*(0))")
                     .with_monotonicity(Monotonicity::increasing)
                     .with_convexity(Convexity::convex)
                     .with_growth(Growth::superlinear);
    return OrliczFunction(std::move(right));
}

double theta_from_orlicz(const OrliczFunction& N, double delta) {
    if (!(delta > 0.0))
        throw DomainError("theta requires delta > 0, got " + num::fmt(delta));
    double u = N.inverse(1.0 / delta);
    if (!(u > 0.0))
        throw OutOfRange("theta: Young function inverse returned a nonpositive level", 1.0 / delta,
                         0.0, 0.0);
    return 1.0 / u;
}

double theta(const GeneratingFunction& psi, double delta) {
    return theta_from_orlicz(orlicz_from_psi(psi), delta);
}

ComparisonReport compare_fundamental(const GeneratingFunction& psi,
                                     const std::vector<double>& delta_grid) {
    ComparisonReport rep;
    rep.key_name = "delta";
    rep.lhs_name = "phi_direct";
    rep.rhs_name = "theta";
    OrliczFunction N = orlicz_from_psi(psi);
    double rmin = kInf, rmax = -kInf, smallest = kInf;
    for (double d : delta_grid) {
        ComparisonRow row{d, 0.0, 0.0, 0.0, false, ""};
        try {
            row.lhs = fundamental_direct(psi, d);
            row.rhs = theta_from_orlicz(N, d);
            row.ratio = row.rhs / row.lhs;
            row.valid = true;
            rmin = std::min(rmin, row.ratio);
            rmax = std::max(rmax, row.ratio);
            if (d < smallest) {
                smallest = d;
                rep.log_ratio_at_smallest_key =
                    std::log(row.rhs) / std::log(row.lhs);
            }
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
