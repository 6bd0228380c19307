// Acceptance gate: nine end-to-end checks, one PASS/FAIL line each.
// Run with no argument for the full battery or with an index (1..9) for a
// single criterion. Exit status is the number of failed criteria.
//
// Tolerances are pinned in the individual checks and are not configurable;
// a red line here means the library misses the bar, not that the bar moved.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "glsfun/conjugate.hpp"
#include "glsfun/eof.hpp"
#include "glsfun/errors.hpp"
#include "glsfun/gls_core.hpp"
#include "glsfun/inverse_problem.hpp"
#include "glsfun/norms.hpp"

using namespace glsfun;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& msg) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += msg;
}

void note(Outcome& o, const std::string& msg) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += msg;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// ---- 1: GLS norm of an indicator equals the fundamental function ----

Outcome crit1() {
    Outcome o;
    auto space = DiscreteMeasureSpace::uniform_probability(10000);
    std::vector<std::pair<std::string, GeneratingFunction>> catalog;
    catalog.emplace_back("p", GeneratingFunction::power(1.0));
    catalog.emplace_back("p^(1/2)", GeneratingFunction::power(2.0));
    catalog.emplace_back("p^(1/4)", GeneratingFunction::power(4.0));
    catalog.emplace_back("1/(2-p)", GeneratingFunction::grand(1.0, 2.0));
    double worst = 0.0;
    int cases = 0;
    for (const auto& [name, gf] : catalog) {
        for (double target : {0.9, 0.5, 0.1, 0.01}) {
            Indicator ind = indicator_of_mass(space, target);
            double lhs = gls_norm(space, ind.values, gf);
            double rhs = fundamental_direct(gf, ind.achieved_mass);
            double rel = rel_err(lhs, rhs);
            worst = std::max(worst, rel);
            ++cases;
            if (!(rel <= 1e-6))
                fail(o, "psi=" + name + " delta=" + num::fmt(target) + " rel=" + num::fmt(rel));
        }
    }
    note(o, "max rel gap " + num::fmt(worst) + " over " + std::to_string(cases) +
                " indicator cases (tol 1e-6)");
    return o;
}

// ---- 2: frozen point values for psi = sqrt p ----

Outcome crit2() {
    Outcome o;
    GeneratingFunction gf = GeneratingFunction::power(2.0);
    OrliczFunction N = orlicz_from_psi(gf);
    struct Point {
        const char* label;
        double got, want;
    };
    const Point pts[] = {
        {"N(1)", N(1.0), 0.63212},
        {"N(4)", N(4.0), 54.2303},
        {"theta(e^-4)", theta_from_orlicz(N, std::exp(-4.0)), 0.24979},
        {"phi(e^-4)", fundamental_direct(gf, std::exp(-4.0)), 0.21444},
        {"theta(1)", theta_from_orlicz(N, 1.0), 0.76146},
    };
    double worst = 0.0;
    for (const auto& p : pts) {
        double rel = rel_err(p.got, p.want);
        worst = std::max(worst, rel);
        if (!(rel <= 1e-4))
            fail(o, std::string(p.label) + " got " + num::fmt(p.got) + " want " +
                        num::fmt(p.want));
    }
    note(o, "5 point oracles, max rel " + num::fmt(worst) + " (tol 1e-4)");
    return o;
}

// ---- 3: equivalence band and logarithmic matching ----

Outcome crit3() {
    Outcome o;
    for (double m : {1.0, 2.0, 4.0}) {
        std::string tag = "m=" + num::fmt(m);
        GeneratingFunction gf = GeneratingFunction::power(m);
        try {
            OrliczFunction N = orlicz_from_psi(gf);
            double rmin = kInf, rmax = 0.0;
            for (double d : num::log_grid(1e-8, 1.0, 200)) {
                double r = theta_from_orlicz(N, d) / fundamental_direct(gf, d);
                rmin = std::min(rmin, r);
                rmax = std::max(rmax, r);
            }
            double th = theta_from_orlicz(N, 1e-8);
            double ph = fundamental_direct(gf, 1e-8);
            double defect = std::abs(std::log(th) / std::log(ph) - 1.0);
            bool band = rmin >= 1.0 / 3.0 && rmax <= 3.0;
            bool tail = defect <= 0.05;
            if (!band)
                fail(o, tag + " ratio range [" + num::fmt(rmin) + "," + num::fmt(rmax) +
                            "] leaves [1/3,3]");
            if (!tail)
                fail(o, tag + " log defect at delta=1e-8 is " + num::fmt(defect) + " > 0.05");
            if (band && tail)
                note(o, tag + " ok (ratio [" + num::fmt(rmin) + "," + num::fmt(rmax) +
                            "], log defect " + num::fmt(defect) + ")");
            if (m == 2.0) {
                double r4 = theta_from_orlicz(N, std::exp(-4.0)) /
                            fundamental_direct(gf, std::exp(-4.0));
                if (std::abs(r4 - 1.1649) <= 1e-3)
                    note(o, "m=2 ratio at e^-4 = " + num::fmt(r4));
                else
                    fail(o, "m=2 ratio at e^-4 = " + num::fmt(r4) + " misses 1.1649 by > 1e-3");
            }
        } catch (const Error& e) {
            fail(o, tag + " forward pipeline unavailable: " + e.what());
        }
    }
    if (!o.pass)
        note(o, "analysis: theta/phi -> 1 holds only in the logarithmic sense; for psi=p^(1/2) "
                "the log defect decays like ln(ln(1/delta))/ln(1/delta) and is still ~0.067 at "
                "delta=1e-8 (meeting 0.05 needs delta below ~1e-37); for psi=p the map "
                "p/psi(p) is constant, so no Young conjugate exists on that branch at all");
    return o;
}

// ---- 4: inverse recovery from tabulated theta data ----

Outcome crit4() {
    Outcome o;
    struct Member {
        double m, delta_lo;
        int knots;
    };
    // psi=p and the grand member have non-increasing p/psi(p): the forward
    // map never yields a theta tabulation to invert, so the recovery claim
    // is vacuous for them; they are exercised by criterion 9 instead.
    const Member members[] = {{2.0, 1e-14, 1200}, {4.0, 1e-8, 800}};
    for (const auto& mem : members) {
        std::string tag = "m=" + num::fmt(mem.m);
        GeneratingFunction gf = GeneratingFunction::power(mem.m);
        OrliczFunction N = orlicz_from_psi(gf);
        auto deltas = num::log_grid(mem.delta_lo, 1.0, mem.knots);
        std::vector<double> thetas(deltas.size());
        for (size_t i = 0; i < deltas.size(); ++i) thetas[i] = theta_from_orlicz(N, deltas[i]);
        FundamentalFunction phi(ScalarFunction::tabulation(deltas, thetas)
                                    .with_monotonicity(Monotonicity::increasing));

        InversionResult res =
            psi_from_fundamental(phi, std::exp(-1.0), num::log_grid(1.5, 20.0, 65));
        const Tabulation* tab = res.psi.psi().as_tabulation();
        double worst_psi = 0.0;
        for (size_t i = 0; i < tab->x.size(); ++i)
            worst_psi = std::max(worst_psi, rel_err(tab->y[i], gf(tab->x[i])));
        if (!(worst_psi <= 0.02))
            fail(o, tag + " psi recovery max rel " + num::fmt(worst_psi) + " > 0.02");

        ScalarFunction Nrec = orlicz_from_fundamental(phi);
        double z_lo = 1.0 / thetas.back() * 1.03;
        double z_hi = 1.0 / thetas.front() * 0.97;
        double worst_N = 0.0;
        for (double z : num::log_grid(z_lo, z_hi, 200))
            worst_N = std::max(worst_N, rel_err(Nrec(z), N(z)));
        if (!(worst_N <= 1e-3))
            fail(o, tag + " Orlicz reproduction max rel " + num::fmt(worst_N) + " > 1e-3");
        if (o.pass)
            note(o, tag + " psi rel " + num::fmt(worst_psi) + " (tol 0.02), N rel " +
                        num::fmt(worst_N) + " (tol 1e-3) on z in [" + num::fmt(z_lo) + "," +
                        num::fmt(z_hi) + "]");
    }
    note(o, "catalog members with a defined forward map; see criterion 9 for the rest");
    return o;
}

// ---- 5: conjugation against brute force and Fenchel-Moreau ----

double brute_conjugate(const ScalarFunction& g, double q, double lo, double hi) {
    const int n = 1000000;
    double best = -kInf;
    for (int i = 0; i <= n; ++i) {
        double p = lo + (hi - lo) * double(i) / double(n);
        best = std::max(best, q * p - g(p));
    }
    return best;
}

Outcome crit5() {
    Outcome o;
    struct Body {
        std::string name;
        ScalarFunction g;
        double brute_lo, brute_hi;
        std::vector<double> qs;
        std::vector<double> interior;
    };
    std::vector<Body> bodies;
    bodies.push_back({"p^2 on [1,6]", ScalarFunction::power(1.0, 2.0, 1.0, 6.0), 1.0, 6.0,
                      {3.0, 7.0, 11.0}, {1.5, 3.0, 5.0}});
    bodies.push_back({"p^2/2 on [0,10]", ScalarFunction::quadratic(0.0, 0.0, 0.5, 0.0, 10.0),
                      0.0, 10.0, {1.0, 4.0, 9.0}, {2.0, 5.0, 8.0}});
    bodies.push_back({"z^2 on [1,inf) with +inf outside",
                      ScalarFunction::power(1.0, 2.0, 1.0, kInf).with_outside_infinity(), 1.0,
                      20.0, {0.5, 3.0, 8.0}, {1.5, 3.0}});
    bodies.push_back({"e^p on [0,4]", ScalarFunction::exp_affine(0.0, 1.0, 0.0, 4.0), 0.0, 4.0,
                      {2.0, std::exp(2.0), 20.0}, {1.0, 3.0}});
    bodies.push_back({"1+2p on [0,10]", ScalarFunction::affine(1.0, 2.0, 0.0, 10.0), 0.0, 10.0,
                      {1.0, 3.0}, {2.0, 7.0}});
    bodies.push_back({"1+p+p^2 on [0,5]", ScalarFunction::quadratic(1.0, 1.0, 1.0, 0.0, 5.0),
                      0.0, 5.0, {2.0, 5.0, 9.0}, {1.0, 3.0}});

    double worst_brute = 0.0, worst_bi = 0.0;
    for (const auto& b : bodies) {
        for (double q : b.qs) {
            double fast = legendre(b.g, q);
            double brute = brute_conjugate(b.g, q, b.brute_lo, b.brute_hi);
            double rel = std::abs(fast - brute) / std::max(1.0, std::abs(brute));
            worst_brute = std::max(worst_brute, rel);
            if (!(rel <= 1e-9))
                fail(o, b.name + " at q=" + num::fmt(q) + ": fast " + num::fmt(fast) +
                            " vs brute " + num::fmt(brute));
        }
        for (double p : b.interior) {
            double back = biconjugate_at(b.g, p);
            double rel = rel_err(back, b.g(p));
            worst_bi = std::max(worst_bi, rel);
            if (!(rel <= 1e-6))
                fail(o, b.name + " biconjugate at p=" + num::fmt(p) + " rel " + num::fmt(rel));
        }
    }
    note(o, "vs 1e6-point brute force max rel " + num::fmt(worst_brute) +
                " (tol 1e-9); biconjugate max rel " + num::fmt(worst_bi) + " (tol 1e-6)");
    return o;
}

// ---- 6: scaling covariance ----

Outcome crit6() {
    Outcome o;
    std::vector<std::pair<std::string, GeneratingFunction>> catalog;
    catalog.emplace_back("p^(1/2)", GeneratingFunction::power(2.0));
    catalog.emplace_back("1/(2-p)", GeneratingFunction::grand(1.0, 2.0));
    auto space = DiscreteMeasureSpace::uniform_probability(100);
    std::vector<double> ramp(100);
    for (int i = 0; i < 100; ++i) ramp[size_t(i)] = 0.5 + 0.03 * i;
    double worst = 0.0;
    for (const auto& [name, gf] : catalog) {
        double base_norm = gls_norm(space, ramp, gf);
        for (double C : {0.5, 2.0, 10.0}) {
            GeneratingFunction sc = gf.scaled(C);
            for (double d : {0.9, 0.1, 0.01}) {
                double rel =
                    rel_err(C * fundamental_direct(sc, d), fundamental_direct(gf, d));
                worst = std::max(worst, rel);
                if (!(rel <= 1e-9))
                    fail(o, "phi scaling psi=" + name + " C=" + num::fmt(C) +
                                " delta=" + num::fmt(d) + " rel " + num::fmt(rel));
            }
            double rel = rel_err(C * gls_norm(space, ramp, sc), base_norm);
            worst = std::max(worst, rel);
            if (!(rel <= 1e-9))
                fail(o, "norm scaling psi=" + name + " C=" + num::fmt(C) + " rel " +
                            num::fmt(rel));
        }
    }
    note(o, "C in {0.5,2,10}: max rel deviation " + num::fmt(worst) + " (tol 1e-9)");
    return o;
}

// ---- 7: Luxemburg/Amemiya sandwich and norm axioms ----

Outcome crit7() {
    Outcome o;
    auto space = DiscreteMeasureSpace::uniform_probability(64);
    std::vector<std::pair<std::string, OrliczFunction>> Ns;
    Ns.emplace_back("u^2", OrliczFunction(ScalarFunction::power(1.0, 2.0, 0.0, kInf)));
    Ns.emplace_back("e^u-1", trudinger(1.0, 0));
    Ns.emplace_back("e^(u^2)-1-u^2", trudinger(2.0, 1));
    Ns.emplace_back("u^(3/2)", OrliczFunction(ScalarFunction::power(1.0, 1.5, 0.0, kInf)));

    std::mt19937 rng(20260816u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto sample = [&] {
        std::vector<double> f(64);
        for (auto& v : f) v = unif(rng) < 0.2 ? 0.0 : std::exp(gauss(rng));
        return f;
    };

    int members = 0;
    double worst_axiom = 0.0;
    for (const auto& [name, N] : Ns) {
        std::vector<std::vector<double>> fs;
        for (int r = 0; r < 5; ++r) fs.push_back(sample());
        std::vector<double> lux(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) {
            lux[i] = luxemburg_norm(space, fs[i], N);
            AmemiyaResult am = orlicz_norm_amemiya(space, fs[i], N);
            ++members;
            if (!(lux[i] <= am.value * (1.0 + 1e-9)))
                fail(o, name + " member " + std::to_string(i) + ": luxemburg " +
                            num::fmt(lux[i]) + " above amemiya " + num::fmt(am.value));
            if (!(am.value <= 2.0 * lux[i] * (1.0 + 1e-9)))
                fail(o, name + " member " + std::to_string(i) + ": amemiya " +
                            num::fmt(am.value) + " above twice luxemburg " + num::fmt(lux[i]));

            std::vector<double> scaled_f = fs[i];
            for (auto& v : scaled_f) v *= 3.7;
            double rel = rel_err(luxemburg_norm(space, scaled_f, N), 3.7 * lux[i]);
            worst_axiom = std::max(worst_axiom, rel);
            if (!(rel <= 1e-9))
                fail(o, name + " member " + std::to_string(i) + ": homogeneity defect " +
                            num::fmt(rel));
        }
        for (size_t i = 0; i + 1 < fs.size(); ++i) {
            std::vector<double> sum = fs[i];
            for (size_t k = 0; k < sum.size(); ++k) sum[k] += fs[i + 1][k];
            double lhs = luxemburg_norm(space, sum, N);
            double bound = lux[i] + lux[i + 1];
            if (!(lhs <= bound * (1.0 + 1e-9)))
                fail(o, name + " triangle defect: " + num::fmt(lhs) + " > " + num::fmt(bound));
        }
    }

    // The Luxemburg norm of an indicator is the inverse gauge.
    auto big = DiscreteMeasureSpace::uniform_probability(1000);
    for (const auto& [name, N] : Ns) {
        for (double mass : {0.25, 0.04}) {
            Indicator ind = indicator_of_mass(big, mass);
            double want = 1.0 / N.inverse(1.0 / ind.achieved_mass);
            double rel = rel_err(luxemburg_norm(big, ind.values, N), want);
            if (!(rel <= 1e-8))
                fail(o, name + " indicator identity at delta=" + num::fmt(mass) + " rel " +
                            num::fmt(rel));
        }
    }
    note(o, std::to_string(members) + " random members; worst homogeneity defect " +
                num::fmt(worst_axiom) + "; indicator identity tol 1e-8");
    return o;
}

// ---- 8: exponential-class patch, truncated spaces, stability ----

Outcome crit8() {
    Outcome o;
    const std::vector<double> targets{0.4, 4.0, 40.0, 400.0};
    for (double m : {1.0, 2.0}) {
        std::string tag = "m=" + num::fmt(m);
        GeneratingFunction gf = GeneratingFunction::power(m);
        auto run_suite = [&](double M, int n) {
            auto space = DiscreteMeasureSpace::geometric_truncated(M, n);
            std::vector<std::vector<double>> fs;
            for (double t : targets) fs.push_back(indicator_of_mass(space, t).values);
            return theorem_a_check(space, gf, fs, 1.0);
        };
        ComparisonReport repA = run_suite(1e3, 2048);
        ComparisonReport repB = run_suite(2e3, 4096);
        for (size_t i = 0; i < repA.rows.size(); ++i) {
            const auto& ra = repA.rows[i];
            const auto& rb = repB.rows[i];
            if (!ra.valid || !rb.valid) {
                fail(o, tag + " suite row " + std::to_string(i) + " invalid: " + ra.note +
                            rb.note);
                continue;
            }
            if (!(ra.ratio >= 1.0 / 8.0 && ra.ratio <= 8.0))
                fail(o, tag + " ratio " + num::fmt(ra.ratio) + " leaves [1/8,8]");
            double drift = std::abs(rb.ratio / ra.ratio - 1.0);
            if (!(drift < 0.05))
                fail(o, tag + " ratio drift " + num::fmt(drift) +
                            " >= 0.05 when the truncation doubles");
        }
        note(o, tag + " ratios [" + num::fmt(repA.ratio_min) + "," + num::fmt(repA.ratio_max) +
                    "], stable under doubled truncation");
    }

    // Patch geometry on a non-degenerate case: alpha = 3 over the quadratic
    // weight, where all three pieces are distinct.
    OrliczFunction N = eof_from_W(WFunction(ScalarFunction::quadratic(0.0, 0.0, 0.5, 2.0, kInf)));
    AlphaPatch p = alpha_patch(N, 3.0);
    double inner_gap =
        rel_err(p.C1 * std::pow(p.C2, p.alpha), p.C4 * p.C2 + p.C3);
    double outer_gap = rel_err(p.C4 * p.C5 + p.C3, N(p.C5));
    if (!(inner_gap <= 1e-8)) fail(o, "inner knot gap " + num::fmt(inner_gap) + " > 1e-8");
    if (!(outer_gap <= 1e-8)) fail(o, "outer knot gap " + num::fmt(outer_gap) + " > 1e-8");

    // One-sided slopes AT the knots, second order so that curvature of the
    // adjoining pieces does not masquerade as a jump.
    auto left_slope = [&](double k) {
        double h = 1e-6 * k;
        return (3.0 * p.patched(k) - 4.0 * p.patched(k - h) + p.patched(k - 2.0 * h)) / (2.0 * h);
    };
    auto right_slope = [&](double k) {
        double h = 1e-6 * k;
        return (-3.0 * p.patched(k) + 4.0 * p.patched(k + h) - p.patched(k + 2.0 * h)) / (2.0 * h);
    };
    double s2 = std::abs(left_slope(p.C2) - right_slope(p.C2));
    double s5 = std::abs(left_slope(p.C5) - right_slope(p.C5));
    if (!(s2 <= 1e-6 * p.C4)) fail(o, "slope jump at inner knot " + num::fmt(s2));
    if (!(s5 <= 1e-6 * p.C4)) fail(o, "slope jump at outer knot " + num::fmt(s5));

    ScalarFunction wrapped = ScalarFunction::callable(
        [&](double u) { return p.patched(u); }, 1e-3, 50.0, "patched N");
    double defect = convexity_defect(wrapped, 400);
    if (!(defect <= 1e-6)) fail(o, "patched function convexity defect " + num::fmt(defect));
    double small_u = rel_err(p.patched(1e-6), p.C1 * std::pow(1e-6, p.alpha));
    if (!(small_u <= 1e-9)) fail(o, "small-u power mismatch " + num::fmt(small_u));

    // Degenerate case: alpha = 1 on an already-linear origin is the identity.
    // C3 is exact; C4 comes from a finite difference through the numerically
    // evaluated transform, so it carries ~1e-11 of stencil noise.
    OrliczFunction N1 = orlicz_from_psi_eof(GeneratingFunction::power(1.0));
    AlphaPatch id = alpha_patch(N1, 1.0);
    if (!(std::abs(id.C3) <= 1e-12 && std::abs(id.C4 - 1.0) <= 1e-9))
        fail(o, "identity patch has C3=" + num::fmt(id.C3) + " C4-1=" + num::fmt(id.C4 - 1.0));
    for (double u : {0.3, 1.0, 2.0, 2.5, 10.0})
        if (!(rel_err(id.patched(u), N1(u)) <= 1e-9))
            fail(o, "identity patch moved the function at u=" + num::fmt(u));
    if (o.pass) note(o, "patch seams C1 within 1e-8/1e-6, convex, exact power near 0");
    return o;
}

// ---- 9: hypothesis violations surface as typed failures ----

Outcome crit9() {
    Outcome o;
    try {
        orlicz_from_psi(GeneratingFunction::power(1.0));
        fail(o, "psi=p: expected a non-increasing p/psi(p) rejection, got a result");
    } catch (const NotIncreasing&) {
        note(o, "psi=p rejected (constant p/psi(p))");
    } catch (const std::exception& e) {
        fail(o, std::string("psi=p threw the wrong type: ") + e.what());
    }
    try {
        orlicz_from_psi(GeneratingFunction::grand(1.0, 2.0));
        fail(o, "psi=1/(2-p): expected a non-increasing p/psi(p) rejection, got a result");
    } catch (const NotIncreasing&) {
        note(o, "psi=1/(2-p) rejected (p(2-p) turns over)");
    } catch (const std::exception& e) {
        fail(o, std::string("psi=1/(2-p) threw the wrong type: ") + e.what());
    }
    try {
        std::vector<double> xs, ys;
        for (double d : num::log_grid(1e-6, 1.0, 300)) {
            xs.push_back(d);
            ys.push_back(d);
        }
        choose_C(FundamentalFunction(ScalarFunction::tabulation(xs, ys)));
        fail(o, "phi=delta: expected the shift scan to fail, got a result");
    } catch (const AllNonConvex&) {
        note(o, "phi=delta has no convexifying shift");
    } catch (const std::exception& e) {
        fail(o, std::string("phi=delta threw the wrong type: ") + e.what());
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    struct Entry {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "indicator bridge", crit1},
        {2, "point oracles", crit2},
        {3, "asymptotic equivalence", crit3},
        {4, "inverse recovery", crit4},
        {5, "conjugation exactness", crit5},
        {6, "scaling covariance", crit6},
        {7, "norm sandwich and axioms", crit7},
        {8, "exponential patch stability", crit8},
        {9, "hypothesis rejection", crit9},
    };
    int which = 0;
    if (argc > 1 && std::strcmp(argv[1], "all") != 0) {
        which = std::atoi(argv[1]);
        if (which < 1 || which > 9) {
            std::fprintf(stderr, "usage: %s [1..9|all]\n", argv[0]);
            return 64;
        }
    }
    int failures = 0;
    for (const auto& e : entries) {
        if (which != 0 && e.id != which) continue;
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("unexpected exception: ") + ex.what();
        }
        if (!o.pass) ++failures;
        std::printf("criterion %d (%s): %s%s%s\n", e.id, e.name, o.pass ? "PASS" : "FAIL",
                    o.detail.empty() ? "" : " | ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
