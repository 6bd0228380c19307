// Command-line front end. Subcommands map one-to-one onto the library
// pipelines; all tabular output goes through csv::write_table so runs with
// identical configuration produce byte-identical files.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glsfun/conjugate.hpp"
#include "glsfun/csv.hpp"
#include "glsfun/eof.hpp"
#include "glsfun/errors.hpp"
#include "glsfun/gls_core.hpp"
#include "glsfun/inverse_problem.hpp"
#include "glsfun/norms.hpp"

namespace {

using namespace glsfun;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct GridOpts {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    std::string spacing = "log";
};

std::vector<double> make_grid(const GridOpts& g, const std::string& what) {
    if (!(g.lo < g.hi))
        throw DomainError(what + " grid needs lo < hi; got lo=" + num::fmt(g.lo) +
                          " hi=" + num::fmt(g.hi));
    if (g.n < 2) throw DomainError(what + " grid needs at least 2 points");
    if (g.spacing == "linear") return num::lin_grid(g.lo, g.hi, g.n);
    if (g.spacing != "log") throw DomainError("spacing must be 'log' or 'linear'");
    if (!(g.lo > 0.0)) throw DomainError(what + " log grid needs lo > 0");
    return num::log_grid(g.lo, g.hi, g.n);
}

void emit(const std::string& out_path, const std::vector<std::string>& comments,
          const std::string& header, const std::vector<std::vector<double>>& rows) {
    if (out_path.empty())
        std::fputs(csv::table_to_string(comments, header, rows).c_str(), stdout);
    else
        csv::write_table(out_path, comments, header, rows);
}

double parse_num(const std::string& key, const std::string& val) {
    char* end = nullptr;
    double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0')
        throw DomainError("cannot parse '" + val + "' as a number for " + key);
    return v;
}

std::map<std::string, std::string> split_kv(const std::string& args) {
    std::map<std::string, std::string> kv;
    size_t pos = 0;
    while (pos < args.size()) {
        size_t comma = args.find(',', pos);
        if (comma == std::string::npos) comma = args.size();
        std::string item = args.substr(pos, comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw DomainError("expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
        pos = comma + 1;
    }
    return kv;
}

double kv_num(const std::map<std::string, std::string>& kv, const std::string& key,
              double fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : parse_num(key, it->second);
}

double kv_require(const std::map<std::string, std::string>& kv, const std::string& key,
                  const std::string& kind) {
    auto it = kv.find(key);
    if (it == kv.end()) throw DomainError(kind + " spec requires " + key + "=<value>");
    return parse_num(key, it->second);
}

// kind:key=value,... function source, or a bare path to an x,value CSV.
// Kinds: power (c,e), affine (a0,a1), quadratic (c0,c1,c2), exp_affine
// (a0,a1), grand (beta,b,scale); all accept lo= and hi=.
ScalarFunction parse_scalar_spec(const std::string& spec, double default_lo, double default_hi) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos) return csv::load_tabulation(spec);
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    if (kind == "csv") return csv::load_tabulation(args);
    auto kv = split_kv(args);
    double lo = kv_num(kv, "lo", default_lo);
    double hi = kv_num(kv, "hi", default_hi);
    if (kind == "power")
        return ScalarFunction::power(kv_num(kv, "c", 1.0), kv_require(kv, "e", "power"), lo, hi);
    if (kind == "affine")
        return ScalarFunction::affine(kv_num(kv, "a0", 0.0), kv_require(kv, "a1", "affine"), lo, hi);
    if (kind == "quadratic")
        return ScalarFunction::quadratic(kv_num(kv, "c0", 0.0), kv_num(kv, "c1", 0.0),
                                         kv_require(kv, "c2", "quadratic"), lo, hi);
    if (kind == "exp_affine")
        return ScalarFunction::exp_affine(kv_num(kv, "a0", 0.0), kv_require(kv, "a1", "exp_affine"),
                                          lo, hi);
    if (kind == "grand")
        return ScalarFunction::grand(kv_require(kv, "beta", "grand"), kv_require(kv, "b", "grand"),
                                     lo, kv_num(kv, "scale", 1.0));
    throw DomainError("unknown function kind '" + kind +
                      "'; expected power, affine, quadratic, exp_affine, grand, or csv");
}

// uniform:n=<atoms> | geometric:M=<total mass>,n=<atoms>[,spread=<ratio>]
DiscreteMeasureSpace parse_space_spec(const std::string& spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw DomainError("space spec must look like uniform:n=... or geometric:M=...,n=...");
    std::string kind = spec.substr(0, colon);
    auto kv = split_kv(spec.substr(colon + 1));
    if (kind == "uniform")
        return DiscreteMeasureSpace::uniform_probability(int(kv_require(kv, "n", "uniform")));
    if (kind == "geometric")
        return DiscreteMeasureSpace::geometric_truncated(kv_require(kv, "M", "geometric"),
                                                         int(kv_require(kv, "n", "geometric")),
                                                         kv_num(kv, "spread", 1e4));
    throw DomainError("unknown space kind '" + kind + "'; expected uniform or geometric");
}

double resolve_C(const std::string& c_str, const FundamentalFunction& phi,
                 std::vector<std::string>& comments) {
    if (c_str == "auto") {
        ShiftChoice choice = choose_C(phi);
        comments.push_back("C_mode=auto scan_defect=" + csv::format_full(choice.defect));
        return choice.C;
    }
    return parse_num("C", c_str);
}

// ---- subcommands ----

struct FundamentalArgs {
    std::string psi, out;
    GridOpts grid{1e-8, 1.0, 200, "log"};
};

void run_fundamental(const FundamentalArgs& a) {
    GeneratingFunction gf = parse_psi_spec(a.psi);
    auto deltas = make_grid(a.grid, "delta");
    ComparisonReport rep = compare_fundamental(gf, deltas);
    std::vector<std::string> comments{"psi=" + a.psi,
                                      "columns: phi_direct=sup_p delta^(1/p)/psi(p), "
                                      "theta=1/N^(-1)(1/delta), ratio=theta/phi_direct"};
    size_t n_valid = 0;
    for (const auto& row : rep.rows)
        if (row.valid) ++n_valid;
    if (n_valid > 0) {
        comments.push_back("ratio_min=" + csv::format_full(rep.ratio_min) +
                           " ratio_max=" + csv::format_full(rep.ratio_max));
        comments.push_back("log_ratio_at_smallest_delta=" +
                           csv::format_full(rep.log_ratio_at_smallest_key));
    }
    for (const auto& row : rep.rows)
        if (!row.valid)
            comments.push_back("failed delta=" + csv::format_full(row.key) + ": " + row.note);
    std::vector<std::vector<double>> rows;
    for (const auto& row : rep.rows) {
        if (row.valid)
            rows.push_back({row.key, row.lhs, row.rhs, row.ratio});
        else
            rows.push_back({row.key, kNaN, kNaN, kNaN});
    }
    emit(a.out, comments, "delta,phi_direct,theta,ratio", rows);
}

struct ConjugateArgs {
    std::string g, out;
    GridOpts grid{0.0, 10.0, 129, "linear"};
};

void run_conjugate(const ConjugateArgs& a) {
    ScalarFunction g = parse_scalar_spec(a.g, 0.0, kInf);
    auto qs = make_grid(a.grid, "q");
    ConjugateResult res = legendre_grid(g, qs);
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < qs.size(); ++i)
        rows.push_back({res.q_grid[i], res.values[i], res.argmax_trace[i]});
    emit(a.out, {"g=" + g.describe()}, "q,value,argmax", rows);
}

struct InvertArgs {
    std::string phi, C = "auto", out;
    GridOpts grid{0.0, 0.0, 129, "log"};  // lo=hi=0 means the covered window
};

void run_invert(const InvertArgs& a) {
    FundamentalFunction phi(parse_scalar_spec(a.phi, 0.0, kInf));
    std::vector<std::string> comments;
    double C = resolve_C(a.C, phi, comments);
    InversionResult res = (a.grid.lo < a.grid.hi)
                              ? psi_from_fundamental(phi, C, make_grid(a.grid, "p"))
                              : psi_from_fundamental(phi, C);
    comments.insert(comments.begin(), "C=" + csv::format_full(res.C) +
                                          " defect=" + csv::format_full(res.vstar_defect));
    comments.push_back("p_covered_lo=" + csv::format_full(res.p_covered_lo) +
                       " p_covered_hi=" + csv::format_full(res.p_covered_hi));
    comments.push_back("interp=linear monotonicity=increasing");
    const Tabulation* tab = res.psi.psi().as_tabulation();
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < tab->x.size(); ++i) rows.push_back({tab->x[i], tab->y[i]});
    emit(a.out, comments, "x,value", rows);
}

struct NormArgs {
    std::string f, psi, kind = "auto", out;
};

void run_norm(const NormArgs& a) {
    csv::WeightedSamples ws = csv::load_weighted(a.f);
    DiscreteMeasureSpace::Kind kind;
    if (a.kind == "probability") {
        kind = DiscreteMeasureSpace::Kind::probability;
    } else if (a.kind == "truncated") {
        kind = DiscreteMeasureSpace::Kind::truncated_infinite;
    } else if (a.kind == "auto") {
        kind = std::abs(num::kahan_sum(ws.weights) - 1.0) <= 1e-9
                   ? DiscreteMeasureSpace::Kind::probability
                   : DiscreteMeasureSpace::Kind::truncated_infinite;
    } else {
        throw DomainError("kind must be probability, truncated, or auto");
    }
    DiscreteMeasureSpace space = DiscreteMeasureSpace::from_weights(ws.weights, kind);
    GeneratingFunction gf = parse_psi_spec(a.psi);
    OrliczFunction N = orlicz_from_psi(gf);
    double gls = gls_norm(space, ws.values, gf);
    double lux = luxemburg_norm(space, ws.values, N);
    AmemiyaResult am = orlicz_norm_amemiya(space, ws.values, N);
    std::vector<std::string> comments{
        "f=" + a.f + " atoms=" + std::to_string(space.size()) +
            " total_mass=" + csv::format_full(space.total_mass()) +
            (kind == DiscreteMeasureSpace::Kind::probability ? " kind=probability"
                                                             : " kind=truncated"),
        "psi=" + a.psi,
        "amemiya=" + csv::format_full(am.value) + " bracketed=" + (am.bracketed ? "1" : "0")};
    double ratio = gls > 0.0 ? lux / gls : kNaN;
    emit(a.out, comments, "id,gls,orlicz,ratio", {{0.0, gls, lux, ratio}});
}

struct RoundtripArgs {
    std::string psi, C = "canonical", out;
    GridOpts dgrid{1e-8, 1.0, 800, "log"};
    GridOpts pgrid{1.5, 20.0, 65, "log"};
    double tol = 0.02;
};

void run_roundtrip(const RoundtripArgs& a) {
    GeneratingFunction gf = parse_psi_spec(a.psi);
    auto deltas = make_grid(a.dgrid, "delta");
    OrliczFunction N = orlicz_from_psi(gf);
    std::vector<double> thetas(deltas.size());
    for (size_t i = 0; i < deltas.size(); ++i) thetas[i] = theta_from_orlicz(N, deltas[i]);
    FundamentalFunction phi(ScalarFunction::tabulation(deltas, thetas)
                                .with_monotonicity(Monotonicity::increasing));
    std::vector<std::string> comments;
    double C = (a.C == "canonical") ? std::exp(-gf.a()) : resolve_C(a.C, phi, comments);
    InversionResult res = psi_from_fundamental(phi, C, make_grid(a.pgrid, "p"));
    const Tabulation* tab = res.psi.psi().as_tabulation();
    std::vector<std::vector<double>> rows;
    double max_rel = 0.0;
    for (size_t i = 0; i < tab->x.size(); ++i) {
        double truth = gf(tab->x[i]);
        double rel = std::abs(tab->y[i] - truth) / truth;
        max_rel = std::max(max_rel, rel);
        rows.push_back({tab->x[i], truth, tab->y[i], rel});
    }
    comments.insert(comments.begin(),
                    "psi=" + a.psi + " C=" + csv::format_full(res.C) +
                        " defect=" + csv::format_full(res.vstar_defect));
    comments.push_back("max_rel_err=" + csv::format_full(max_rel) +
                       " tol=" + csv::format_full(a.tol) +
                       " within_tol=" + (max_rel <= a.tol ? std::string("1") : std::string("0")));
    emit(a.out, comments, "p,psi,psi_hat,rel_err", rows);
    if (max_rel > a.tol)
        throw DomainError("roundtrip error " + num::fmt(max_rel) + " exceeds tolerance " +
                          num::fmt(a.tol));
}

struct EofArgs {
    std::string W, psi, space, out;
    double alpha = 1.0;
    std::vector<double> masses{0.5, 1.0, 10.0};
    GridOpts ugrid{1e-3, 20.0, 257, "log"};
};

void run_eof(const EofArgs& a) {
    if (a.W.empty() == a.psi.empty())
        throw DomainError("eof needs exactly one of --W or --psi");
    OrliczFunction base = a.W.empty()
                              ? orlicz_from_psi_eof(parse_psi_spec(a.psi))
                              : eof_from_W(WFunction(parse_scalar_spec(a.W, 2.0, kInf)));
    AlphaPatch patch = alpha_patch(base, a.alpha);
    std::string constants = "alpha=" + csv::format_full(patch.alpha) +
                            " C1=" + csv::format_full(patch.C1) +
                            " C2=" + csv::format_full(patch.C2) +
                            " C3=" + csv::format_full(patch.C3) +
                            " C4=" + csv::format_full(patch.C4) +
                            " C5=" + csv::format_full(patch.C5);
    if (a.space.empty()) {
        auto us = make_grid(a.ugrid, "u");
        std::vector<std::vector<double>> rows;
        for (double u : us) rows.push_back({u, patch.patched(u)});
        std::vector<std::string> comments{constants};
        if (!a.W.empty()) comments.push_back("W=" + a.W);
        if (!a.psi.empty()) comments.push_back("psi=" + a.psi);
        emit(a.out, comments, "x,value", rows);
        return;
    }
    if (a.psi.empty())
        throw DomainError("the norm-equivalence check needs --psi (a GLS side to compare against)");
    GeneratingFunction gf = parse_psi_spec(a.psi);
    DiscreteMeasureSpace space = parse_space_spec(a.space);
    std::vector<std::vector<double>> fs;
    std::vector<double> achieved;
    for (double m : a.masses) {
        Indicator ind = indicator_of_mass(space, m);
        achieved.push_back(ind.achieved_mass);
        fs.push_back(std::move(ind.values));
    }
    ComparisonReport rep = equivalence_report(space, fs, gf, patch.patched);
    std::vector<std::string> comments{constants, "psi=" + a.psi + " space=" + a.space};
    for (size_t i = 0; i < achieved.size(); ++i)
        comments.push_back("id=" + std::to_string(i) +
                           " target_mass=" + csv::format_full(a.masses[i]) +
                           " achieved_mass=" + csv::format_full(achieved[i]));
    if (!rep.rows.empty())
        comments.push_back("ratio_min=" + csv::format_full(rep.ratio_min) +
                           " ratio_max=" + csv::format_full(rep.ratio_max));
    for (const auto& row : rep.rows)
        if (!row.valid)
            comments.push_back("failed id=" + csv::format_full(row.key) + ": " + row.note);
    std::vector<std::vector<double>> rows;
    for (const auto& row : rep.rows) {
        if (row.valid)
            rows.push_back({row.key, row.lhs, row.rhs, row.ratio});
        else
            rows.push_back({row.key, kNaN, kNaN, kNaN});
    }
    emit(a.out, comments, "id,gls,orlicz,ratio", rows);
}

// ---- selftest ----

struct CheckOutcome {
    bool ok = true;
    std::string detail;
};

void expect_rel(CheckOutcome& c, const std::string& label, double got, double want, double tol) {
    double rel = std::abs(got - want) / std::abs(want);
    if (!(rel <= tol)) {
        c.ok = false;
        c.detail += (c.detail.empty() ? "" : "; ") + label + ": got " + num::fmt(got) +
                    ", want " + num::fmt(want) + " (rel " + num::fmt(rel) + ")";
    }
}

int run_selftest() {
    struct Check {
        std::string name;
        CheckOutcome (*fn)();
    };
    const Check checks[] = {
        {"forward point values (psi = sqrt p)",
         [] {
             CheckOutcome c;
             GeneratingFunction gf = GeneratingFunction::power(2.0);
             OrliczFunction N = orlicz_from_psi(gf);
             expect_rel(c, "N(1)", N(1.0), 0.63212, 1e-4);
             expect_rel(c, "N(4)", N(4.0), 54.2303, 1e-4);
             expect_rel(c, "theta(e^-4)", theta_from_orlicz(N, std::exp(-4.0)), 0.24979, 1e-4);
             expect_rel(c, "phi(e^-4)", fundamental_direct(gf, std::exp(-4.0)), 0.21444, 1e-4);
             expect_rel(c, "theta(1)", theta_from_orlicz(N, 1.0), 0.76146, 1e-4);
             return c;
         }},
        {"fundamental scaling law",
         [] {
             CheckOutcome c;
             GeneratingFunction gf = GeneratingFunction::power(2.0);
             double base = fundamental_direct(gf, 0.01);
             double scaled = fundamental_direct(gf.scaled(2.0), 0.01);
             expect_rel(c, "2*phi_{2psi}(0.01)", 2.0 * scaled, base, 1e-9);
             return c;
         }},
        {"Fenchel-Moreau on p^2",
         [] {
             CheckOutcome c;
             ScalarFunction g = ScalarFunction::power(1.0, 2.0, 1.0, 6.0)
                                    .with_convexity(Convexity::convex);
             expect_rel(c, "g**(3)", biconjugate_at(g, 3.0), 9.0, 1e-6);
             return c;
         }},
        {"Luxemburg norm of an indicator",
         [] {
             CheckOutcome c;
             GeneratingFunction gf = GeneratingFunction::power(2.0);
             OrliczFunction N = orlicz_from_psi(gf);
             auto space = DiscreteMeasureSpace::uniform_probability(1000);
             Indicator ind = indicator_of_mass(space, 0.1);
             double lux = luxemburg_norm(space, ind.values, N);
             double thv = theta_from_orlicz(N, ind.achieved_mass);
             expect_rel(c, "luxemburg vs 1/N^{-1}(1/delta)", lux, thv, 1e-8);
             return c;
         }},
        {"alpha patch constants (quadratic weight)",
         [] {
             CheckOutcome c;
             WFunction w(ScalarFunction::quadratic(0.0, 0.0, 0.5, 2.0, kInf)
                             .with_monotonicity(Monotonicity::increasing)
                             .with_convexity(Convexity::convex));
             AlphaPatch patch = alpha_patch(eof_from_W(w), 3.0);
             double e2 = std::exp(2.0);
             expect_rel(c, "C5", patch.C5, e2, 1e-6);
             expect_rel(c, "C4", patch.C4, 2.0, 1e-6);
             expect_rel(c, "C3", patch.C3, -e2, 1e-6);
             expect_rel(c, "C2", patch.C2, 0.75 * e2, 1e-6);
             expect_rel(c, "C1*C2^3", patch.C1 * std::pow(patch.C2, 3.0),
                        patch.C4 * patch.C2 / 3.0, 1e-6);
             return c;
         }},
        {"generating function roundtrip (psi = sqrt p)",
         [] {
             CheckOutcome c;
             GeneratingFunction gf = GeneratingFunction::power(2.0);
             OrliczFunction N = orlicz_from_psi(gf);
             // Coverage at p = 20 needs 1/theta(delta_lo) above 2*sqrt(20),
             // which the window reaches around delta = 1e-14.
             auto deltas = num::log_grid(1e-14, 1.0, 240);
             std::vector<double> thetas(deltas.size());
             for (size_t i = 0; i < deltas.size(); ++i)
                 thetas[i] = theta_from_orlicz(N, deltas[i]);
             FundamentalFunction phi(ScalarFunction::tabulation(deltas, thetas)
                                         .with_monotonicity(Monotonicity::increasing));
             InversionResult res =
                 psi_from_fundamental(phi, std::exp(-1.0), num::log_grid(1.5, 20.0, 33));
             const Tabulation* tab = res.psi.psi().as_tabulation();
             double max_rel = 0.0;
             for (size_t i = 0; i < tab->x.size(); ++i)
                 max_rel = std::max(max_rel,
                                    std::abs(tab->y[i] - gf(tab->x[i])) / gf(tab->x[i]));
             if (!(max_rel <= 0.02)) {
                 c.ok = false;
                 c.detail = "max relative error " + num::fmt(max_rel) + " exceeds 0.02";
             }
             return c;
         }},
        {"Trudinger point values",
         [] {
             CheckOutcome c;
             expect_rel(c, "exp(u)-1 at 1", trudinger(1.0, 0)(1.0), std::exp(1.0) - 1.0, 1e-9);
             expect_rel(c, "exp(u^2)-1-u^2 at 1", trudinger(2.0, 1)(1.0), std::exp(1.0) - 2.0,
                        1e-9);
             return c;
         }},
        {"rejects psi = p (inverse map undefined)",
         [] {
             CheckOutcome c;
             try {
                 nu_from_psi(GeneratingFunction::power(1.0));
                 c.ok = false;
                 c.detail = "expected NotIncreasing, nothing thrown";
             } catch (const NotIncreasing&) {
             }
             return c;
         }},
    };
    int failures = 0;
    for (const auto& check : checks) {
        CheckOutcome c;
        try {
            c = check.fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("threw: ") + e.what();
        }
        if (c.ok) {
            std::printf("PASS %s\n", check.name.c_str());
        } else {
            ++failures;
            std::printf("FAIL %s: %s\n", check.name.c_str(), c.detail.c_str());
        }
    }
    std::printf("%d/%d checks passed\n", int(std::size(checks)) - failures,
                int(std::size(checks)));
    return failures == 0 ? 0 : 1;
}

void add_grid_opts(CLI::App* sub, GridOpts& g, const std::string& prefix,
                   const std::string& what) {
    sub->add_option("--" + prefix + "-lo", g.lo, "low end of the " + what + " grid")
        ->capture_default_str();
    sub->add_option("--" + prefix + "-hi", g.hi, "high end of the " + what + " grid")
        ->capture_default_str();
    sub->add_option("--" + prefix + "-n", g.n, "number of " + what + " grid points")
        ->capture_default_str();
    sub->add_option("--" + prefix + "-spacing", g.spacing, "log or linear")
        ->capture_default_str()
        ->check(CLI::IsMember({"log", "linear"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "glsfun: grand Lebesgue space toolkit. Converts between generating\n"
        "functions psi, fundamental functions phi, and Young-Orlicz functions N;\n"
        "computes GLS, Luxemburg, and Amemiya norms on discrete measure spaces.\n"
        "Exit codes: 0 success, 1 validation or hypothesis failure, 2 I/O failure."};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; command-line flags win");
    long long seed = 0;
    app.add_option("--seed", seed, "reserved for future randomized modes; accepted, unused");

    FundamentalArgs fa;
    auto* fund = app.add_subcommand(
        "fundamental", "tabulate phi_direct and theta over a delta grid and compare");
    fund->add_option("--psi", fa.psi,
                     "generating function: power:m=<v>[,a=<v>] | grand:beta=<v>,b=<v>[,a=<v>] | "
                     "scaled:C=<v>,inner=<spec> | csv:<path>")
        ->required();
    add_grid_opts(fund, fa.grid, "delta", "delta");
    fund->add_option("--n", fa.grid.n, "alias for --delta-n");
    fund->add_option("--out", fa.out, "output CSV path (stdout when omitted)");

    ConjugateArgs ca;
    auto* conj = app.add_subcommand("conjugate",
                                    "tabulate the Young-Fenchel transform of a function");
    conj->add_option("--g", ca.g,
                     "function to conjugate: kind:key=value,... (power, affine, quadratic, "
                     "exp_affine, grand) or a path to an x,value CSV")
        ->required();
    add_grid_opts(conj, ca.grid, "q", "q");
    conj->add_option("--out", ca.out, "output CSV path (stdout when omitted)");

    InvertArgs ia;
    auto* inv = app.add_subcommand(
        "invert", "recover a generating function from a fundamental function");
    inv->add_option("--phi", ia.phi,
                    "fundamental function: path to an x,value CSV, or kind:key=value,... "
                    "(domain must be a bounded window with lo > 0)")
        ->required();
    inv->add_option("--C", ia.C, "shift constant, a number or 'auto' (convexity scan)")
        ->capture_default_str();
    add_grid_opts(inv, ia.grid, "p", "exponent");
    inv->add_option("--out", ia.out, "output CSV path (stdout when omitted)");

    NormArgs na;
    auto* nrm = app.add_subcommand(
        "norm", "GLS, Luxemburg, and Amemiya norms of a weight,value sample file");
    nrm->add_option("--f", na.f, "path to a weight,value CSV")->required();
    nrm->add_option("--psi", na.psi, "generating function spec")->required();
    nrm->add_option("--kind", na.kind, "probability | truncated | auto (sum==1 test)")
        ->capture_default_str()
        ->check(CLI::IsMember({"probability", "truncated", "auto"}));
    nrm->add_option("--out", na.out, "output CSV path (stdout when omitted)");

    RoundtripArgs ra;
    auto* rt = app.add_subcommand(
        "roundtrip", "forward pipeline to theta, inverse pipeline back, error summary");
    rt->add_option("--psi", ra.psi, "generating function spec")->required();
    rt->add_option("--C", ra.C, "shift constant: number, 'auto', or 'canonical' (exp(-a))")
        ->capture_default_str();
    add_grid_opts(rt, ra.dgrid, "delta", "delta");
    add_grid_opts(rt, ra.pgrid, "p", "exponent");
    rt->add_option("--tol", ra.tol, "maximum accepted relative recovery error")
        ->capture_default_str();
    rt->add_option("--out", ra.out, "output CSV path (stdout when omitted)");

    EofArgs ea;
    auto* eof = app.add_subcommand(
        "eof", "exponential Orlicz function with a power patch near the origin");
    eof->add_option("--W", ea.W,
                    "weight on [2,inf): kind:key=value,... (lo defaults to 2) or CSV path");
    eof->add_option("--psi", ea.psi, "generating function spec (exponential class)");
    eof->add_option("--alpha", ea.alpha, "patch exponent at the origin, >= 1")
        ->capture_default_str();
    eof->add_option("--space", ea.space,
                    "measure space for the norm-equivalence check: uniform:n=<v> | "
                    "geometric:M=<v>,n=<v>[,spread=<v>]");
    eof->add_option("--masses", ea.masses, "indicator target masses for the check")
        ->capture_default_str()
        ->delimiter(',');
    add_grid_opts(eof, ea.ugrid, "u", "tabulation");
    eof->add_option("--out", ea.out, "output CSV path (stdout when omitted)");

    auto* st = app.add_subcommand("selftest", "run the built-in invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*fund) run_fundamental(fa);
        if (*conj) run_conjugate(ca);
        if (*inv) run_invert(ia);
        if (*nrm) run_norm(na);
        if (*rt) run_roundtrip(ra);
        if (*eof) run_eof(ea);
        if (*st) return run_selftest();
    } catch (const csv::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
