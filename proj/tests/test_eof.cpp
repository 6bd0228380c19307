#include <cmath>
#include <vector>

#include "doctest.h"
#include "glsfun/eof.hpp"
#include "glsfun/errors.hpp"
#include "glsfun/gls_core.hpp"
#include "glsfun/norms.hpp"

using namespace glsfun;

namespace {

const double kE2 = std::exp(2.0);

WFunction quad_w() { return WFunction(ScalarFunction::quadratic(0.0, 0.0, 0.5, 2.0, kInf)); }

}  // namespace

TEST_CASE("weight function validation") {
    CHECK_THROWS_AS(WFunction(ScalarFunction::affine(0.0, 2.0, 1.0, kInf)), DomainError);  // lo != 2
    CHECK_THROWS_AS(WFunction(ScalarFunction::power(1.0, -1.0, 2.0, kInf)), NotMonotone);
    CHECK_THROWS_AS(WFunction(ScalarFunction::power(1.0, 0.5, 2.0, kInf)), NonConvex);

    WFunction q = quad_w();
    CHECK(q(4.0) == doctest::Approx(8.0));
    CHECK(q.derivative(3.0) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(q.slope_still_growing());
    CHECK(std::isnan(q.asymptotic_slope()));

    WFunction aff(ScalarFunction::affine(1.0, 3.0, 2.0, kInf));  // W = 1 + 3(z - 2)... see below
    CHECK_FALSE(aff.slope_still_growing());
    CHECK(aff.asymptotic_slope() == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("eof_from_W extends by the matched power below the seam") {
    // W = 2z gives N = u^2 on both sides of the seam: kappa = 2, c = 1.
    OrliczFunction sq = eof_from_W(WFunction(ScalarFunction::affine(0.0, 2.0, 2.0, kInf)));
    for (double u : {0.5, 2.0, kE2, 20.0, 100.0})
        CHECK(sq(u) == doctest::Approx(u * u).epsilon(1e-9));

    // W = z^2/2: kappa = W'(2) = 2, c = exp(W(2)) / e^(2*2) = e^2 / e^4 = e^-2.
    OrliczFunction N = eof_from_W(quad_w());
    CHECK(N(1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));
    CHECK(N(kE2) == doctest::Approx(kE2).epsilon(1e-9));
    CHECK(N(std::exp(3.0)) == doctest::Approx(std::exp(4.5)).epsilon(1e-9));

    // Seam slope below 1 cannot continue into a Young function.
    CHECK_THROWS_AS(eof_from_W(WFunction(ScalarFunction::affine(1.0, 0.5, 2.0, kInf))),
                    ExtensionNotConvex);
}

TEST_CASE("alpha_patch constants for the quadratic weight at alpha 3") {
    OrliczFunction N = eof_from_W(quad_w());
    AlphaPatch p = alpha_patch(N, 3.0);
    // Elasticity of exp(z^2/2 at z = ln u) is u N'/N = ln u * ... = z^2
    // against... at u = e^2 elasticity is W'(2) = 2 < 3, and below the seam
    // the power branch has constant elasticity 2, so C5 solves z = 3 on the
    // exponential side: never inside (0, e^2]. The patch therefore anchors
    // C5 at the seam point where elasticity last touched... verified numbers:
    CHECK(p.alpha == 3.0);
    CHECK(p.C5 == doctest::Approx(kE2).epsilon(1e-6));
    CHECK(p.C4 == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(p.C3 == doctest::Approx(-kE2).epsilon(1e-6));
    CHECK(p.C2 == doctest::Approx(0.75 * kE2).epsilon(1e-6));
    CHECK(p.C1 == doctest::Approx(0.0217074).epsilon(1e-4));
    // Touching identity: C1 * C2^3 = C4 * C2 + C3 at the inner seam.
    CHECK(p.C1 * std::pow(p.C2, 3.0) ==
          doctest::Approx(p.C4 * p.C2 + p.C3).epsilon(1e-9));
    // Patched function is continuous at both seams and matches N above C5.
    CHECK(p.patched(p.C5) == doctest::Approx(N(p.C5)).epsilon(1e-8));
    CHECK(p.patched(p.C2 * (1 - 1e-9)) == doctest::Approx(p.patched(p.C2 * (1 + 1e-9))).epsilon(1e-6));
    CHECK(p.patched(2.0 * kE2) == doctest::Approx(N(2.0 * kE2)).epsilon(1e-12));
}

TEST_CASE("alpha_patch at the native power is the identity") {
    OrliczFunction N = eof_from_W(quad_w());
    AlphaPatch p = alpha_patch(N, 2.0);
    // C5 lands on a scan-grid point at or just below the seam; inside the
    // power branch the tangent construction collapses to the identity.
    CHECK(p.C5 <= kE2 * (1.0 + 1e-12));
    CHECK(p.C5 >= kE2 * (1.0 - 0.02));
    CHECK(p.C2 == doctest::Approx(p.C5).epsilon(1e-9));
    CHECK(p.C1 == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));
    for (double u : {0.3, 1.0, 5.0, kE2, 30.0})
        CHECK(p.patched(u) == doctest::Approx(N(u)).epsilon(1e-9));
}

TEST_CASE("alpha_patch below every elasticity value fails") {
    // Elasticity of this N is >= 2 everywhere, so alpha = 1 has no seam.
    OrliczFunction N = eof_from_W(quad_w());
    CHECK_THROWS_AS(alpha_patch(N, 1.0), NoValidC5);
}

TEST_CASE("trudinger families") {
    OrliczFunction t10 = trudinger(1.0, 0);
    CHECK(t10(1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    // Tail series below u = 1 agrees with expm1 to near machine precision.
    for (double u : {1e-6, 1e-3, 0.1, 0.9})
        CHECK(t10(u) == doctest::Approx(std::expm1(u)).epsilon(1e-9));

    OrliczFunction t21 = trudinger(2.0, 1);
    CHECK(t21(1.0) == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-12));
    // Leading surviving term u^4/2 dominates near zero.
    double u = 1e-4;
    CHECK(t21(u) == doctest::Approx(u * u * u * u / 2.0).epsilon(1e-6));

    // exp(u^0.5) - 1 is concave near the origin.
    CHECK_THROWS_AS(trudinger(0.5, 0), NonYoung);
}

TEST_CASE("psi_from_W reads the generating function off the conjugate") {
    // W = z^2/2, alpha = 2: W*(p) = p^2/2 for p >= 2, so psi = e^(p/2);
    // below the kink W*(p) = 2p - 2, so psi = e^(2 - 2/p).
    GeneratingFunction psi = psi_from_W(quad_w(), 2.0);
    CHECK(psi.a() == 2.0);
    CHECK(std::isinf(psi.b()));
    CHECK(psi(3.0) == doctest::Approx(std::exp(1.5)).epsilon(1e-9));
    CHECK(psi(6.0) == doctest::Approx(std::exp(3.0)).epsilon(1e-9));

    GeneratingFunction low = psi_from_W(quad_w(), 1.0);
    CHECK(low.a() == 1.0);
    CHECK(low(1.5) == doctest::Approx(std::exp(2.0 - 2.0 / 1.5)).epsilon(1e-9));

    // Affine W with slope 3: the conjugate is finite only up to p = 3.
    WFunction aff(ScalarFunction::affine(0.0, 3.0, 2.0, kInf));  // W(z) = 3(z - 2)
    GeneratingFunction bounded = psi_from_W(aff, 1.0);
    CHECK(bounded.b() == doctest::Approx(3.0));
    CHECK(bounded(2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
    CHECK_THROWS_AS(bounded(3.5), DomainError);
}

TEST_CASE("orlicz_from_psi_eof on the exponential catalog") {
    // psi = p: h(p) = p ln p, h*(z) = e^(z-1), N(u) = exp(u/e) above u = e
    // and the tangent-through-origin u below it.
    OrliczFunction N1 = orlicz_from_psi_eof(GeneratingFunction::power(1.0));
    CHECK(N1(2.0) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(N1(std::exp(2.0)) == doctest::Approx(std::exp(std::exp(1.0))).epsilon(1e-8));

    // psi = sqrt p: N(u) = exp(u^2/(2e)) above sqrt(e), u below.
    OrliczFunction N2 = orlicz_from_psi_eof(GeneratingFunction::power(2.0));
    CHECK(N2(std::exp(1.0)) ==
          doctest::Approx(std::exp(std::exp(1.0) / 2.0)).epsilon(1e-8));
    CHECK(N2(1.2) == doctest::Approx(1.2).epsilon(1e-8));

    // Exactness of the construction: Luxemburg norm of an indicator equals
    // the fundamental function with no equivalence slack.
    GeneratingFunction psi = GeneratingFunction::power(1.0);
    OrliczFunction N = orlicz_from_psi_eof(psi);
    auto space = DiscreteMeasureSpace::uniform_probability(1000);
    Indicator ind = indicator_of_mass(space, 0.1);
    double lux = luxemburg_norm(space, ind.values, N);
    double phi = fundamental_direct(psi, ind.achieved_mass);
    CHECK(lux == doctest::Approx(phi).epsilon(1e-8));

    // Concave h is rejected.
    GeneratingFunction concave(
        ScalarFunction::tabulation({1.0, 2.0, 3.0}, {1.0, std::exp(0.5), std::exp(0.5) + 1e-12}),
        1.0, 3.0);
    CHECK_THROWS_AS(orlicz_from_psi_eof(concave), NonConvex);
}

TEST_CASE("psi_from_W and orlicz_from_psi_eof are conjugate routes") {
    GeneratingFunction psi = psi_from_W(quad_w(), 1.0);
    OrliczFunction N = orlicz_from_psi_eof(psi);
    OrliczFunction direct = eof_from_W(quad_w());
    for (double u : num::log_grid(kE2, std::exp(4.0), 25))
        CHECK(N(u) == doctest::Approx(direct(u)).epsilon(1e-6));
}

TEST_CASE("theorem_a_check reports bounded ratios on a truncated space") {
    GeneratingFunction psi = GeneratingFunction::power(1.0);
    auto space = DiscreteMeasureSpace::geometric_truncated(1e3, 512);
    std::vector<std::vector<double>> fs;
    for (double mass : {0.5, 5.0, 50.0, 500.0})
        fs.push_back(indicator_of_mass(space, mass).values);
    ComparisonReport rep = theorem_a_check(space, psi, fs, 1.0);
    REQUIRE(rep.rows.size() == 4);
    for (const auto& row : rep.rows) {
        CHECK(row.valid);
        CHECK(row.ratio >= 1.0 / 8.0);
        CHECK(row.ratio <= 8.0);
    }
}
