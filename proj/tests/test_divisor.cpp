#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scatdet/divisor.hpp"
#include "test_util.hpp"

using namespace scatdet;
using namespace scatdet::divisor;
using scattering::ScatteringFamily;
using testutil::kPi;

namespace {

std::vector<ScatteringFamily> acceptanceFamilies() {
    return {
        ScatteringFamily::modular(),
        ScatteringFamily::gamma0({2}),
        ScatteringFamily::gamma0({3}),
        ScatteringFamily::gamma0({5}),
        ScatteringFamily::gamma0({2, 3}),
        ScatteringFamily::gamma0({2, 3, 5}),
        ScatteringFamily::gamma0plus({}),
        ScatteringFamily::gamma0plus({2}),
        ScatteringFamily::gamma0plus({2, 3}),
        ScatteringFamily::gamma0plus({2, 3, 5}),
    };
}

}  // namespace

TEST_CASE("countDivisor ledgers for the three example families") {
    const auto mod = countDivisor(ScatteringFamily::modular());
    CHECK(mod.zeros == 0);
    CHECK(mod.poles == 1);
    REQUIRE(mod.breakdown.size() == 1);
    CHECK(mod.breakdown[0].location == doctest::Approx(1.0));
    CHECK(!mod.justifications.empty());

    const auto g0 = countDivisor(ScatteringFamily::gamma0({2, 3}));
    CHECK(g0.zeros == 4);   // r 2^{r-1}
    CHECK(g0.poles == 4);   // 2^r
    for (const auto& e : g0.breakdown) CHECK(e.location == doctest::Approx(1.0));

    const auto plus = countDivisor(ScatteringFamily::gamma0plus({2, 3, 5}));
    CHECK(plus.zeros == 0);
    CHECK(plus.poles == 1);
}

TEST_CASE("divisor counts satisfy the ledger invariants") {
    for (const auto& fam : acceptanceFamilies()) {
        const auto dc = countDivisor(fam);
        int zeros = 0, poles = 0;
        for (const auto& e : dc.breakdown) {
            CHECK(e.location > 0.5);
            zeros += std::max(e.order, 0);
            poles += std::max(-e.order, 0);
        }
        CHECK(dc.zeros == zeros);
        CHECK(dc.poles == poles);
    }
}

TEST_CASE("parity law for squarefree levels") {
    // N + P = 2^{r-1}(r+2): odd exactly when r = 1.
    const std::vector<std::vector<long long>> primeSets = {{2}, {2, 3}, {2, 3, 5}};
    for (int r = 1; r <= 3; ++r) {
        const auto dc = countDivisor(ScatteringFamily::gamma0(primeSets[r - 1]));
        const int total = dc.zeros + dc.poles;
        CHECK(total == (1 << (r - 1)) * (r + 2));
        CHECK((total % 2 == 1) == (r == 1));
    }
}

TEST_CASE("windingNumber on the polynomial control case") {
    // (s-1)(s-2) on [0.6, 2.5] x [-1, 1] has exactly two zeros inside.
    const Rectangle rect(0.6, 2.5, -1.0, 1.0);
    auto logDeriv = [](Complex s) { return 1.0 / (s - 1.0) + 1.0 / (s - 2.0); };
    CHECK(windingNumber(logDeriv, rect) == 2);
}

TEST_CASE("argumentPrincipleNet agrees with the symbolic ledger locally") {
    const Rectangle rect(0.6, 1.5, -0.5, 0.5);
    CHECK(argumentPrincipleNet(ScatteringFamily::modular(), rect) == -1);
    CHECK(argumentPrincipleNet(ScatteringFamily::gamma0({2, 3}), rect) == 0);  // 4 - 4
}

TEST_CASE("argumentPrincipleNet agrees with the ledger on a rectangle covering (1/2, 3]") {
    const Rectangle rect(0.45, 3.2, -0.6, 0.6);
    for (const auto& fam : acceptanceFamilies()) {
        const auto dc = countDivisor(fam);
        CHECK(argumentPrincipleNet(fam, rect) == dc.zeros - dc.poles);
    }
}

TEST_CASE("verifyTheorem on the example families") {
    const auto mod = verifyTheorem(ScatteringFamily::modular());
    CHECK(mod.zeros + mod.poles == 1);
    CHECK(mod.sgnD1 == 1);
    CHECK(mod.predicted == -1);
    CHECK(mod.ok);

    const auto g0p = verifyTheorem(ScatteringFamily::gamma0({5}));
    CHECK(g0p.zeros + g0p.poles == 3);
    CHECK(g0p.sgnD1 == -1);
    CHECK(g0p.predicted == 1);
    CHECK(g0p.ok);

    const auto plus = verifyTheorem(ScatteringFamily::gamma0plus({2}));
    CHECK(plus.zeros + plus.poles == 1);
    CHECK(plus.sgnD1 == 1);
    CHECK(plus.predicted == -1);
    CHECK(plus.ok);
}

TEST_CASE("verifyTheorem holds across the acceptance set") {
    for (const auto& fam : acceptanceFamilies()) CHECK(verifyTheorem(fam).ok);
}

TEST_CASE("corollaryAlpha values") {
    CHECK(std::abs(corollaryAlpha(ScatteringFamily::modular()) - 1.0 / std::sqrt(kPi)) < 1e-12);
    CHECK(std::abs(corollaryAlpha(ScatteringFamily::gamma0plus({2, 3})) -
                   std::sqrt(6.0) / std::sqrt(kPi)) < 1e-12);
    for (const auto& fam : acceptanceFamilies()) CHECK(corollaryAlpha(fam) > 0.0);
}

TEST_CASE("central-value reassembly from the corollary is exactly a sign") {
    for (const auto& fam : acceptanceFamilies()) {
        const auto dc = countDivisor(fam);
        const auto head = scattering::dirichletHead(fam, 1);
        const double parity = ((dc.zeros + dc.poles) % 2 == 0) ? 1.0 : -1.0;
        const double value = parity * std::pow(kPi, 0.5 * head.cusps) * (head.d1 / head.g1) *
                             corollaryAlpha(fam);
        const double sign = parity * (head.d1 > 0 ? 1.0 : -1.0);
        CHECK(std::abs(value - sign) < 1e-10);
    }
}

TEST_CASE("rectangle validation and contour guards") {
    CHECK_THROWS_AS(Rectangle(1.0, 0.5, -1.0, 1.0), DomainError);
    // Left edge through the pole at s = 1: the |phi| guard must fire.
    const Rectangle bad(1.0, 2.0, -0.5, 0.5);
    CHECK_THROWS_AS(argumentPrincipleNet(ScatteringFamily::modular(), bad),
                    ContourTooCloseError);
    // A half-integer "residue" cannot round to a winding number.
    const Rectangle rect(0.6, 1.5, -0.5, 0.5);
    CHECK_THROWS_AS(windingNumber([](Complex s) { return 0.5 / (s - 1.0); }, rect),
                    NonIntegerWindingError);
}
