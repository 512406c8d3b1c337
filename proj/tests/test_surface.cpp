#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scatdet/numerics.hpp"
#include "scatdet/specfun.hpp"
#include "scatdet/surface.hpp"
#include "test_util.hpp"

using namespace scatdet;
using namespace scatdet::surface;
using testutil::kPi;

TEST_CASE("volume from the Gauss-Bonnet formula") {
    CHECK(volume(GroupDescriptor::modular()) == doctest::Approx(kPi / 3.0).epsilon(1e-14));
    CHECK(volume(GroupDescriptor(1, 1, {})) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK_THROWS_AS(GroupDescriptor(0, 1, {2}), DomainError);  // 2 pi (-1 + 1/2) < 0
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(GroupDescriptor(0, 0, {2, 3}), DomainError);
    CHECK_THROWS_AS(GroupDescriptor(-1, 2, {}), DomainError);
    CHECK_THROWS_AS(GroupDescriptor(1, 1, {1}), DomainError);
}

TEST_CASE("trivial multiplicities, sine form") {
    const auto mod = GroupDescriptor::modular();
    CHECK(std::abs(trivialMultiplicitySine(mod, 0) - (-1.0)) < 1e-10);  // 1/6 - (1/2 + 2/3)
    CHECK(std::abs(trivialMultiplicitySine(mod, 1) - 1.0) < 1e-10);
    const GroupDescriptor torus(1, 1, {});
    CHECK(std::abs(trivialMultiplicitySine(torus, 5) - 11.0) < 1e-12);  // (vol/2pi)(2n+1)
}

TEST_CASE("trivial multiplicities, floor form (exact integers)") {
    const auto mod = GroupDescriptor::modular();
    CHECK(trivialMultiplicityFloor(mod, 1) == 1);   // 3(-1) + 4 - 0
    CHECK(trivialMultiplicityFloor(mod, 6) == 1);   // 13(-1) + 24 - 2(3+2)
    CHECK(trivialMultiplicityFloor(mod, 0) == -1);  // signed net order, not a count
}

TEST_CASE("sine and floor formulas agree after rounding up to n = 200") {
    const std::vector<GroupDescriptor> descs = {
        GroupDescriptor::modular(),
        GroupDescriptor(0, 1, {2, 3, 7}),
        GroupDescriptor(0, 2, {2, 2, 3, 3}),
        GroupDescriptor(1, 1, {}),
        GroupDescriptor(0, 3, {}),
    };
    for (const auto& desc : descs) {
        for (int n = 0; n <= 200; ++n) {
            const auto rep = multiplicityReport(desc, n);
            CHECK(rep.agree);
            CHECK(rep.floorFormula == std::llround(rep.sineFormula));
        }
    }
}

TEST_CASE("sine/floor identity, exhaustive and empty cases") {
    CHECK(verifySineFloorIdentity(GroupDescriptor::modular(), 200));
    CHECK(verifySineFloorIdentity(GroupDescriptor(0, 1, {2, 3, 7}), 200));
    CHECK(verifySineFloorIdentity(GroupDescriptor(1, 1, {}), 50));  // empty sums
}

TEST_CASE("logG1 reduces to its Gamma/Barnes blocks") {
    using specfun::kLog2Pi;
    // No elliptic elements, g = 1, c = 1: logG1 = -s log 2pi + 2 log G(s+1) - log Gamma(s);
    // at s = 1 the Barnes and Gamma factors drop out.
    const GroupDescriptor torus(1, 1, {});
    CHECK(std::abs(logG1(torus, Complex(1.0, 0.0)) - Complex(-kLog2Pi, 0.0)) < 1e-12);

    // Modular: recompute the three blocks independently and compare.
    const auto mod = GroupDescriptor::modular();
    const Complex s(1.0, 0.0);
    const Complex blockA = -s * kLog2Pi + 2.0 * specfun::logBarnesG(s) - specfun::logGamma(s);
    const Complex blockB = -s * kLog2Pi + 2.0 * specfun::logBarnesG(s);
    Complex blockE = 0.0;
    for (int d : {2, 3})
        for (int m = 0; m < d; ++m)
            blockE += specfun::logBarnesG((s + double(m)) / double(d));
    const Complex want = -1.0 * blockA + 2.0 * blockB - 2.0 * blockE;
    CHECK(std::abs(logG1(mod, s) - want) < 1e-9);
}

TEST_CASE("logG1 guards its zeros and poles") {
    const auto mod = GroupDescriptor::modular();
    CHECK_THROWS_AS(logG1(mod, Complex(-1.0, 0.0)), ZeroError);   // m_1 = 1
    CHECK_THROWS_AS(logG1(mod, Complex(0.0, 0.0)), PoleError);    // m_0 = -1
}

TEST_CASE("G1 zero multiplicities via contour winding") {
    const auto mod = GroupDescriptor::modular();
    for (int n : {1, 2, 3, 5}) {
        const Complex w = numerics::circleWinding(
            [&](Complex s) { return logG1Deriv(mod, s); }, Complex(-double(n), 0.0), 0.3, 4096);
        const long long want = trivialMultiplicityFloor(mod, n);
        CHECK(std::abs(w - double(want)) < 1e-3);
    }
    const GroupDescriptor torus(1, 1, {});
    for (int n : {1, 2, 3, 5}) {
        const Complex w = numerics::circleWinding(
            [&](Complex s) { return logG1Deriv(torus, s); }, Complex(-double(n), 0.0), 0.3, 4096);
        CHECK(std::abs(w - double(2 * n + 1)) < 1e-3);
    }
}

TEST_CASE("logG1 derivative winds to zero on loops enclosing no integer") {
    const auto mod = GroupDescriptor::modular();
    const Complex w = numerics::circleWinding(
        [&](Complex s) { return logG1Deriv(mod, s); }, Complex(-1.5, 0.0), 0.2, 4096);
    CHECK(std::abs(w) < 1e-9);
    // Branch consistency of logG1 itself: accumulated increments return to the start.
    Complex prev = logG1(mod, Complex(-1.3, 0.0));
    Complex acc = 0.0;
    const int nodes = 512;
    for (int j = 1; j <= nodes; ++j) {
        const double th = 2.0 * kPi * j / nodes;
        const Complex s = Complex(-1.5, 0.0) + 0.2 * Complex(std::cos(th), std::sin(th));
        const Complex cur = logG1(mod, s);
        acc += cur - prev;
        prev = cur;
    }
    CHECK(std::abs(acc) < 1e-9);
}
