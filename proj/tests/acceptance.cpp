// Acceptance suite: end-to-end checks of the central-value sign identity and
// its supporting stack on the three explicit arithmetic families.  Each
// criterion prints one pass/fail line with its runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "scatdet/divisor.hpp"
#include "scatdet/numerics.hpp"
#include "scatdet/scattering.hpp"
#include "scatdet/specfun.hpp"
#include "scatdet/superzeta.hpp"
#include "scatdet/surface.hpp"

using namespace scatdet;
using scattering::ScatteringFamily;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::vector<ScatteringFamily> allFamilies() {
    return {
        ScatteringFamily::modular(),          ScatteringFamily::gamma0({2}),
        ScatteringFamily::gamma0({3}),        ScatteringFamily::gamma0({5}),
        ScatteringFamily::gamma0({2, 3}),     ScatteringFamily::gamma0({2, 3, 5}),
        ScatteringFamily::gamma0plus({}),     ScatteringFamily::gamma0plus({2}),
        ScatteringFamily::gamma0plus({2, 3}), ScatteringFamily::gamma0plus({2, 3, 5}),
    };
}

struct Criterion {
    std::string name;
    double budgetSeconds;
    std::function<bool(std::string&)> check;
};

bool expect(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// --- criterion 1: modular group ------------------------------------------

bool criterion1(std::string& detail) {
    const auto fam = ScatteringFamily::modular();
    bool ok = true;
    const LaurentGerm g = scattering::germAt(fam, 0.5);
    ok &= expect(g.order == 0 && std::abs(g.leading() + 1.0) < 1e-8, detail,
                 "germ value at 1/2 is not -1");
    const auto dc = divisor::countDivisor(fam);
    ok &= expect(dc.zeros == 0 && dc.poles == 1, detail, "(N,P) != (0,1)");
    const auto head = scattering::dirichletHead(fam, 1);
    ok &= expect(head.d1 > 0, detail, "sgn d(1) != +1");
    ok &= expect(divisor::verifyTheorem(fam).ok, detail, "theorem identity failed");
    return ok;
}

// --- criterion 2: Gamma0(N), N squarefree --------------------------------

bool criterion2(std::string& detail) {
    bool ok = true;
    const std::vector<std::vector<long long>> sets = {{2}, {3}, {5}, {2, 3}, {2, 3, 5}};
    for (const auto& primes : sets) {
        const auto fam = ScatteringFamily::gamma0(primes);
        const int r = int(primes.size());
        const LaurentGerm g = scattering::germAt(fam, 0.5);
        ok &= expect(g.order == 0 && std::abs(g.leading() - 1.0) < 1e-8, detail,
                     fam.label() + ": phi(1/2) != +1");
        const auto dc = divisor::countDivisor(fam);
        ok &= expect(dc.zeros == r * (1 << (r - 1)) && dc.poles == (1 << r), detail,
                     fam.label() + ": (N,P) mismatch");
        for (const auto& e : dc.breakdown)
            ok &= expect(e.location == 1.0, detail, fam.label() + ": divisor not at s = 1");
        const auto head = scattering::dirichletHead(fam, 1);
        if (r == 1)
            ok &= expect(head.d1 < 0, detail, fam.label() + ": sgn d(1) != -1");
        ok &= expect(divisor::verifyTheorem(fam).ok, detail,
                     fam.label() + ": theorem identity failed");
    }
    return ok;
}

// --- criterion 3: Gamma0(N)+ ----------------------------------------------

bool criterion3(std::string& detail) {
    bool ok = true;
    const std::vector<std::vector<long long>> sets = {{}, {2}, {2, 3}, {2, 3, 5}};
    for (const auto& primes : sets) {
        const auto fam = ScatteringFamily::gamma0plus(primes);
        const LaurentGerm g = scattering::germAt(fam, 0.5);
        ok &= expect(g.order == 0 && std::abs(g.leading() + 1.0) < 1e-8, detail,
                     fam.label() + ": phi(1/2) != -1");
        const auto dc = divisor::countDivisor(fam);
        ok &= expect(dc.zeros == 0 && dc.poles == 1, detail, fam.label() + ": (N,P) != (0,1)");
        const auto head = scattering::dirichletHead(fam, 1);
        ok &= expect(std::abs(head.g1 - std::sqrt(double(fam.level()))) < 1e-10, detail,
                     fam.label() + ": g1 != sqrt(N)");
        ok &= expect(divisor::verifyTheorem(fam).ok, detail,
                     fam.label() + ": theorem identity failed");
    }
    return ok;
}

// --- criterion 4: functional equation -------------------------------------

bool criterion4(std::string& detail) {
    std::mt19937 gen(0xfe2026u);
    std::uniform_real_distribution<double> reDist(-2.0, 3.0), imDist(0.05, 15.0),
        signDist(0.0, 1.0);
    double worst = 0.0;
    for (const auto& fam : allFamilies()) {
        int done = 0;
        while (done < 100) {
            const Complex s(reDist(gen), (signDist(gen) < 0.5 ? -1.0 : 1.0) * imDist(gen));
            Complex prod;
            try {
                prod = scattering::phiEval(fam, s) * scattering::phiEval(fam, 1.0 - s);
            } catch (const SingularityError&) {
                continue;
            }
            worst = std::max(worst, std::abs(prod - 1.0));
            ++done;
        }
    }
    detail = "max |phi(s)phi(1-s) - 1| = " + std::to_string(worst);
    return worst < 1e-8;
}

// --- criterion 5: multiplicity identity -----------------------------------

bool criterion5(std::string& detail) {
    const std::vector<surface::GroupDescriptor> descs = {
        surface::GroupDescriptor::modular(),
        surface::GroupDescriptor(0, 1, {2, 3, 7}),
        surface::GroupDescriptor(0, 1, {2, 2, 3, 3}),
        surface::GroupDescriptor(1, 1, {}),
        surface::GroupDescriptor(0, 3, {}),
    };
    for (const auto& desc : descs) {
        for (int n = 0; n <= 200; ++n) {
            const auto rep = surface::multiplicityReport(desc, n);
            if (!rep.agree || rep.floorFormula != std::llround(rep.sineFormula)) {
                detail = "disagreement at n = " + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

// --- criterion 6: modular Dirichlet head -----------------------------------

long long totientByFactorization(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        result -= result / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(long long n) {
    int factors = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

bool criterion6(std::string& detail) {
    const auto fam = ScatteringFamily::modular();
    const auto head = scattering::dirichletHead(fam, 50);
    for (long long n = 2; n <= 50; ++n) {
        long long conv = 0;
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0) conv += d * moebius(n / d);
        if (conv != totientByFactorization(n) ||
            std::abs(head.coefficients[n - 2].second - double(conv)) > 0.0) {
            detail = "d(" + std::to_string(n) + ") != totient";
            return false;
        }
    }
    const auto head40 = scattering::dirichletHead(fam, 40);
    double worst = 0.0;
    for (double s = 3.0; s <= 8.0; s += 0.25) {
        const Complex cs(s, 0.0);
        Complex series = 1.0;
        for (const auto& [u, a] : head40.coefficients) series += a * std::pow(u, -2.0 * s);
        const Complex rec = std::sqrt(kPi) *
                            std::exp(specfun::logGamma(cs - 0.5) - specfun::logGamma(cs)) *
                            head40.d1 * series;
        const Complex direct = scattering::phiEval(fam, cs);
        worst = std::max(worst, std::abs(rec - direct) / std::abs(direct));
    }
    detail = "head reconstruction worst rel err = " + std::to_string(worst);
    return worst < 1e-6;
}

// --- criterion 7: argument principle ---------------------------------------

bool criterion7(std::string& detail) {
    const divisor::Rectangle rect(0.45, 3.2, -0.6, 0.6);
    for (const auto& fam : allFamilies()) {
        const auto dc = divisor::countDivisor(fam);
        int winding = 0;
        try {
            winding = divisor::argumentPrincipleNet(fam, rect);
        } catch (const MathError& e) {
            detail = fam.label() + ": " + e.what();
            return false;
        }
        if (winding != dc.zeros - dc.poles) {
            detail = fam.label() + ": winding " + std::to_string(winding) + " != " +
                     std::to_string(dc.zeros - dc.poles);
            return false;
        }
    }
    // polynomial control: (s-1)(s-2) has exactly two zeros in the rectangle
    const divisor::Rectangle ctrl(0.6, 2.5, -1.0, 1.0);
    const int w = divisor::windingNumber(
        [](Complex s) { return 1.0 / (s - 1.0) + 1.0 / (s - 2.0); }, ctrl);
    if (w != 2) {
        detail = "polynomial control returned " + std::to_string(w);
        return false;
    }
    return true;
}

// --- criterion 8: superzeta oracles ----------------------------------------

bool criterion8(std::string& detail) {
    std::mt19937 gen(0x5a2026u);
    std::uniform_real_distribution<double> xDist(-3.0, 3.0), yDist(0.2, 2.0), mDist(0.0, 2.99),
        zDist(0.5, 2.5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<superzeta::ZeroEntry> zeros;
        double maxRe = -1e9;
        const int nReal = 1 + int(mDist(gen));
        for (int i = 0; i < nReal; ++i) {
            const double x = xDist(gen);
            zeros.push_back({Complex(x, 0.0), 1 + int(mDist(gen))});
            maxRe = std::max(maxRe, x);
        }
        const int nPairs = int(mDist(gen));
        for (int i = 0; i < nPairs; ++i) {
            const double x = xDist(gen), y = yDist(gen);
            const int m = 1 + int(mDist(gen));
            zeros.push_back({Complex(x, y), m});
            zeros.push_back({Complex(x, -y), m});
            maxRe = std::max(maxRe, x);
        }
        const Complex z(maxRe + zDist(gen), 0.0);
        const auto zs = superzeta::ZeroSet::finite(zeros);
        Complex prod = 1.0;
        for (const auto& e : zeros) prod *= std::pow(z - e.zero, double(e.multiplicity));
        const Complex det = superzeta::regularizedDet(zs, z);
        if (std::abs(det - prod) > 1e-12 * std::max(1.0, std::abs(prod))) {
            detail = "finite determinant != direct product";
            return false;
        }
    }
    const auto prog = superzeta::ZeroSet::progression(-1.0, -1.0);
    for (double z : {0.5, 1.0, 2.5, 4.0}) {
        const double want =
            std::sqrt(2.0 * kPi) / std::exp(specfun::logGamma(Complex(z + 1.0, 0.0)).real());
        if (std::abs(superzeta::regularizedDet(prog, Complex(z, 0.0)).real() - want) > 1e-8) {
            detail = "progression determinant off at z = " + std::to_string(z);
            return false;
        }
    }
    for (const auto& fam : allFamilies()) {
        const auto pipe = superzeta::signPipeline(fam);
        const auto cv = scattering::centralValue(fam);
        if (pipe.sign != (cv.germValue > 0 ? 1 : -1)) {
            detail = fam.label() + ": pipeline sign != germ sign";
            return false;
        }
    }
    return true;
}

// --- criterion 9: corollary values -----------------------------------------

bool criterion9(std::string& detail) {
    const double alphaExp = divisor::corollaryAlpha(ScatteringFamily::modular());
    if (std::abs(alphaExp - 0.564189583548) > 1e-10) {
        detail = "modular e^alpha != 1/sqrt(pi)";
        return false;
    }
    for (const auto& fam : allFamilies()) {
        const auto dc = divisor::countDivisor(fam);
        const auto head = scattering::dirichletHead(fam, 1);
        const double parity = ((dc.zeros + dc.poles) % 2 == 0) ? 1.0 : -1.0;
        const double value = parity * std::pow(kPi, 0.5 * head.cusps) * (head.d1 / head.g1) *
                             divisor::corollaryAlpha(fam);
        if (std::abs(std::abs(value) - 1.0) > 1e-10) {
            detail = fam.label() + ": reassembly is not a sign";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"modular group: central value, divisor, theorem", 1.0, criterion1},
        {"Gamma0(N) squarefree r=1..3: central value, divisor, d(1), theorem", 5.0, criterion2},
        {"Gamma0(N)+ sets {},{2},{2,3},{2,3,5}: central value, divisor, g1, theorem", 5.0,
         criterion3},
        {"functional equation |phi(s)phi(1-s) - 1| < 1e-8, 100 samples/family", 10.0,
         criterion4},
        {"multiplicity identity floor vs sine, n <= 200, five descriptors", 1.0, criterion5},
        {"modular Dirichlet head: totient match and 1e-6 reconstruction", 2.0, criterion6},
        {"argument principle matches symbolic N - P; polynomial control", 30.0, criterion7},
        {"superzeta oracles: products, Lerch values, sign pipeline", 5.0, criterion8},
        {"corollary values: e^alpha and exact sign reassembly", 5.0, criterion9},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool inBudget = secs < c.budgetSeconds;
        ok = ok && inBudget;
        std::printf("[%s] criterion %zu: %s (%.2f s%s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), secs, inBudget ? "" : ", OVER BUDGET",
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
