#include "scatdet/divisor.hpp"

#include <cmath>
#include <mutex>

#include "scatdet/laurent.hpp"
#include "scatdet/numerics.hpp"
#include "scatdet/specfun.hpp"

namespace scatdet::divisor {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr Complex kTwoPiI{0.0, 2.0 * kPi};

using scattering::FamilyKind;
using scattering::ScatteringFamily;
using specfun::digamma;
using specfun::riemannZeta;
using specfun::zetaDerivative;

// zeta(x) < 0 on (0,1) and zeta(x) > 0 on (1,oo): checked once on a grid so
// the "no real zeros of zeta(2s-1) right of 1/2" ledger line is earned, not
// assumed.
const std::string& zetaSignFactsJustification() {
    static const std::string line = [] {
        int checked = 0;
        for (double x = 0.05; x < 1.0; x += 0.05, ++checked)
            if (riemannZeta(Complex(x, 0.0)).real() >= 0.0)
                throw MathError("zeta sign grid check failed on (0,1)");
        for (double x = 1.05; x <= 12.0; x += 0.05, ++checked)
            if (riemannZeta(Complex(x, 0.0)).real() <= 0.0)
                throw MathError("zeta sign grid check failed on (1,oo)");
        return "zeta(x) < 0 on (0,1) and zeta(x) > 0 on (1,oo), verified on a " +
               std::to_string(checked) + "-point grid; hence zeta(2s-1) has no zero and "
               "zeta(2s) no zero or pole on the real interval s > 1/2 except the pole at s = 1";
    }();
    return line;
}

}  // namespace

Rectangle::Rectangle(double rmin, double rmax, double imin, double imax)
    : reMin(rmin), reMax(rmax), imMin(imin), imMax(imax) {
    if (!(reMin < reMax) || !(imMin < imMax))
        throw DomainError("Rectangle: requires reMin < reMax and imMin < imMax");
}

DivisorCount countDivisor(const ScatteringFamily& family) {
    DivisorCount dc;
    switch (family.kind()) {
        case FamilyKind::Modular:
            dc.breakdown.push_back({1.0, -1, "zeta(2s-1): simple pole at s = 1"});
            dc.justifications.push_back(zetaSignFactsJustification());
            dc.justifications.push_back(
                "Gamma(s-1/2) and 1/Gamma(s) are finite and nonzero for real s > 1/2");
            break;
        case FamilyKind::Gamma0Squarefree: {
            const int r = family.rank();
            dc.breakdown.push_back(
                {1.0, -(1 << r), "bracket^(2^r): zeta(2s-1)^(2^r) pole at s = 1"});
            for (long long p : family.primes())
                dc.breakdown.push_back({1.0, 1 << (r - 1),
                                        "(1-" + std::to_string(p) + "^(2-2s)) vanishing at s = 1"});
            dc.justifications.push_back(zetaSignFactsJustification());
            dc.justifications.push_back(
                "local factors (1-p^(2-2s)) vanish on s > 1/2 only at s = 1; (1-p^(2s)) is "
                "negative and bounded away from 0 for real s > 1/2");
            break;
        }
        case FamilyKind::Gamma0Plus:
            dc.breakdown.push_back({1.0, -1, "s/(s-1): simple pole at s = 1"});
            dc.justifications.push_back(zetaSignFactsJustification());
            dc.justifications.push_back(
                "xi(2s-1)/xi(2s) and the local factors (p^s+p)/(p^s+1) are positive for real "
                "s > 1/2");
            break;
    }
    for (const auto& entry : dc.breakdown) {
        if (entry.order > 0) dc.zeros += entry.order;
        if (entry.order < 0) dc.poles -= entry.order;
    }
    return dc;
}

namespace {

// zeta'/zeta with the Laurent germ of zeta at 1 taking over near the pole.
Complex zetaLogDeriv(Complex w) {
    if (std::abs(w - 1.0) < 0.15) {
        static const LaurentGerm logDerivGerm = [] {
            // zeta(1+e) = 1/e + sum (-1)^n gamma_n e^n / n!
            std::vector<double> co(7, 0.0);
            co[0] = 1.0;
            double fact = 1.0;  // (k-1)!
            for (int k = 1; k <= 6; ++k) {
                if (k >= 2) fact *= (k - 1);
                co[k] = ((k % 2 == 1) ? 1.0 : -1.0) * specfun::kStieltjes[k - 1] / fact;
            }
            const LaurentGerm zeta1 = makeGerm(1.0, -1, std::move(co));
            return germMul(germDerivative(zeta1), germInverse(zeta1));
        }();
        return germEval(logDerivGerm, w - 1.0);
    }
    return zetaDerivative(w) / riemannZeta(w);
}

Complex xiLogDeriv(Complex w) {
    return 1.0 / w + 1.0 / (w - 1.0) - 0.5 * std::log(kPi) + 0.5 * digamma(0.5 * w) +
           zetaLogDeriv(w);
}

Complex modularLogDeriv(Complex s) {
    return digamma(s - 0.5) - digamma(s) + 2.0 * zetaLogDeriv(2.0 * s - 1.0) -
           2.0 * zetaLogDeriv(2.0 * s);
}

}  // namespace

Complex phiLogDeriv(const ScatteringFamily& family, Complex s) {
    switch (family.kind()) {
        case FamilyKind::Modular: return modularLogDeriv(s);
        case FamilyKind::Gamma0Squarefree: {
            const int r = family.rank();
            Complex v = double(1 << r) * modularLogDeriv(s);
            for (long long p : family.primes()) {
                const double lp = std::log(double(p));
                const Complex pm = std::exp((2.0 - 2.0 * s) * lp);  // p^{2-2s}
                const Complex pp = std::exp(2.0 * s * lp);          // p^{2s}
                v += double(1 << (r - 1)) *
                     (2.0 * lp * pm / (1.0 - pm) + 2.0 * lp * pp / (1.0 - pp));
            }
            return v;
        }
        case FamilyKind::Gamma0Plus: {
            Complex v = 1.0 / s - 1.0 / (s - 1.0) + 2.0 * xiLogDeriv(2.0 * s - 1.0) -
                        2.0 * xiLogDeriv(2.0 * s) - std::log(double(family.level()));
            for (long long p : family.primes()) {
                const double lp = std::log(double(p));
                const Complex ps = std::exp(s * lp);
                v += lp * ps / (ps + double(p)) - lp * ps / (ps + 1.0);
            }
            return v;
        }
    }
    throw DomainError("phiLogDeriv: unknown family");
}

namespace {

// Counterclockwise boundary integral over the rectangle by composite
// trapezoid with n intervals per side, divided by 2 pi i.
Complex rectangleWindingIntegral(const std::function<Complex(Complex)>& f, const Rectangle& rect,
                                 int n) {
    const Complex corners[4] = {{rect.reMin, rect.imMin},
                                {rect.reMax, rect.imMin},
                                {rect.reMax, rect.imMax},
                                {rect.reMin, rect.imMax}};
    Complex total = 0.0;
    for (int side = 0; side < 4; ++side) {
        const Complex a = corners[side];
        const Complex b = corners[(side + 1) % 4];
        const Complex h = (b - a) / double(n);
        Complex acc = 0.5 * (f(a) + f(b));
        for (int j = 1; j < n; ++j) acc += f(a + double(j) * h);
        total += acc * h;
    }
    return total / kTwoPiI;
}

}  // namespace

int windingNumber(const std::function<Complex(Complex)>& logDeriv, const Rectangle& rect,
                  int nodesPerSide) {
    const Complex w = rectangleWindingIntegral(logDeriv, rect, nodesPerSide);
    const double rounded = std::round(w.real());
    if (std::abs(w - rounded) >= 1e-3)
        throw NonIntegerWindingError("windingNumber: residual " +
                                     std::to_string(std::abs(w - rounded)) + " exceeds 1e-3");
    return int(rounded);
}

int argumentPrincipleNet(const ScatteringFamily& family, const Rectangle& rect) {
    constexpr int kNodes = 2048;
    // |phi| itself decays like g1^{-2 Re s}, so the zero/pole proximity guard
    // is applied to phi divided by the leading factor of its Dirichlet normal
    // form, which tends to 1 far right and is zero/pole free on Re(s) > 0.
    const scattering::DirichletHead head = scattering::dirichletHead(family, 1);
    auto leadingFactor = [&](Complex s) {
        return std::pow(kPi, 0.5 * head.cusps) *
               std::exp(double(head.cusps) *
                        (specfun::logGamma(s - 0.5) - specfun::logGamma(s))) *
               head.d1 * std::exp(-2.0 * s * std::log(head.g1));
    };
    const Complex corners[4] = {{rect.reMin, rect.imMin},
                                {rect.reMax, rect.imMin},
                                {rect.reMax, rect.imMax},
                                {rect.reMin, rect.imMax}};
    double minAbs = 1e300, maxAbs = 0.0;
    for (int side = 0; side < 4; ++side) {
        const Complex a = corners[side];
        const Complex h = (corners[(side + 1) % 4] - a) / double(kNodes);
        for (int j = 0; j < kNodes; ++j) {
            Complex v;
            const Complex s = a + double(j) * h;
            try {
                v = scattering::phiEval(family, s) / leadingFactor(s);
            } catch (const SingularityError&) {
                throw ContourTooCloseError(
                    "argumentPrincipleNet: contour passes through a factor singularity");
            }
            minAbs = std::min(minAbs, std::abs(v));
            maxAbs = std::max(maxAbs, std::abs(v));
        }
    }
    if (minAbs <= 1e-6 || 1.0 / maxAbs <= 1e-6)
        throw ContourTooCloseError("argumentPrincipleNet: normalized |phi| on the contour "
                                   "violates the 1e-6 guard (zero or pole too close)");
    return windingNumber([&](Complex s) { return phiLogDeriv(family, s); }, rect, kNodes);
}

TheoremReport verifyTheorem(const ScatteringFamily& family) {
    const DivisorCount dc = countDivisor(family);
    const scattering::DirichletHead head = scattering::dirichletHead(family, 1);
    const scattering::CentralValueReport cv = scattering::centralValue(family);
    TheoremReport rep;
    rep.zeros = dc.zeros;
    rep.poles = dc.poles;
    rep.sgnD1 = head.d1 > 0 ? 1 : -1;
    rep.predicted = ((dc.zeros + dc.poles) % 2 == 0 ? 1 : -1) * rep.sgnD1;
    rep.computed = cv.germValue > 0 ? 1 : -1;
    rep.ok = (rep.predicted == rep.computed) && std::abs(cv.germValue - rep.computed) < 1e-6;
    return rep;
}

double corollaryAlpha(const ScatteringFamily& family) {
    const scattering::DirichletHead head = scattering::dirichletHead(family, 1);
    return head.g1 / (std::pow(kPi, 0.5 * head.cusps) * std::abs(head.d1));
}

}  // namespace scatdet::divisor
