#include "scatdet/specfun.hpp"

#include <cmath>

#include "scatdet/numerics.hpp"

namespace scatdet::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr Complex kI{0.0, 1.0};

// Distance from s to the nearest point of -N = {0, -1, -2, ...}.
double distToNonPosInt(Complex s) {
    double n = std::round(s.real());
    if (n > 0.0) n = 0.0;
    return std::abs(s - Complex(n, 0.0));
}

}  // namespace

const std::vector<Rational>& bernoulliTable() {
    // B_2 .. B_32
    static const std::vector<Rational> table = {
        {1, 6},
        {-1, 30},
        {1, 42},
        {-1, 30},
        {5, 66},
        {-691, 2730},
        {7, 6},
        {-3617, 510},
        {43867, 798},
        {-174611, 330},
        {854513, 138},
        {-236364091, 2730},
        {8553103, 6},
        {-23749461029LL, 870},
        {8615841276005LL, 14322},
        {-7709321041217LL, 510},
    };
    return table;
}

Complex stirlingLogGamma(Complex s, int terms) {
    const auto& bern = bernoulliTable();
    if (terms > int(bern.size())) throw DomainError("stirlingLogGamma: not enough Bernoulli numbers");
    const Complex inv = 1.0 / s;
    const Complex inv2 = inv * inv;
    Complex pw = inv;
    Complex sum = 0.0;
    for (int j = 1; j <= terms; ++j) {
        sum += bern[j - 1].value() / ((2.0 * j - 1.0) * (2.0 * j)) * pw;
        pw *= inv2;
    }
    return 0.5 * kLog2Pi + (s - 0.5) * std::log(s) - s + sum;
}

double stirlingBernoulliTerm(Complex s, int j) {
    const auto& bern = bernoulliTable();
    if (j < 1 || j > int(bern.size())) throw DomainError("stirlingBernoulliTerm: index out of table");
    return std::abs(bern[j - 1].value() / ((2.0 * j - 1.0) * (2.0 * j))) /
           std::pow(std::abs(s), 2.0 * j - 1.0);
}

Complex logGamma(Complex s) {
    if (distToNonPosInt(s) < 1e-14) throw PoleError("logGamma: argument at a pole of Gamma");
    Complex shift = 0.0;
    while (s.real() < 10.0) {
        shift += std::log(s);
        s += 1.0;
    }
    const Complex v = stirlingLogGamma(s, 9) - shift;  // m = 10 in the series
    numerics::ensureFinite(v, "logGamma");
    return v;
}

Complex digamma(Complex s) {
    if (distToNonPosInt(s) < 1e-14) throw PoleError("digamma: argument at a pole of Gamma");
    Complex shift = 0.0;
    while (s.real() < 10.0) {
        shift += 1.0 / s;
        s += 1.0;
    }
    const auto& bern = bernoulliTable();
    const Complex inv2 = 1.0 / (s * s);
    Complex pw = inv2;
    Complex sum = 0.0;
    for (int j = 1; j <= 9; ++j) {
        sum += bern[j - 1].value() / (2.0 * j) * pw;
        pw *= inv2;
    }
    const Complex v = std::log(s) - 0.5 / s - sum - shift;
    numerics::ensureFinite(v, "digamma");
    return v;
}

namespace {

constexpr int kEmN = 48;      // terms summed directly
constexpr int kEmTerms = 16;  // Bernoulli correction terms (uses B_2..B_32)

// B_{2j} / (2j)! as doubles.
const std::array<double, kEmTerms>& bernOverFactorial() {
    static const std::array<double, kEmTerms> tab = [] {
        std::array<double, kEmTerms> t{};
        const auto& bern = bernoulliTable();
        double fact = 1.0;
        for (int j = 1; j <= kEmTerms; ++j) {
            fact *= (2.0 * j - 1.0) * (2.0 * j);  // (2j)!
            t[j - 1] = bern[j - 1].value() / fact;
        }
        return t;
    }();
    return tab;
}

// Compensated accumulator; the downstream finite differencing divides by
// steps as small as 1e-5, so plain summation noise would dominate.
struct KahanSum {
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};
    void add(Complex v) {
        const Complex y = v - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Euler-Maclaurin for sum_{k>=0} (k+a)^{-s}; valid for Re(a) > 0 and
// Re(s) > -(2*kEmTerms - 1), s != 1.
Complex eulerMaclaurinZeta(Complex s, Complex a) {
    KahanSum acc;
    for (int k = 0; k < kEmN; ++k) acc.add(std::exp(-s * std::log(a + double(k))));
    const Complex na = a + double(kEmN);
    const Complex nms = std::exp(-s * std::log(na));  // (N+a)^{-s}
    acc.add(nms * na / (s - 1.0));
    acc.add(0.5 * nms);
    const auto& bof = bernOverFactorial();
    Complex rising = s;        // (s)_{2j-1}
    Complex pw = nms / na;     // (N+a)^{-s-2j+1}
    const Complex na2 = na * na;
    for (int j = 1; j <= kEmTerms; ++j) {
        acc.add(bof[j - 1] * rising * pw);
        rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        pw /= na2;
    }
    return acc.sum;
}

// log sin(z), stable for large |Im z|; branch only fixed modulo 2 pi i.
Complex logSin(Complex z) {
    if (z.imag() > 1.0)
        return -kI * z + std::log(1.0 - std::exp(2.0 * kI * z)) + Complex(-M_LN2, 0.5 * kPi);
    if (z.imag() < -1.0)
        return kI * z + std::log(1.0 - std::exp(-2.0 * kI * z)) + Complex(-M_LN2, -0.5 * kPi);
    return std::log(std::sin(z));
}

}  // namespace

Complex riemannZeta(Complex s) {
    if (std::abs(s - 1.0) < 1e-14) throw PoleError("riemannZeta: pole at s = 1");
    if (std::abs(s) < 1e-6) {
        // Taylor at 0 avoids the zeta(1-s) pole in the reflection formula.
        return -0.5 - 0.5 * kLog2Pi * s + 0.5 * kZetaPP0 * s * s;
    }
    if (s.real() >= 0.5) {
        const Complex v = eulerMaclaurinZeta(s, 1.0);
        numerics::ensureFinite(v, "riemannZeta");
        return v;
    }
    // Reflection: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
    if (s.imag() == 0.0) {
        const double n = std::round(0.5 * s.real());
        if (s.real() == 2.0 * n) return 0.0;  // trivial zero, exactly
    }
    const Complex chiLog = s * M_LN2 + (s - 1.0) * std::log(kPi) + logSin(0.5 * kPi * s) +
                           logGamma(1.0 - s);
    const Complex v = std::exp(chiLog) * eulerMaclaurinZeta(1.0 - s, 1.0);
    numerics::ensureFinite(v, "riemannZeta");
    return v;
}

Complex zetaDerivative(Complex s) {
    if (std::abs(s - 1.0) < 0.05)
        throw PoleError("zetaDerivative: too close to the pole at s = 1");
    return numerics::derivative1([](Complex w) { return riemannZeta(w); }, s, 1e-3);
}

Complex hurwitzZeta(Complex s, Complex a) {
    if (a.real() <= 0.0) throw DomainError("hurwitzZeta: requires Re(a) > 0");
    if (std::abs(s - 1.0) < 1e-14) throw PoleError("hurwitzZeta: pole at s = 1");
    const Complex v = eulerMaclaurinZeta(s, a);
    numerics::ensureFinite(v, "hurwitzZeta");
    return v;
}

Complex hurwitzZeta(Complex s, double a) {
    if (a <= 0.0) throw DomainError("hurwitzZeta: requires a > 0");
    return hurwitzZeta(s, Complex(a, 0.0));
}

namespace {

// Central difference [zeta_H(h,a) - zeta_H(-h,a)]/(2h) with the subtraction
// done term by term inside the Euler-Maclaurin formula.  Differencing the
// assembled sums instead would turn the absolute rounding of the O(N)-sized
// boundary terms into O(eps/h) noise.
Complex hurwitzDs0Diff(Complex a, double h) {
    KahanSum acc;
    for (int k = 0; k < kEmN; ++k) {
        const Complex lk = std::log(a + double(k));
        acc.add(-std::sinh(h * lk) / h);
    }
    const Complex na = a + double(kEmN);
    const Complex ln = std::log(na);
    // [(N+a)^{1-s}/(s-1)](h) differenced: (N+a)(h cosh(hL) - sinh(hL))/(h(h^2-1))
    acc.add(na * (h * std::cosh(h * ln) - std::sinh(h * ln)) / (h * (h * h - 1.0)));
    acc.add(-0.5 * std::sinh(h * ln) / h);
    const auto& bof = bernOverFactorial();
    auto corrTerm = [&](Complex s) {
        Complex rising = s;
        Complex pw = std::exp(-s * ln) / na;
        const Complex na2 = na * na;
        Complex sum = 0.0;
        for (int j = 1; j <= kEmTerms; ++j) {
            sum += bof[j - 1] * rising * pw;
            rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
            pw /= na2;
        }
        return sum;
    };
    acc.add((corrTerm(Complex(h, 0.0)) - corrTerm(Complex(-h, 0.0))) / (2.0 * h));
    return acc.sum;
}

}  // namespace

Complex hurwitzZetaDs0(Complex a) {
    if (a.real() <= 0.0) throw DomainError("hurwitzZetaDs0: requires Re(a) > 0");
    const Complex d1 = hurwitzDs0Diff(a, 1e-5);
    const Complex d2 = hurwitzDs0Diff(a, 5e-6);
    return (4.0 * d2 - d1) / 3.0;
}

double hurwitzZetaDs0(double a) {
    if (a <= 0.0) throw DomainError("hurwitzZetaDs0: requires a > 0");
    return hurwitzZetaDs0(Complex(a, 0.0)).real();
}

Complex logBarnesG(Complex s) {
    const double nr = std::round(s.real());
    if (nr <= -1.0 && std::abs(s - nr) < 1e-12)
        throw ZeroError("logBarnesG: G(s+1) has a zero at negative integer s");
    Complex shift = 0.0;
    while (s.real() < 15.0) {
        shift += logGamma(s + 1.0);  // log G(s+1) = log G(s+2) - log Gamma(s+1)
        s += 1.0;
    }
    const auto& bern = bernoulliTable();
    const Complex ls = std::log(s);
    const Complex inv2 = 1.0 / (s * s);
    Complex pw = inv2;
    Complex corr = 0.0;
    for (int k = 1; k <= 6; ++k) {
        corr += bern[k].value() / (4.0 * k * (k + 1.0)) * pw;  // B_{2k+2}
        pw *= inv2;
    }
    const Complex v = 0.5 * s * s * (ls - 1.5) - ls / 12.0 - s * kZetaPrime0 + kZetaPrimeM1 + corr -
                      shift;
    numerics::ensureFinite(v, "logBarnesG");
    return v;
}

Complex logBarnesGDeriv(Complex s) {
    const double nr = std::round(s.real());
    if (nr <= -1.0 && std::abs(s - nr) < 1e-12)
        throw ZeroError("logBarnesGDeriv: G(s+1) has a zero at negative integer s");
    Complex shift = 0.0;
    while (s.real() < 15.0) {
        shift += digamma(s + 1.0);
        s += 1.0;
    }
    const auto& bern = bernoulliTable();
    const Complex ls = std::log(s);
    const Complex inv = 1.0 / s;
    const Complex inv2 = inv * inv;
    Complex pw = inv2 * inv;
    Complex corr = 0.0;
    for (int k = 1; k <= 6; ++k) {
        corr += bern[k].value() / (2.0 * (k + 1.0)) * pw;
        pw *= inv2;
    }
    const Complex v = s * (ls - 1.5) + 0.5 * s - inv / 12.0 - kZetaPrime0 - corr - shift;
    numerics::ensureFinite(v, "logBarnesGDeriv");
    return v;
}

}  // namespace scatdet::specfun
