#pragma once

#include <array>
#include <complex>
#include <vector>

#include "scatdet/errors.hpp"

namespace scatdet {

using Complex = std::complex<double>;

namespace specfun {

// Classical constants, stored to full double precision.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLog2Pi     = 1.83787706640934548356065947281123528;
inline constexpr double kZetaPrime0  = -0.91893853320467274178032973640561764;  // zeta'(0) = -log(2 pi)/2
inline constexpr double kZetaPrimeM1 = -0.16542114370045092921391966024278064;  // zeta'(-1) = 1/12 - log A
inline constexpr double kZetaPP0     = -2.00635645590858485121010002672996044;  // zeta''(0)

/// Stieltjes constants gamma_0..gamma_6: zeta(1+e) = 1/e + sum (-1)^n gamma_n e^n / n!
inline constexpr std::array<double, 7> kStieltjes = {
    0.57721566490153286060651209008240243,
    -0.07281584548367672486058637587490132,
    -0.00969036319287231848453038603521253,
    0.00205383442030334586616004654275433,
    0.00232537006546730005746817017752607,
    0.00079332381730106270175333487744445,
    -0.00023876934543019960987242184190800,
};

/// Exact rational, used for the Bernoulli table.
struct Rational {
    long long num;
    long long den;
    double value() const { return double(num) / double(den); }
};

/// Even Bernoulli numbers B_2, B_4, ..., B_32 as exact rationals.
const std::vector<Rational>& bernoulliTable();

/// Principal-branch log Gamma(s), Stirling series after upward recursion to
/// Re(s) >= 10.  Relative accuracy ~1e-13 for |s| <= 50, Re(s) >= -20.
Complex logGamma(Complex s);

/// psi(s) = d/ds log Gamma(s).
Complex digamma(Complex s);

/// Riemann zeta by Euler-Maclaurin summation; the reflection formula is used
/// for Re(s) < 1/2.  Good to ~1e-12 relative for |Im s| <= 50, -10 <= Re s <= 50.
Complex riemannZeta(Complex s);

/// zeta'(s) by 4th-order central differences of riemannZeta.  Keep clear of
/// the pole at s = 1 (use the Laurent germ of zeta there instead).
Complex zetaDerivative(Complex s);

/// Hurwitz zeta sum_{k>=0} (k+a)^{-s}, continued by Euler-Maclaurin.
Complex hurwitzZeta(Complex s, double a);
Complex hurwitzZeta(Complex s, Complex a);  // Re(a) > 0

/// d/ds zeta_H(s, a) at s = 0, by central differences with step 1e-5 and one
/// Richardson step.  Equals log(Gamma(a)/sqrt(2 pi)) by Lerch's formula.
double hurwitzZetaDs0(double a);
Complex hurwitzZetaDs0(Complex a);

/// log G(s+1) where G is the Barnes double Gamma function.  Asymptotic
/// expansion with six correction terms for Re(s) >= 15, downward recursion
/// log G(s+1) = log G(s+2) - log Gamma(s+1) otherwise.
Complex logBarnesG(Complex s);

/// d/ds log G(s+1).
Complex logBarnesGDeriv(Complex s);

/// Partial Stirling sum of log Gamma with `terms` Bernoulli terms and no
/// argument shifting; exposed so tests can probe the asymptotic error envelope.
Complex stirlingLogGamma(Complex s, int terms);

/// Magnitude of the j-th Bernoulli term of the Stirling series at s.
double stirlingBernoulliTerm(Complex s, int j);

}  // namespace specfun
}  // namespace scatdet
