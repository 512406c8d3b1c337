#pragma once

#include <complex>
#include <vector>

#include "scatdet/errors.hpp"

namespace scatdet {

using Complex = std::complex<double>;

/// Truncated Laurent expansion of a meromorphic function at a real point:
///     f(s) = (s-a)^order * (coeffs[0] + coeffs[1] (s-a) + ... + coeffs[K] (s-a)^K)
/// with coeffs[0] != 0.  Products of germs never add series, so the leading
/// coefficient stays nonzero under all the arithmetic below.
struct LaurentGerm {
    double point = 0.0;
    int order = 0;
    std::vector<double> coeffs;

    int depth() const { return int(coeffs.size()) - 1; }
    double leading() const { return coeffs.front(); }
};

LaurentGerm makeGerm(double point, int order, std::vector<double> coeffs);

/// Constant c as a germ at `point`.
LaurentGerm germConstant(double point, double c, int depth);

/// Germ of the linear factor (s - root) at `point`.
LaurentGerm germLinear(double point, double root, int depth);

LaurentGerm germMul(const LaurentGerm& a, const LaurentGerm& b);
LaurentGerm germInverse(const LaurentGerm& a);
LaurentGerm germPow(const LaurentGerm& a, int n);
LaurentGerm germScale(const LaurentGerm& a, double c);

/// Termwise derivative d/ds.
LaurentGerm germDerivative(const LaurentGerm& a);

/// Substitute (s-a) -> alpha * (s-a'):  if g expands F(w) at w0 in y = w-w0,
/// the result expands F(w0 + alpha (s-a')) at a' in x = s-a'.
LaurentGerm germPrecomposeLinear(const LaurentGerm& g, double alpha, double newPoint);

/// Evaluate the truncation at displacement dz from the expansion point.
Complex germEval(const LaurentGerm& a, Complex dz);

/// exp of a power series with p[0] = 0: returns the coefficients of
/// exp(sum_{k>=1} p[k] x^k) up to the same length.
std::vector<double> expSeries(const std::vector<double>& p);

}  // namespace scatdet
