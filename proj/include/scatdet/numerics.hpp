#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <vector>

#include "scatdet/errors.hpp"

namespace scatdet {

using Complex = std::complex<double>;

namespace numerics {

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

/// k-th derivative by central differences (half-integer offsets for odd k)
/// with one Richardson step, O(h^4).  Accuracy degrades quickly with k; only
/// the first few orders are usable in double precision.
template <typename F>
Complex centralDerivative(F&& f, Complex x, int k, double h) {
    auto stencil = [&](double hh) {
        Complex acc = 0.0;
        for (int i = 0; i <= k; ++i) {
            const double off = 0.5 * k - double(i);
            const double sign = (i % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binom(k, i) * f(x + off * hh);
        }
        return acc / std::pow(hh, k);
    };
    const Complex a1 = stencil(h);
    const Complex a2 = stencil(0.5 * h);
    return (4.0 * a2 - a1) / 3.0;
}

/// 4th-order central first derivative (no Richardson).
template <typename F>
Complex derivative1(F&& f, Complex x, double h) {
    return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h);
}

/// Richardson ladder for samples vals[k] = g(eps0 * 2^-k) of a function with
/// a power-series error expansion g(eps) = L + c1 eps + c2 eps^2 + ...
/// Returns the extrapolated limit L.
inline Complex richardsonLadder(const std::vector<Complex>& vals) {
    std::vector<Complex> t = vals;
    const int n = int(t.size());
    for (int j = 1; j < n; ++j) {
        const double p = std::pow(2.0, j);
        for (int k = n - 1; k >= j; --k)
            t[k] = (p * t[k] - t[k - 1]) / (p - 1.0);
    }
    return t[n - 1];
}

/// (1/2 pi i) * contour integral of logDeriv over the circle |s-center|=r,
/// counterclockwise, by the trapezoid rule on `nodes` equispaced points.
template <typename F>
Complex circleWinding(F&& logDeriv, Complex center, double r, int nodes = 4096) {
    Complex acc = 0.0;
    const double dth = 2.0 * M_PI / nodes;
    for (int j = 0; j < nodes; ++j) {
        const double th = j * dth;
        const Complex e(std::cos(th), std::sin(th));
        acc += logDeriv(center + r * e) * e;
    }
    return acc * (r / double(nodes));
}

inline void ensureFinite(Complex v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw MathError(std::string(what) + ": non-finite result");
}

inline void ensureFinite(double v, const char* what) {
    if (!std::isfinite(v)) throw MathError(std::string(what) + ": non-finite result");
}

}  // namespace numerics
}  // namespace scatdet
