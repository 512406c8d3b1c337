#include "scatdet/laurent.hpp"

#include <cmath>

namespace scatdet {

LaurentGerm makeGerm(double point, int order, std::vector<double> coeffs) {
    if (coeffs.empty()) throw DomainError("LaurentGerm: empty coefficient list");
    if (coeffs.front() == 0.0) throw DomainError("LaurentGerm: leading coefficient must be nonzero");
    return LaurentGerm{point, order, std::move(coeffs)};
}

LaurentGerm germConstant(double point, double c, int depth) {
    std::vector<double> co(depth + 1, 0.0);
    co[0] = c;
    return makeGerm(point, 0, std::move(co));
}

LaurentGerm germLinear(double point, double root, int depth) {
    const double v = point - root;
    if (std::abs(v) < 1e-12) {
        std::vector<double> co(depth + 1, 0.0);
        co[0] = 1.0;
        return makeGerm(point, 1, std::move(co));
    }
    std::vector<double> co(depth + 1, 0.0);
    co[0] = v;
    if (depth >= 1) co[1] = 1.0;
    return makeGerm(point, 0, std::move(co));
}

LaurentGerm germMul(const LaurentGerm& a, const LaurentGerm& b) {
    if (a.point != b.point) throw DomainError("germMul: expansion points differ");
    const int k = std::min(a.depth(), b.depth());
    std::vector<double> co(k + 1, 0.0);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k && j <= b.depth(); ++j)
            if (i <= a.depth()) co[i + j] += a.coeffs[i] * b.coeffs[j];
    return makeGerm(a.point, a.order + b.order, std::move(co));
}

LaurentGerm germInverse(const LaurentGerm& a) {
    const int k = a.depth();
    std::vector<double> co(k + 1, 0.0);
    co[0] = 1.0 / a.coeffs[0];
    for (int n = 1; n <= k; ++n) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) acc += a.coeffs[j] * co[n - j];
        co[n] = -acc / a.coeffs[0];
    }
    return makeGerm(a.point, -a.order, std::move(co));
}

LaurentGerm germPow(const LaurentGerm& a, int n) {
    if (n == 0) return germConstant(a.point, 1.0, a.depth());
    const LaurentGerm base = (n < 0) ? germInverse(a) : a;
    const int m = std::abs(n);
    LaurentGerm r = base;
    for (int i = 1; i < m; ++i) r = germMul(r, base);
    return r;
}

LaurentGerm germScale(const LaurentGerm& a, double c) {
    if (c == 0.0) throw DomainError("germScale: zero scale");
    LaurentGerm r = a;
    for (double& x : r.coeffs) x *= c;
    return r;
}

LaurentGerm germDerivative(const LaurentGerm& a) {
    // d/ds (s-a)^{m+k} = (m+k) (s-a)^{m+k-1}; the m+k = 0 term drops out.
    const int k = a.depth();
    std::vector<std::pair<int, double>> terms;
    for (int i = 0; i <= k; ++i) {
        const int e = a.order + i;
        if (e == 0) continue;
        terms.emplace_back(e - 1, double(e) * a.coeffs[i]);
    }
    while (!terms.empty() && terms.front().second == 0.0) terms.erase(terms.begin());
    if (terms.empty()) throw MathError("germDerivative: derivative of a constant germ");
    const int lead = terms.front().first;
    std::vector<double> co(terms.back().first - lead + 1, 0.0);
    for (const auto& [e, c] : terms) co[e - lead] = c;
    return makeGerm(a.point, lead, std::move(co));
}

LaurentGerm germPrecomposeLinear(const LaurentGerm& g, double alpha, double newPoint) {
    if (alpha == 0.0) throw DomainError("germPrecomposeLinear: zero slope");
    LaurentGerm r = g;
    r.point = newPoint;
    for (int i = 0; i <= r.depth(); ++i) r.coeffs[i] *= std::pow(alpha, r.order + i);
    return r;
}

Complex germEval(const LaurentGerm& a, Complex dz) {
    Complex acc = 0.0;
    for (int i = a.depth(); i >= 0; --i) acc = acc * dz + a.coeffs[i];
    return acc * std::pow(dz, double(a.order));
}

std::vector<double> expSeries(const std::vector<double>& p) {
    const int k = int(p.size()) - 1;
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    for (int n = 1; n <= k; ++n) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) acc += j * p[j] * e[n - j];
        e[n] = acc / n;
    }
    return e;
}

}  // namespace scatdet
