#include "scatdet/surface.hpp"

#include <algorithm>
#include <cmath>

#include "scatdet/numerics.hpp"
#include "scatdet/specfun.hpp"

namespace scatdet::surface {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

GroupDescriptor::GroupDescriptor(int genus, int cusps, std::vector<int> ellipticOrders)
    : genus_(genus), cusps_(cusps), orders_(std::move(ellipticOrders)) {
    if (genus_ < 0) throw DomainError("GroupDescriptor: genus must be nonnegative");
    if (cusps_ < 1) throw DomainError("GroupDescriptor: at least one cusp required");
    for (int d : orders_)
        if (d < 2) throw DomainError("GroupDescriptor: elliptic orders must be >= 2");
    std::sort(orders_.begin(), orders_.end());
    if (volume(*this) <= 0.0)
        throw DomainError("GroupDescriptor: signature does not define a hyperbolic orbifold");
}

double volume(const GroupDescriptor& desc) {
    double s = 2.0 * desc.genus() - 2.0 + desc.cusps();
    for (int d : desc.ellipticOrders()) s += 1.0 - 1.0 / d;
    return 2.0 * kPi * s;
}

double trivialMultiplicitySine(const GroupDescriptor& desc, int n) {
    double v = volume(desc) / (2.0 * kPi) * (2.0 * n + 1.0);
    for (int d : desc.ellipticOrders()) {
        double inner = 0.0;
        for (int k = 1; k <= d - 1; ++k)
            inner += std::sin(k * kPi * (2.0 * n + 1.0) / d) / std::sin(k * kPi / d);
        v -= inner / d;
    }
    return v;
}

long long trivialMultiplicityFloor(const GroupDescriptor& desc, int n) {
    long long v = (2LL * n + 1) * (2LL * desc.genus() - 2 + desc.cusps());
    v += 2LL * n * desc.ellipticCount();
    for (int d : desc.ellipticOrders()) v -= 2LL * (n / d);
    return v;
}

MultiplicityReport multiplicityReport(const GroupDescriptor& desc, int n) {
    const long long f = trivialMultiplicityFloor(desc, n);
    const double s = trivialMultiplicitySine(desc, n);
    return MultiplicityReport{n, f, s, std::abs(double(f) - s) < 1e-8};
}

bool verifySineFloorIdentity(const GroupDescriptor& desc, int nMax) {
    if (nMax < 0) throw DomainError("verifySineFloorIdentity: nMax must be >= 0");
    for (int n = 0; n <= nMax; ++n) {
        double lhs = 0.0;
        long long rhs = 0;
        for (int d : desc.ellipticOrders()) {
            double inner = 0.0;
            for (int k = 1; k <= d - 1; ++k)
                inner += std::sin(k * kPi * (2.0 * n + 1.0) / d) / std::sin(k * kPi / d);
            lhs += (2.0 * n + 1.0 + inner) / d;
            rhs += 2LL * (n / d) + 1;
        }
        if (std::abs(lhs - double(rhs)) >= 1e-8) return false;
    }
    return true;
}

namespace {

// Distance from s to the set -N; on hit, reports n.
bool nearNonPosInt(Complex s, double tol, int* nOut) {
    const double nr = std::round(s.real());
    if (nr > 0.0) return false;
    if (std::abs(s - nr) >= tol) return false;
    *nOut = int(-nr);
    return true;
}

}  // namespace

Complex logG1(const GroupDescriptor& desc, Complex s) {
    int n = 0;
    if (nearNonPosInt(s, 1e-12, &n)) {
        const long long m = trivialMultiplicityFloor(desc, n);
        if (m > 0) throw ZeroError("logG1: zero of G1 at s = -n");
        if (m < 0) throw PoleError("logG1: pole of G1 at s = -n");
    }
    using specfun::kLog2Pi;
    using specfun::logBarnesG;
    using specfun::logGamma;
    const long long chi = 2LL * desc.genus() - 2 + desc.cusps();
    const int e = desc.ellipticCount();
    Complex v = 0.0;
    if (chi != 0) v += double(chi) * (-s * kLog2Pi + 2.0 * logBarnesG(s) - logGamma(s));
    if (e != 0) v += double(e) * (-s * kLog2Pi + 2.0 * logBarnesG(s));
    for (int d : desc.ellipticOrders())
        for (int m = 0; m < d; ++m) v -= 2.0 * logBarnesG((s + double(m)) / double(d));
    numerics::ensureFinite(v, "logG1");
    return v;
}

Complex logG1Deriv(const GroupDescriptor& desc, Complex s) {
    int n = 0;
    if (nearNonPosInt(s, 1e-12, &n)) {
        const long long m = trivialMultiplicityFloor(desc, n);
        if (m > 0) throw ZeroError("logG1Deriv: zero of G1 at s = -n");
        if (m < 0) throw PoleError("logG1Deriv: pole of G1 at s = -n");
    }
    using specfun::digamma;
    using specfun::kLog2Pi;
    using specfun::logBarnesGDeriv;
    const long long chi = 2LL * desc.genus() - 2 + desc.cusps();
    const int e = desc.ellipticCount();
    Complex v = 0.0;
    if (chi != 0) v += double(chi) * (-kLog2Pi + 2.0 * logBarnesGDeriv(s) - digamma(s));
    if (e != 0) v += double(e) * (-kLog2Pi + 2.0 * logBarnesGDeriv(s));
    for (int d : desc.ellipticOrders())
        for (int m = 0; m < d; ++m)
            v -= 2.0 / double(d) * logBarnesGDeriv((s + double(m)) / double(d));
    numerics::ensureFinite(v, "logG1Deriv");
    return v;
}

}  // namespace scatdet::surface
