#pragma once

#include <complex>
#include <vector>

#include "scatdet/errors.hpp"

namespace scatdet {

using Complex = std::complex<double>;

namespace surface {

/// Topological data of a finite-volume hyperbolic orbifold with cusps:
/// genus g, cusp count, and the orders of the elliptic (cone) points.
/// Construction rejects signatures with non-positive Gauss-Bonnet volume.
class GroupDescriptor {
public:
    GroupDescriptor(int genus, int cusps, std::vector<int> ellipticOrders);

    int genus() const { return genus_; }
    int cusps() const { return cusps_; }
    const std::vector<int>& ellipticOrders() const { return orders_; }
    int ellipticCount() const { return int(orders_.size()); }

    static GroupDescriptor modular() { return GroupDescriptor(0, 1, {2, 3}); }

private:
    int genus_;
    int cusps_;
    std::vector<int> orders_;
};

struct MultiplicityReport {
    int n;
    long long floorFormula;
    double sineFormula;
    bool agree;  // |floorFormula - sineFormula| < 1e-8
};

/// Gauss-Bonnet hyperbolic volume 2 pi (2g - 2 + c + sum (1 - 1/d_R)).
double volume(const GroupDescriptor& desc);

/// Divisor order at s = -n from the sine-sum form,
/// (vol/2pi)(2n+1) - sum_R (1/d_R) sum_k sin(k pi (2n+1)/d_R)/sin(k pi/d_R).
double trivialMultiplicitySine(const GroupDescriptor& desc, int n);

/// Same order from the closed floor form, in exact integer arithmetic:
/// (2n+1)(2g-2+c) + 2n e - 2 sum_R floor(n/d_R).
/// Note m_0 may be negative (it is -1 for the modular group); the value is a
/// net divisor order, not a count.
long long trivialMultiplicityFloor(const GroupDescriptor& desc, int n);

MultiplicityReport multiplicityReport(const GroupDescriptor& desc, int n);

/// Check the sine/floor identity
///   sum_R (1/d_R)(2n+1 + sum_k sin(...)/sin(...)) = sum_R (2 floor(n/d_R)+1)
/// for all 0 <= n <= nMax, to 1e-8.
bool verifySineFloorIdentity(const GroupDescriptor& desc, int nMax);

/// log of the auxiliary entire function assembled from Gamma and Barnes G
/// whose divisor at -n has order m_n:
///   (2g-2+c)[-s log 2pi + 2 log G(s+1) - log Gamma(s)]
///   + e[-s log 2pi + 2 log G(s+1)] - 2 log G_E(s),
/// log G_E(s) = sum_R sum_{m=0}^{d_R-1} log G((s+m)/d_R + 1).
Complex logG1(const GroupDescriptor& desc, Complex s);

/// d/ds of logG1; meromorphic, safe to integrate along contours.
Complex logG1Deriv(const GroupDescriptor& desc, Complex s);

}  // namespace surface
}  // namespace scatdet
