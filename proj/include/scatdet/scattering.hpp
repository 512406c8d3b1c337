#pragma once

#include <complex>
#include <string>
#include <vector>

#include "scatdet/errors.hpp"
#include "scatdet/laurent.hpp"

namespace scatdet {

using Complex = std::complex<double>;

namespace scattering {

enum class FamilyKind { Modular, Gamma0Squarefree, Gamma0Plus };

/// One of the three arithmetic families with an explicitly known scattering
/// determinant:
///   Modular           sqrt(pi) Gamma(s-1/2)/Gamma(s) zeta(2s-1)/zeta(2s)
///   Gamma0Squarefree  [modular]^{2^r} prod_p ((1-p^{2-2s})/(1-p^{2s}))^{2^{r-1}}
///   Gamma0Plus        s/(s-1) xi(2s-1)/xi(2s) N^{-s} prod_p (p^s+p)/(p^s+1)
/// with N = p_1...p_r squarefree.  Gamma0Plus admits the empty prime set
/// (N = 1), which is the modular group with Atkin-Lehner normalization.
class ScatteringFamily {
public:
    static ScatteringFamily modular();
    static ScatteringFamily gamma0(std::vector<long long> primes);
    static ScatteringFamily gamma0plus(std::vector<long long> primes);

    FamilyKind kind() const { return kind_; }
    const std::vector<long long>& primes() const { return primes_; }
    int rank() const { return int(primes_.size()); }  // r
    long long level() const;                          // N = p_1...p_r (1 if empty)
    int cusps() const;                                // 1, 2^r, 1
    std::string label() const;

private:
    ScatteringFamily(FamilyKind kind, std::vector<long long> primes);
    FamilyKind kind_;
    std::vector<long long> primes_;
};

/// Head data of the generalized Dirichlet-series normal form
///   phi(s) = pi^{c/2} (Gamma(s-1/2)/Gamma(s))^c  d(1) g1^{-2s} (1 + sum a(n) u_n^{-2s}).
/// c2 stores log|d(1)|; the sign of d(1) is kept in d1 (it is negative for
/// prime-level Gamma0, where log d(1) would be undefined).
struct DirichletHead {
    int cusps = 1;
    double c1 = 0.0;  // -2 log g1
    double c2 = 0.0;  // log |d1|
    double g1 = 1.0;
    double d1 = 1.0;  // signed leading coefficient
    std::vector<std::pair<double, double>> coefficients;  // (u_n, a_n), n = 2..nMax
};

struct CentralValueReport {
    double germValue = 0.0;
    double extrapolatedValue = 0.0;
    int predictedSign = 0;
    bool matches = false;  // |germ - predicted| < 1e-6 and |extrapolated - predicted| < 1e-4
};

/// Direct evaluation of phi(s).  Throws SingularityError within 1e-10 of a
/// zero or pole of any factor (all real half-integers <= 1, s = 0 and s = 1);
/// use germAt there.
Complex phiEval(const ScatteringFamily& family, Complex s);

/// Laurent germ of phi at the real point a, from factor germs combined with
/// germ arithmetic.  Analytic leading coefficients are used for Gamma at its
/// poles and zeta at s = 1; Taylor data of regular factors comes from central
/// finite differences (step 1e-3, one Richardson step).
LaurentGerm germAt(const ScatteringFamily& family, double a, int depth = 6);

/// phi(1/2) by the germ (authoritative) and by Richardson extrapolation of
/// phi(1/2 + eps), compared against the sign predicted by the divisor count
/// and the Dirichlet head.
CentralValueReport centralValue(const ScatteringFamily& family);

/// Head data with coefficients up to index nMax (>= 1).
DirichletHead dirichletHead(const ScatteringFamily& family, int nMax);

struct HyperbolicClass {
    double norm;           // N(P) > 1
    double primitiveNorm;  // N(P0) > 1
};

/// Truncated log of the Selberg zeta function from a user-supplied list of
/// hyperbolic classes: -sum Lambda(P) / (N(P)^s log N(P)) with
/// Lambda(P) = log N(P0) / (1 - N(P)^{-1}).  Requires Re(s) > 1.
Complex selbergLogZ(const std::vector<HyperbolicClass>& classes, Complex s);

}  // namespace scattering
}  // namespace scatdet
