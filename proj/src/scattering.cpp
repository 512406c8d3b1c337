#include "scatdet/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scatdet/divisor.hpp"
#include "scatdet/numerics.hpp"
#include "scatdet/specfun.hpp"

namespace scatdet::scattering {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool isPrime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void validatePrimes(const std::vector<long long>& primes) {
    for (size_t i = 0; i < primes.size(); ++i) {
        if (!isPrime(primes[i])) throw DomainError("ScatteringFamily: not a prime: " +
                                                   std::to_string(primes[i]));
        if (i > 0 && primes[i] <= primes[i - 1])
            throw DomainError("ScatteringFamily: primes must be strictly increasing");
    }
}

Complex powInt(Complex z, long long n) {
    if (n < 0) return 1.0 / powInt(z, -n);
    Complex r = 1.0;
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

}  // namespace

ScatteringFamily::ScatteringFamily(FamilyKind kind, std::vector<long long> primes)
    : kind_(kind), primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    validatePrimes(primes_);
    if (kind_ == FamilyKind::Modular && !primes_.empty())
        throw DomainError("ScatteringFamily: modular family takes no primes");
    if (kind_ == FamilyKind::Gamma0Squarefree && primes_.empty())
        throw DomainError("ScatteringFamily: Gamma0 requires at least one prime");
}

ScatteringFamily ScatteringFamily::modular() { return ScatteringFamily(FamilyKind::Modular, {}); }

ScatteringFamily ScatteringFamily::gamma0(std::vector<long long> primes) {
    return ScatteringFamily(FamilyKind::Gamma0Squarefree, std::move(primes));
}

ScatteringFamily ScatteringFamily::gamma0plus(std::vector<long long> primes) {
    return ScatteringFamily(FamilyKind::Gamma0Plus, std::move(primes));
}

long long ScatteringFamily::level() const {
    long long n = 1;
    for (long long p : primes_) n *= p;
    return n;
}

int ScatteringFamily::cusps() const {
    if (kind_ == FamilyKind::Gamma0Squarefree) return 1 << rank();
    return 1;
}

std::string ScatteringFamily::label() const {
    auto primeList = [&] {
        std::string s;
        for (size_t i = 0; i < primes_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(primes_[i]);
        }
        return s;
    };
    switch (kind_) {
        case FamilyKind::Modular: return "modular";
        case FamilyKind::Gamma0Squarefree: return "gamma0(" + primeList() + ")";
        case FamilyKind::Gamma0Plus: return "gamma0plus(" + primeList() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Direct evaluation
// ---------------------------------------------------------------------------

namespace {

using specfun::logGamma;
using specfun::riemannZeta;

// sqrt(pi) Gamma(s-1/2)/Gamma(s) zeta(2s-1)/zeta(2s)
Complex modularPhi(Complex s) {
    const Complex gratio = std::exp(logGamma(s - 0.5) - logGamma(s));
    return std::sqrt(kPi) * gratio * riemannZeta(2.0 * s - 1.0) / riemannZeta(2.0 * s);
}

// xi(w) = (1/2) w (w-1) pi^{-w/2} Gamma(w/2) zeta(w)
Complex xiCompleted(Complex w) {
    return 0.5 * w * (w - 1.0) * std::exp(logGamma(0.5 * w) - 0.5 * w * std::log(kPi)) *
           riemannZeta(w);
}

// Zeros/poles of the individual factors on the real axis: every half-integer
// s <= 1 (Gamma poles, trivial zeta zeros, the zeta poles at s = 1/2, 1 and
// the rational factors' points 0 and 1) plus s = 1.
bool nearFactorSingularity(Complex s) {
    if (std::abs(s - 1.0) < 1e-10) return true;
    const double t = 2.0 * s.real();
    const double n = std::round(t);
    if (n <= 2.0 && std::abs(s - 0.5 * n) < 1e-10) return true;
    return false;
}

}  // namespace

Complex phiEval(const ScatteringFamily& family, Complex s) {
    if (nearFactorSingularity(s))
        throw SingularityError("phiEval: " + family.label() +
                               " has a singular factor near s; use the germ path");
    Complex v;
    switch (family.kind()) {
        case FamilyKind::Modular: v = modularPhi(s); break;
        case FamilyKind::Gamma0Squarefree: {
            const int r = family.rank();
            v = powInt(modularPhi(s), 1LL << r);
            for (long long p : family.primes()) {
                const Complex num = 1.0 - std::exp((2.0 - 2.0 * s) * std::log(double(p)));
                const Complex den = 1.0 - std::exp(2.0 * s * std::log(double(p)));
                if (std::abs(num) < 1e-10 || std::abs(den) < 1e-10)
                    throw SingularityError("phiEval: local factor vanishes near s");
                v *= powInt(num / den, 1LL << (r - 1));
            }
            break;
        }
        case FamilyKind::Gamma0Plus: {
            const Complex xiRatio = xiCompleted(2.0 * s - 1.0) / xiCompleted(2.0 * s);
            v = s / (s - 1.0) * xiRatio * std::exp(-s * std::log(double(family.level())));
            for (long long p : family.primes()) {
                const Complex ps = std::exp(s * std::log(double(p)));
                v *= (ps + double(p)) / (ps + 1.0);
            }
            break;
        }
    }
    numerics::ensureFinite(v, "phiEval");
    return v;
}

// ---------------------------------------------------------------------------
// Factor germs
// ---------------------------------------------------------------------------

namespace {

// Taylor coefficients of a regular real-analytic factor by central
// differences with one Richardson step; c0 is evaluated exactly.  The base
// step is 1e-3; higher orders widen the step (roundoff grows like eps/h^k)
// up to hMax, which callers set from the distance to the nearest pole so the
// stencil never crosses it.
LaurentGerm differencedGerm(const std::function<double(double)>& f, double x0, int depth,
                            double hMax) {
    std::vector<double> co(depth + 1, 0.0);
    co[0] = f(x0);
    double fact = 1.0;
    for (int k = 1; k <= depth; ++k) {
        fact *= k;
        const double h = std::min(1e-3 * std::pow(4.0, std::max(0, k - 2)), hMax);
        const Complex d = numerics::centralDerivative(
            [&](Complex z) { return Complex(f(z.real()), 0.0); }, Complex(x0, 0.0), k, h);
        co[k] = d.real() / fact;
    }
    return makeGerm(x0, 0, std::move(co));
}

// Germ of Gamma(w) at w = 0: 1/w * exp(-gamma w + sum_{k>=2} (-1)^k zeta(k) w^k / k).
LaurentGerm gammaGermAtZero(int depth) {
    std::vector<double> p(depth + 1, 0.0);
    if (depth >= 1) p[1] = -specfun::kEulerGamma;
    for (int k = 2; k <= depth; ++k) {
        const double zk = riemannZeta(Complex(double(k), 0.0)).real();
        p[k] = ((k % 2 == 0) ? 1.0 : -1.0) * zk / k;
    }
    return makeGerm(0.0, -1, expSeries(p));
}

// Germ of Gamma(w) at a real point w0.
LaurentGerm gammaGermAt(double w0, int depth) {
    const double nr = std::round(w0);
    if (nr <= 0.0 && std::abs(w0 - nr) < 1e-10) {
        // Pole of order 1 at -n: Gamma(w) = Gamma(y) / prod_{j=1}^{n} (y - j), y = w + n.
        const int n = int(-nr);
        LaurentGerm g = gammaGermAtZero(depth);
        for (int j = 1; j <= n; ++j) g = germMul(g, germInverse(germLinear(0.0, double(j), depth)));
        g.point = w0;
        return g;
    }
    if (nr <= 0.0 && std::abs(w0 - nr) < 0.25) {
        // Near (but not on) a pole: difference the regular part and divide.
        const int n = int(-nr);
        return differencedGerm(
            [n](double x) {
                double denom = 1.0;
                for (int j = 0; j <= n; ++j) denom *= (x + j);
                return std::exp(specfun::logGamma(Complex(x + n + 1.0, 0.0)).real()) / denom;
            },
            w0, depth, std::abs(w0 - nr) / 12.0);
    }
    const double distToPole = (w0 > 0.0) ? w0 : std::abs(w0 - nr);
    return differencedGerm(
        [](double x) {
            const Complex lg = specfun::logGamma(Complex(x, 0.0));
            return std::exp(lg).real();  // Gamma is real on the real axis off its poles
        },
        w0, depth, std::max(1e-3, distToPole / 12.0));
}

// Germ of zeta(w) at w = 1 from the Stieltjes constants:
// zeta(1+e) = 1/e + sum (-1)^n gamma_n e^n / n!.
LaurentGerm zetaGermAtOne(int depth) {
    std::vector<double> co(depth + 1, 0.0);
    co[0] = 1.0;
    double fact = 1.0;  // (k-1)!
    for (int k = 1; k <= depth; ++k) {
        if (k >= 2) fact *= (k - 1);
        if (k - 1 < int(specfun::kStieltjes.size()))
            co[k] = ((k % 2 == 1) ? 1.0 : -1.0) * specfun::kStieltjes[k - 1] / fact;
    }
    return makeGerm(1.0, -1, std::move(co));
}

// Germ of zeta(w) at a real point w0.
LaurentGerm zetaGermAt(double w0, int depth) {
    if (std::abs(w0 - 1.0) < 1e-10) return zetaGermAtOne(depth);
    const double nr = std::round(0.5 * w0);
    const bool trivialZero = (nr <= -1.0) && std::abs(w0 - 2.0 * nr) < 1e-10;
    LaurentGerm g = differencedGerm(
        [](double x) { return riemannZeta(Complex(x, 0.0)).real(); }, w0, depth,
        std::abs(w0 - 1.0) / 12.0);
    if (trivialZero) {
        // c0 vanishes analytically; strip it and promote the order.
        std::vector<double> co(g.coeffs.begin() + 1, g.coeffs.end());
        return makeGerm(w0, 1, std::move(co));
    }
    return g;
}

// Substitute w = alpha s + beta into a germ builder at the point a.
template <typename Builder>
LaurentGerm argMapped(Builder&& build, double alpha, double beta, double a, int depth) {
    const double w0 = alpha * a + beta;
    return germPrecomposeLinear(build(w0, depth), alpha, a);
}

// Germ of (1 - p^{B - C s}) at a.
LaurentGerm oneMinusPowGerm(long long p, double B, double C, double a, int depth) {
    const double lp = std::log(double(p));
    const double A = std::exp((B - C * a) * lp);
    const double mu = C * lp;  // factor = 1 - A e^{-mu x}
    std::vector<double> full(depth + 2, 0.0);
    full[0] = 1.0 - A;
    double term = -A;
    for (int k = 1; k <= depth + 1; ++k) {
        term *= -mu / k;
        full[k] = term;  // -A (-mu)^k / k!
    }
    if (std::abs(full[0]) < 1e-12) {
        std::vector<double> co(full.begin() + 1, full.end());
        return makeGerm(a, 1, std::move(co));
    }
    full.pop_back();
    return makeGerm(a, 0, std::move(full));
}

// Germ of (p^s + c) at a, c > 0.
LaurentGerm powPlusGerm(long long p, double c, double a, int depth) {
    const double lp = std::log(double(p));
    const double pa = std::exp(a * lp);
    std::vector<double> co(depth + 1, 0.0);
    double term = pa;
    co[0] = pa + c;
    for (int k = 1; k <= depth; ++k) {
        term *= lp / k;
        co[k] = term;
    }
    return makeGerm(a, 0, std::move(co));
}

// Germ of v * e^{mu (s-a)} at a.
LaurentGerm expGerm(double v, double mu, double a, int depth) {
    std::vector<double> co(depth + 1, 0.0);
    double term = v;
    co[0] = v;
    for (int k = 1; k <= depth; ++k) {
        term *= mu / k;
        co[k] = term;
    }
    return makeGerm(a, 0, std::move(co));
}

// Germ of xi(alpha s + beta) at a, factor by factor.
LaurentGerm xiGermArg(double alpha, double beta, double a, int depth) {
    const double w0 = alpha * a + beta;
    LaurentGerm g = germConstant(w0, 0.5, depth);
    g = germMul(g, germLinear(w0, 0.0, depth));   // w
    g = germMul(g, germLinear(w0, 1.0, depth));   // w - 1
    g = germMul(g, expGerm(std::exp(-0.5 * w0 * std::log(kPi)), -0.5 * std::log(kPi), w0, depth));
    g = germMul(g, argMapped(gammaGermAt, 0.5, 0.0, w0, depth));  // Gamma(w/2)
    g = germMul(g, zetaGermAt(w0, depth));
    return germPrecomposeLinear(g, alpha, a);
}

LaurentGerm modularGerm(double a, int depth) {
    LaurentGerm g = germConstant(a, std::sqrt(kPi), depth);
    g = germMul(g, argMapped(gammaGermAt, 1.0, -0.5, a, depth));
    g = germMul(g, germInverse(argMapped(gammaGermAt, 1.0, 0.0, a, depth)));
    g = germMul(g, argMapped(zetaGermAt, 2.0, -1.0, a, depth));
    g = germMul(g, germInverse(argMapped(zetaGermAt, 2.0, 0.0, a, depth)));
    return g;
}

}  // namespace

LaurentGerm germAt(const ScatteringFamily& family, double a, int depth) {
    if (depth < 3) throw DomainError("germAt: depth must be >= 3");
    switch (family.kind()) {
        case FamilyKind::Modular: return modularGerm(a, depth);
        case FamilyKind::Gamma0Squarefree: {
            const int r = family.rank();
            LaurentGerm g = germPow(modularGerm(a, depth), 1 << r);
            for (long long p : family.primes()) {
                LaurentGerm loc = germMul(oneMinusPowGerm(p, 2.0, 2.0, a, depth),
                                          germInverse(oneMinusPowGerm(p, 0.0, -2.0, a, depth)));
                g = germMul(g, germPow(loc, 1 << (r - 1)));
            }
            return g;
        }
        case FamilyKind::Gamma0Plus: {
            LaurentGerm g = germLinear(a, 0.0, depth);                         // s
            g = germMul(g, germInverse(germLinear(a, 1.0, depth)));            // 1/(s-1)
            g = germMul(g, xiGermArg(2.0, -1.0, a, depth));
            g = germMul(g, germInverse(xiGermArg(2.0, 0.0, a, depth)));
            const double lN = std::log(double(family.level()));
            g = germMul(g, expGerm(std::exp(-a * lN), -lN, a, depth));         // N^{-s}
            for (long long p : family.primes()) {
                g = germMul(g, powPlusGerm(p, double(p), a, depth));
                g = germMul(g, germInverse(powPlusGerm(p, 1.0, a, depth)));
            }
            return g;
        }
    }
    throw DomainError("germAt: unknown family");
}

// ---------------------------------------------------------------------------
// Central value
// ---------------------------------------------------------------------------

CentralValueReport centralValue(const ScatteringFamily& family) {
    const LaurentGerm g = germAt(family, 0.5);
    if (g.order != 0)
        throw SingularityError("centralValue: germ at 1/2 has order " + std::to_string(g.order) +
                               "; |phi(1/2)| = 1 forces order 0");
    CentralValueReport rep;
    rep.germValue = g.leading();

    std::vector<Complex> samples;
    for (int k = 0; k <= 6; ++k) {
        const double eps = 1e-2 * std::pow(2.0, -k);
        samples.push_back(phiEval(family, Complex(0.5 + eps, 0.0)));
    }
    rep.extrapolatedValue = numerics::richardsonLadder(samples).real();

    const divisor::DivisorCount dc = divisor::countDivisor(family);
    const DirichletHead head = dirichletHead(family, 1);
    const int sgnD1 = head.d1 > 0 ? 1 : -1;
    rep.predictedSign = ((dc.zeros + dc.poles) % 2 == 0 ? 1 : -1) * sgnD1;
    rep.matches = std::abs(rep.germValue - rep.predictedSign) < 1e-6 &&
                  std::abs(rep.extrapolatedValue - rep.predictedSign) < 1e-4;
    return rep;
}

// ---------------------------------------------------------------------------
// Dirichlet head
// ---------------------------------------------------------------------------

namespace {

std::vector<long long> totientSieve(int n) {
    std::vector<long long> phi(n + 1);
    std::iota(phi.begin(), phi.end(), 0LL);
    for (int p = 2; p <= n; ++p) {
        if (phi[p] != p) continue;  // composite
        for (int k = p; k <= n; k += p) phi[k] -= phi[k] / p;
    }
    return phi;
}

// Dirichlet convolution c = a * b truncated to the common length.
std::vector<long long> dirichletConvolve(const std::vector<long long>& a,
                                         const std::vector<long long>& b) {
    const int n = int(a.size()) - 1;
    std::vector<long long> c(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 1; i * j <= n; ++j) c[i * j] += a[i] * b[j];
    }
    return c;
}

}  // namespace

DirichletHead dirichletHead(const ScatteringFamily& family, int nMax) {
    if (nMax < 1) throw DomainError("dirichletHead: nMax must be >= 1");
    DirichletHead head;
    head.cusps = family.cusps();

    switch (family.kind()) {
        case FamilyKind::Modular: {
            // zeta(2s-1)/zeta(2s) = sum totient(n) n^{-2s}
            head.g1 = 1.0;
            head.d1 = 1.0;
            const auto phi = totientSieve(std::max(nMax, 1));
            for (int n = 2; n <= nMax; ++n)
                head.coefficients.emplace_back(double(n), double(phi[n]));
            break;
        }
        case FamilyKind::Gamma0Squarefree: {
            // phi = [bracket]^{2^r} prod_p ((1-p^{2-2s})/(1-p^{2s}))^{q}, q = 2^{r-1}.
            // Factoring (1-p^{2s})^{-q} = (-1)^q p^{-2qs} (1-p^{-2s})^{-q} pulls out
            // g1 = N^q and d(1) = (-1)^{rq}; the remaining ordinary Dirichlet
            // series E(s) has e(1) = 1 and integer coefficients.
            const int r = family.rank();
            const long long q = 1LL << (r - 1);
            const int cut = nMax + 8;
            std::vector<long long> e(cut + 1, 0);
            e[1] = 1;
            const auto tot = totientSieve(cut);
            for (long long i = 0; i < (1LL << r); ++i) e = dirichletConvolve(e, tot);
            for (long long p : family.primes()) {
                // sparse series with support on powers of p:
                //   (1 - p^2 x)^q * (1 - x)^{-q},  x = p^{-2s}
                std::vector<long long> sp(cut + 1, 0);
                for (long long pk = 1, k = 0; pk <= cut; pk *= p, ++k) {
                    long long c = 0;
                    for (long long j = 0; j <= std::min<long long>(k, q); ++j) {
                        // binom(q,j)(-p^2)^j * binom(k-j+q-1, q-1)
                        double t = numerics::binom(int(q), int(j)) *
                                   numerics::binom(int(k - j + q - 1), int(q - 1));
                        double pj = 1.0;
                        for (long long u = 0; u < j; ++u) pj *= -double(p * p);
                        c += (long long)std::llround(t * pj);
                    }
                    sp[pk] = c;
                }
                e = dirichletConvolve(e, sp);
            }
            head.g1 = std::pow(double(family.level()), double(q));
            const double sign = ((q * r) % 2 == 0) ? 1.0 : -1.0;
            head.d1 = sign * double(e[1]);
            for (int j = 2; j <= nMax; ++j)
                head.coefficients.emplace_back(double(j), double(e[j]));
            break;
        }
        case FamilyKind::Gamma0Plus: {
            // phi = [modular phi] N^{-s} prod_p (p^s+p)/(p^s+1) after the xi-ratio
            // is rewritten; the series runs over m = n^2 prod p^{k_p} with
            // g^2 = N m, so g1 = sqrt(N) and u = sqrt(m).  The support is
            // sparse, so the cutoff grows until nMax nonzero terms are found.
            for (long long cut = 4LL * nMax + 64;; cut *= 2) {
                if (cut > (1LL << 24)) throw MathError("dirichletHead: cutoff overflow (internal)");
                std::vector<long long> e(cut + 1, 0);
                const auto tot = totientSieve(int(std::sqrt(double(cut))) + 1);
                for (long long n = 1; n * n <= cut; ++n) e[n * n] = tot[n];
                for (long long p : family.primes()) {
                    std::vector<long long> sp(cut + 1, 0);
                    sp[1] = 1;
                    long long sgn = 1;
                    for (long long pk = p; pk <= cut; pk *= p) {
                        sp[pk] = sgn * (p - 1);
                        sgn = -sgn;
                    }
                    e = dirichletConvolve(e, sp);
                }
                head.g1 = std::sqrt(double(family.level()));
                head.d1 = double(e[1]);
                head.coefficients.clear();
                int found = 1;
                for (long long m = 2; m <= cut && found < nMax; ++m) {
                    if (e[m] == 0) continue;
                    ++found;
                    head.coefficients.emplace_back(std::sqrt(double(m)), double(e[m]));
                }
                if (found == nMax) break;
            }
            break;
        }
    }
    head.c1 = -2.0 * std::log(head.g1);
    head.c2 = std::log(std::abs(head.d1));
    if (head.d1 == 0.0) throw MathError("dirichletHead: d(1) vanished (internal)");
    return head;
}

Complex selbergLogZ(const std::vector<HyperbolicClass>& classes, Complex s) {
    if (s.real() <= 1.0) throw DomainError("selbergLogZ: requires Re(s) > 1");
    Complex acc = 0.0;
    for (const auto& cls : classes) {
        if (cls.norm <= 1.0 || cls.primitiveNorm <= 1.0)
            throw DomainError("selbergLogZ: norms must exceed 1");
        const double lambda = std::log(cls.primitiveNorm) / (1.0 - 1.0 / cls.norm);
        acc -= lambda * std::exp(-s * std::log(cls.norm)) / std::log(cls.norm);
    }
    return acc;
}

}  // namespace scatdet::scattering
