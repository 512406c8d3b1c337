#include "scatdet/superzeta.hpp"

#include <cmath>

#include "scatdet/divisor.hpp"
#include "scatdet/numerics.hpp"
#include "scatdet/specfun.hpp"

namespace scatdet::superzeta {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool onCut(Complex w) { return w.imag() == 0.0 && w.real() <= 0.0; }

void requireOffCut(Complex w, const char* who) {
    if (onCut(w))
        throw DomainError(std::string(who) + ": z - y_k lies on the branch cut (-inf, 0]");
}

}  // namespace

ZeroSet ZeroSet::finite(std::vector<ZeroEntry> zeros) {
    if (zeros.empty()) throw DomainError("ZeroSet: finite list must be nonempty");
    for (const auto& e : zeros)
        if (e.multiplicity < 1) throw DomainError("ZeroSet: multiplicities must be positive");
    ZeroSet zs;
    zs.kind_ = Kind::Finite;
    zs.zeros_ = std::move(zeros);
    return zs;
}

ZeroSet ZeroSet::progression(double start, double step) {
    // The zeros must march to -infinity for the superzeta sum to converge.
    if (!(step < 0.0))
        throw DomainError("ZeroSet: progression step must be negative (zeros tend to -infinity)");
    ZeroSet zs;
    zs.kind_ = Kind::Progression;
    zs.start_ = start;
    zs.step_ = step;
    return zs;
}

SuperzetaSum superzetaSum(const ZeroSet& zs, Complex s, Complex z, int cutoff) {
    if (cutoff < 1) throw DomainError("superzetaSum: cutoff must be positive");
    if (zs.kind() == ZeroSet::Kind::Finite) {
        Complex acc = 0.0;
        int used = 0;
        for (const auto& e : zs.zeros()) {
            if (used >= cutoff) break;
            const Complex w = z - e.zero;
            requireOffCut(w, "superzetaSum");
            acc += double(e.multiplicity) * std::exp(-s * std::log(w));
            ++used;
        }
        return {acc, 0.0};
    }
    if (s.real() <= 2.0)
        throw ConvergenceError("superzetaSum: progression sums require Re(s) > 2");
    const double d = -zs.step();
    const Complex A = z - zs.start();  // z - y_1
    requireOffCut(A, "superzetaSum");
    Complex acc = 0.0;
    for (int k = 1; k <= cutoff; ++k) acc += std::exp(-s * std::log(A + (k - 1) * d));
    // Midpoint integral comparison for the tail sum_{k > cutoff}.
    const Complex u = A + (cutoff - 0.5) * d;
    const Complex tail = std::exp((1.0 - s) * std::log(u)) / (d * (s - 1.0));
    const double tailErr = std::abs(s * (s + 1.0)) * d / (24.0 * (s.real() + 1.0)) *
                           std::pow(std::abs(u), -s.real() - 1.0);
    return {acc + tail, tailErr};
}

Complex regularizedDet(const ZeroSet& zs, Complex z) {
    if (zs.kind() == ZeroSet::Kind::Finite) {
        Complex acc = 0.0;
        for (const auto& e : zs.zeros()) {
            const Complex w = z - e.zero;
            requireOffCut(w, "regularizedDet");
            acc += double(e.multiplicity) * std::log(w);
        }
        return std::exp(acc);  // prod (z - y_k)^{m_k}
    }
    // Z(s, z) = d^{-s} zeta_H(s, a) with a = (z - start)/d, d = -step, so
    // -d/ds|_0 = log(d) (1/2 - a) - zeta_H'(0, a) and Lerch's formula applies.
    const double d = -zs.step();
    const Complex a = (z - zs.start()) / d;
    requireOffCut(a, "regularizedDet");
    if (a.real() <= 0.0)
        throw DomainError("regularizedDet: progression point with Re(z - y_1) <= 0 unsupported");
    const Complex lerch = specfun::hurwitzZetaDs0(a);
    return std::exp(std::log(d) * (0.5 - a) - lerch);
}

Complex vorosAssemble(const ExpansionData& exp, const std::function<Complex(Complex)>& hadamardLog,
                      Complex z) {
    return std::exp(-(exp.b2 * z * z + exp.b1 * z + exp.b0) + hadamardLog(z));
}

Complex extendedRealLog(double x) {
    if (x == 0.0) throw DomainError("extendedRealLog: log of zero");
    if (x > 0.0) return std::log(x);
    return Complex(std::log(-x), kPi);
}

SignPipelineResult signPipeline(const scattering::ScatteringFamily& family) {
    const divisor::DivisorCount dc = divisor::countDivisor(family);
    const scattering::DirichletHead head = scattering::dirichletHead(family, 1);

    // Each reflected pair of divisor points sigma > 1/2 vs 1 - sigma < 1/2
    // contributes exp(q [log(sigma - 1/2) - log(1/2 - sigma)]) = (-1)^q.
    Complex pairProduct = 1.0;
    for (const auto& entry : dc.breakdown) {
        const int q = std::abs(entry.order);
        const Complex factor =
            std::exp(double(q) * (extendedRealLog(entry.location - 0.5) -
                                  extendedRealLog(0.5 - entry.location)));
        pairProduct *= factor;
    }

    SignPipelineResult res;
    const int sgnD1 = head.d1 > 0 ? 1 : -1;
    res.sign = ((dc.zeros + dc.poles) % 2 == 0 ? 1 : -1) * sgnD1;
    res.alpha = std::log(divisor::corollaryAlpha(family));

    // (-1)^{N+P} pi^{c/2} (d(1)/g1) e^alpha must reproduce the sign exactly.
    const Complex parity = pairProduct;  // equals (-1)^{N+P}
    const Complex reassembled = parity * std::pow(kPi, 0.5 * head.cusps) * (head.d1 / head.g1) *
                                std::exp(res.alpha);
    if (std::abs(reassembled - double(res.sign)) > 1e-12)
        throw MathError("signPipeline: reassembled central value does not match the sign");
    return res;
}

}  // namespace scatdet::superzeta
