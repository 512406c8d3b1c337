#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "scatdet/errors.hpp"
#include "scatdet/scattering.hpp"

namespace scatdet {
namespace superzeta {

struct ZeroEntry {
    Complex zero;
    int multiplicity = 1;
};

/// Zero set of an entire function of order at most two: either an explicit
/// finite list or an arithmetic progression y_k = start + (k-1) step marching
/// to -infinity (step < 0, e.g. start = -1, step = -1 for y_k = -k).
class ZeroSet {
public:
    enum class Kind { Finite, Progression };

    static ZeroSet finite(std::vector<ZeroEntry> zeros);
    static ZeroSet progression(double start, double step);

    Kind kind() const { return kind_; }
    const std::vector<ZeroEntry>& zeros() const { return zeros_; }
    double start() const { return start_; }
    double step() const { return step_; }

private:
    ZeroSet() = default;
    Kind kind_ = Kind::Finite;
    std::vector<ZeroEntry> zeros_;
    double start_ = 0.0, step_ = 0.0;
};

struct SuperzetaSum {
    Complex value;
    double tailEstimate = 0.0;  // 0 for finite sets
};

/// Coefficients of the expansion log Delta_f(z) = a~2 z^2 (log z - 3/2) + b2 z^2
/// + a~1 z (log z - 1) + b1 z + a~0 log z + b0 + ...; only the b-terms enter
/// the regularized-product formula, the a~-terms are kept as annotations.
struct ExpansionData {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    double aTilde0 = 0.0, aTilde1 = 0.0, aTilde2 = 0.0;
};

/// sum (z - y_k)^{-s} over the first `cutoff` zeros, principal branch.
/// Progressions require Re(s) > 2 (ConvergenceError otherwise) and return the
/// truncation plus a midpoint integral-comparison tail, with the estimated
/// tail error reported alongside.  DomainError if z - y_k lands on (-inf, 0]
/// for an included zero.
SuperzetaSum superzetaSum(const ZeroSet& zs, Complex s, Complex z, int cutoff);

/// exp(-d/ds Z(s,z)|_0): for finite sets the product prod (z-y_k)^{m_k}; for
/// progressions computed through the s-derivative of the Hurwitz zeta at 0
/// (Lerch's formula), which for y_k = -k gives sqrt(2 pi)/Gamma(z+1).
Complex regularizedDet(const ZeroSet& zs, Complex z);

/// e^{-(b2 z^2 + b1 z + b0)} * Delta_f(z), with log Delta_f supplied by the caller.
Complex vorosAssemble(const ExpansionData& exp, const std::function<Complex(Complex)>& hadamardLog,
                      Complex z);

/// log on the real line extended to the closed principal branch,
/// arg(x) = pi for x < 0; exp(d/ds x^{-s}|_0) = 1/x under this convention.
Complex extendedRealLog(double x);

struct SignPipelineResult {
    int sign = 0;     // (-1)^{N+P} sgn d(1)
    double alpha = 0.0;  // log of the regularized-product ratio at 1/2
};

/// Reassembles the central-value sign the way the regularized-product proof
/// does: the reflected divisor pairs contribute (-1)^{N+P}, the head
/// contributes d(1)/g1, and alpha = log(g1/(pi^{c/2}|d(1)|)) restores modulus
/// one.  Asserts the reassembly equals the sign to 1e-12.
SignPipelineResult signPipeline(const scattering::ScatteringFamily& family);

}  // namespace superzeta
}  // namespace scatdet
