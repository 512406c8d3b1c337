#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "scatdet/errors.hpp"
#include "scatdet/scattering.hpp"

namespace scatdet {
namespace divisor {

struct DivisorEntry {
    double location;     // > 1/2
    int order;           // signed: > 0 zero, < 0 pole
    std::string source;  // factor responsible
};

/// Zeros (N) and poles (P) of phi on (1/2, infinity), counted with
/// multiplicity, with the per-factor ledger.  |phi(1/2)| = 1 forces s = 1/2
/// itself to be neither, so the open and closed interval conventions agree.
struct DivisorCount {
    int zeros = 0;
    int poles = 0;
    std::vector<DivisorEntry> breakdown;
    std::vector<std::string> justifications;
};

struct Rectangle {
    double reMin, reMax, imMin, imMax;
    Rectangle(double rmin, double rmax, double imin, double imax);
};

struct TheoremReport {
    int zeros = 0;        // N
    int poles = 0;        // P
    int sgnD1 = 0;
    int predicted = 0;    // (-1)^{N+P} sgn d(1)
    int computed = 0;     // sign of the germ value at 1/2
    bool ok = false;
};

/// Symbolic divisor ledger per family.
DivisorCount countDivisor(const scattering::ScatteringFamily& family);

/// log-derivative phi'/phi assembled analytically (digamma, zeta'/zeta with a
/// Laurent germ near the zeta pole, and elementary factors).
Complex phiLogDeriv(const scattering::ScatteringFamily& family, Complex s);

/// Nearest integer to (1/2 pi i) of the counterclockwise boundary integral of
/// `logDeriv` over the rectangle (composite trapezoid, nodesPerSide intervals
/// per side).  Throws NonIntegerWindingError if the residual exceeds 1e-3.
int windingNumber(const std::function<Complex(Complex)>& logDeriv, const Rectangle& rect,
                  int nodesPerSide = 2048);

/// windingNumber of phi'/phi, with a boundary guard: min |phi| and min |1/phi|
/// over the sampled contour must exceed 1e-6 (ContourTooCloseError otherwise).
int argumentPrincipleNet(const scattering::ScatteringFamily& family, const Rectangle& rect);

/// phi(1/2) = (-1)^{N+P} sgn(d(1)) checked against the germ evaluation.
TheoremReport verifyTheorem(const scattering::ScatteringFamily& family);

/// g1 / (pi^{c/2} |d(1)|), the value of exp(-d/ds(Z-* - Z+*)|_0).
double corollaryAlpha(const scattering::ScatteringFamily& family);

}  // namespace divisor
}  // namespace scatdet
