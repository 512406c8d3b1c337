#pragma once

#include <stdexcept>
#include <string>

namespace scatdet {

/// Base class for all numerical and domain failures raised by this library.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument sits on (or within tolerance of) a pole.
class PoleError : public MathError {
public:
    explicit PoleError(const std::string& msg) : MathError(msg) {}
};

/// Argument sits on (or within tolerance of) a zero whose logarithm is requested.
class ZeroError : public MathError {
public:
    explicit ZeroError(const std::string& msg) : MathError(msg) {}
};

/// Argument outside the domain of the operation.
class DomainError : public MathError {
public:
    explicit DomainError(const std::string& msg) : MathError(msg) {}
};

/// Evaluation point is too close to a zero or pole of some factor; use the
/// Laurent-germ path instead.
class SingularityError : public MathError {
public:
    explicit SingularityError(const std::string& msg) : MathError(msg) {}
};

/// Series parameters outside the region of absolute convergence.
class ConvergenceError : public MathError {
public:
    explicit ConvergenceError(const std::string& msg) : MathError(msg) {}
};

/// Integration contour passes too close to a zero or pole.
class ContourTooCloseError : public MathError {
public:
    explicit ContourTooCloseError(const std::string& msg) : MathError(msg) {}
};

/// Contour integral failed to round to an integer within tolerance.
class NonIntegerWindingError : public MathError {
public:
    explicit NonIntegerWindingError(const std::string& msg) : MathError(msg) {}
};

}  // namespace scatdet
