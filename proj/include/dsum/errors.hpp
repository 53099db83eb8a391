#pragma once

#include <stdexcept>
#include <string>

namespace dsum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// A truncated series with a non-invertible constant term was inverted.
class NotAUnit : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// lambda coincides with gamma (or with some n-th root of unity in a sum).
class ParameterCollision : public Error {
public:
    explicit ParameterCollision(const std::string& what, long long k = -1)
        : Error(what), k_(k) {}
    /// Index k of the colliding root zeta_n^{-k}, or -1 when not applicable.
    long long k() const noexcept { return k_; }

private:
    long long k_;
};

/// Negative power of (1 - gamma) with gamma = 1.
class InvalidPower : public Error {
public:
    using Error::Error;
};

/// Bad parameters for a weight family or sequence (e.g. gcd(a, n) != 1).
class InvalidParam : public Error {
public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Ill-formed verification grid.
class InvalidGrid : public Error {
public:
    using Error::Error;
};

}  // namespace dsum
