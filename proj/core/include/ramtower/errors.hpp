#pragma once

#include <stdexcept>
#include <string>

namespace ramtower {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input, violated precondition, or failed hypothesis.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A result cannot be determined from the known coefficients. Never guessed.
class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

/// A corollary's applicability guard does not hold (e.g. W(n) <= l_N).
class GuardViolation : public DomainError {
public:
    using DomainError::DomainError;
};

/// A coefficient that must be pi-integral was not.
class NonIntegralCoefficient : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace ramtower
