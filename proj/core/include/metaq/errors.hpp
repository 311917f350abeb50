/**
 * @file errors.hpp
 * @brief Exception types shared across the library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace metaq {

/// Parameter tuple fails the uniquely reduced presentation conditions.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrimeError : public ValidationError {
public:
    explicit NotPrimeError(unsigned long p)
        : ValidationError("NotPrime: p = " + std::to_string(p) + " is not prime") {}
};

class NotReducedError : public ValidationError {
public:
    explicit NotReducedError(std::string condition)
        : ValidationError("NotReduced: violates \"" + condition + "\""),
          condition_(std::move(condition)) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

/// p = 2, n >= 2, s >= n-1: the presentation family with conjugation exponent
/// -1 + 2^(n-s); rejected, not modeled.
class Exceptional2GroupError : public ValidationError {
public:
    Exceptional2GroupError()
        : ValidationError("Exceptional2Group: p = 2 with s >= n-1 is outside the ordinary family") {}
};

/// Group exceeds the enumeration bound of a brute-force routine.
class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Formula and enumeration disagree.
class MismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Required-pair congruences have no common solution (implementation bug guard).
class NoSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Derived quotient parameters fail validation (implementation bug guard).
class QuotientNotReducedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// galois_apply called with a non-unit exponent.
class UnitRequiredError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace metaq
