/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in prime-power cyclotomic fields Q(zeta_{p^k}).
 *
 * Elements are rational coefficient vectors on the power basis
 * {1, zeta, ..., zeta^(phi(p^k)-1)}, canonically reduced modulo
 * Phi_{p^k}(x) = 1 + x^(p^(k-1)) + ... + x^((p-1) p^(k-1)) via the sparse
 * relation zeta^phi = -(1 + zeta^(p^(k-1)) + ... + zeta^((p-2) p^(k-1))).
 * Level 0 elements are plain rationals. Equality across levels is decided by
 * lifting to the larger field (zeta_{p^j} = zeta_{p^k}^(p^(k-j))).
 *
 * No floating point anywhere; the numeric embedding used for sanity checks
 * lives in the oracle module.
 */
#pragma once

#include <string>
#include <vector>

#include "metaq/arith.hpp"
#include "metaq/errors.hpp"

namespace metaq {

/// Coefficients of Phi_{p^k}(x), constant term first; degree phi(p^k). k >= 1.
std::vector<Integer> cyclotomic_polynomial(unsigned long p, unsigned long k);

class CyclotomicNumber {
public:
    /// Zero (as a rational, level 0).
    CyclotomicNumber();
    CyclotomicNumber(long value);  // NOLINT: implicit by design, scalar literals
    CyclotomicNumber(const Integer& value);
    CyclotomicNumber(const Rational& value);

    /// zeta_{p^k}^e, exponent taken mod p^k.
    static CyclotomicNumber root_of_unity(unsigned long p, unsigned long k, const Integer& e);

    /// Reduces a raw coefficient vector (any length) modulo Phi_{p^k}.
    static CyclotomicNumber from_coefficients(unsigned long p, unsigned long k,
                                              std::vector<Rational> raw);

    unsigned long prime() const { return p_; }
    unsigned long level() const { return level_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error when the value is not rational.
    Rational rational_value() const;

    /// Re-embeds into Q(zeta_{p^target}), target >= level.
    CyclotomicNumber lifted_to(unsigned long target) const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber& operator+=(const CyclotomicNumber& b);
    CyclotomicNumber& operator-=(const CyclotomicNumber& b);
    CyclotomicNumber& operator*=(const CyclotomicNumber& b);

    /// Field inverse by extended Euclid against Phi_{p^k}; throws
    /// std::domain_error on zero.
    CyclotomicNumber inverse() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

    /// The automorphism zeta -> zeta^u. Throws UnitRequiredError when
    /// gcd(u, p^level) != 1.
    CyclotomicNumber galois_apply(const Integer& u) const;

    /// Smallest p^lambda with this value in Q(zeta_{p^lambda}), decided by
    /// invariance under generators of Gal(Q(zeta_{p^k})/Q(zeta_{p^lambda})).
    Integer conductor() const;
    unsigned long conductor_exponent() const;

    std::string to_string() const;

private:
    CyclotomicNumber(unsigned long p, unsigned long level, std::vector<Rational> coeffs);

    static void reduce_in_place(unsigned long p, unsigned long k, std::vector<Rational>& v);

    unsigned long p_;      // 0 for a pure rational
    unsigned long level_;  // k; field is Q(zeta_{p^k})
    std::vector<Rational> coeffs_;
};

}  // namespace metaq
