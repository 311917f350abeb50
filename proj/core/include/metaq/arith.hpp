/**
 * @file arith.hpp
 * @brief Exact integer/rational scalars and the prime-power number theory
 *        used everywhere else: p^k, phi(p^k), valuations, modular arithmetic,
 *        multiplicative orders.
 *
 * All exponent arithmetic is arbitrary precision (GMP); nothing in the
 * trusted path uses fixed-width shortcuts.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace metaq {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms, positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// base^e for a non-negative machine exponent.
Integer ipow(const Integer& base, unsigned long e);

/// p^k.
Integer prime_power(unsigned long p, unsigned long k);

/// Euler phi on a prime power: phi(p^k) = p^(k-1)(p-1), phi(1) = 1.
Integer phi_prime_power(unsigned long p, unsigned long k);

bool is_prime(unsigned long p);

/// x reduced into [0, m). m > 0.
Integer mod_floor(const Integer& x, const Integer& m);

/// base^e mod m, e >= 0.
Integer mod_pow(const Integer& base, const Integer& e, const Integer& m);

/// Inverse of x modulo m; throws std::domain_error if gcd(x, m) != 1.
Integer mod_inverse(const Integer& x, const Integer& m);

/// Largest k with p^k | x. x must be nonzero.
unsigned long valuation(const Integer& x, unsigned long p);

/// Multiplicative order of x modulo p^k (x a unit). Brute-force-free but
/// fully general: divides out prime factors of phi(p^k).
Integer multiplicative_order_mod_prime_power(const Integer& x, unsigned long p, unsigned long k);

/// Smallest primitive root modulo p^k for odd p, k >= 1.
unsigned long primitive_root_mod_prime_power(unsigned long p, unsigned long k);

/// Generators of the full unit group (Z/p^k)^x: a primitive root for odd p;
/// {-1, 5} (or {3}, or nothing) for p = 2.
std::vector<Integer> unit_group_generators(unsigned long p, unsigned long k);

/**
 * Closed form for the multiplicative order of 1+p^alpha modulo p^(alpha+beta):
 * returns p^beta. Requires alpha >= 1, and excludes the 2-adic degenerate
 * family p=2, alpha=1, beta>=2 where the closed form fails (ord(3 mod 2^j) is
 * 2^(j-2) for j >= 3). Debug builds cross-check by modular exponentiation.
 */
Integer order_one_plus(unsigned long p, unsigned long alpha, unsigned long beta);

/// Narrowing helper; throws std::overflow_error when x does not fit.
unsigned long to_ulong(const Integer& x);

}  // namespace metaq
