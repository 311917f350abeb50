#include "metaq/arith.hpp"

#include <cassert>
#include <vector>

namespace metaq {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer prime_power(unsigned long p, unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

Integer phi_prime_power(unsigned long p, unsigned long k) {
    if (k == 0) return 1;
    return prime_power(p, k - 1) * Integer(p - 1);
}

bool is_prime(unsigned long p) {
    Integer x(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(x.get_mpz_t(), 40) != 0;
}

Integer mod_floor(const Integer& x, const Integer& m) {
    if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer mod_pow(const Integer& base, const Integer& e, const Integer& m) {
    if (e < 0) throw std::domain_error("mod_pow: negative exponent");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& x, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: not a unit");
    return r;
}

unsigned long valuation(const Integer& x, unsigned long p) {
    if (x == 0) throw std::domain_error("valuation: zero argument");
    Integer reduced;
    Integer pp(static_cast<unsigned long>(p));
    return mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
}

namespace {

std::vector<unsigned long> prime_factors(unsigned long v) {
    std::vector<unsigned long> out;
    for (unsigned long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

Integer multiplicative_order_mod_prime_power(const Integer& x, unsigned long p, unsigned long k) {
    const Integer m = prime_power(p, k);
    if (m == 1) return 1;
    const Integer xr = mod_floor(x, m);
    if (gcd(xr, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
    // order divides phi(p^k) = p^(k-1) (p-1)
    Integer order = phi_prime_power(p, k);
    std::vector<unsigned long> qs = prime_factors(p - 1);
    qs.push_back(p);
    for (unsigned long q : qs) {
        while (order % q == 0 && mod_pow(xr, order / q, m) == 1) order /= q;
    }
    assert(mod_pow(xr, order, m) == 1);
    return order;
}

unsigned long primitive_root_mod_prime_power(unsigned long p, unsigned long k) {
    if (p == 2) throw std::domain_error("primitive_root: p must be odd");
    const Integer m = prime_power(p, k);
    const Integer phi = phi_prime_power(p, k);
    std::vector<unsigned long> qs = prime_factors(p - 1);
    if (k >= 2) qs.push_back(p);
    for (unsigned long g = 2;; ++g) {
        if (Integer(g) % p == 0) continue;
        bool primitive = true;
        for (unsigned long q : qs) {
            if (mod_pow(Integer(g), phi / q, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
}

std::vector<Integer> unit_group_generators(unsigned long p, unsigned long k) {
    if (k == 0) return {};
    if (p != 2) return {Integer(primitive_root_mod_prime_power(p, k))};
    if (k == 1) return {};
    if (k == 2) return {Integer(3)};
    return {prime_power(2, k) - 1, Integer(5)};
}

Integer order_one_plus(unsigned long p, unsigned long alpha, unsigned long beta) {
    if (alpha == 0) throw std::domain_error("order_one_plus: alpha must be >= 1");
    if (p == 2 && alpha == 1 && beta >= 2)
        throw std::domain_error("order_one_plus: excluded 2-adic case (p=2, alpha=1, beta>=2)");
    Integer result = prime_power(p, beta);
#ifndef NDEBUG
    {
        const Integer m = prime_power(p, alpha + beta);
        const Integer x = Integer(1) + prime_power(p, alpha);
        assert(mod_pow(x, result, m) == 1);
        if (beta >= 1) assert(mod_pow(x, result / p, m) != 1);
    }
#endif
    return result;
}

unsigned long to_ulong(const Integer& x) {
    if (x < 0 || !x.fits_ulong_p()) throw std::overflow_error("to_ulong: out of range");
    return x.get_ui();
}

}  // namespace metaq
