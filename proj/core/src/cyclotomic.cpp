#include "metaq/cyclotomic.hpp"

#include <algorithm>
#include <cassert>

namespace metaq {

namespace {

constexpr unsigned long kMaxFieldOrder = 1ul << 20;

unsigned long checked_pk(unsigned long p, unsigned long k) {
    Integer pk = prime_power(p, k);
    if (pk > kMaxFieldOrder) throw TooLargeError("cyclotomic level too large: p^k = " + pk.get_str());
    return to_ulong(pk);
}

unsigned long phi_ul(unsigned long pk, unsigned long p) { return pk - pk / p; }

const Rational& zero_rational() {
    static const Rational z(0);
    return z;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned long p, unsigned long k) {
    if (k == 0) throw std::domain_error("cyclotomic_polynomial: k >= 1 required");
    if (!is_prime(p)) throw std::domain_error("cyclotomic_polynomial: p must be prime");
    const unsigned long pk = checked_pk(p, k);
    const unsigned long pk1 = pk / p;
    std::vector<Integer> coeffs(phi_ul(pk, p) + 1, Integer(0));
    for (unsigned long i = 0; i < p; ++i) coeffs[i * pk1] = 1;
    return coeffs;
}

CyclotomicNumber::CyclotomicNumber() : p_(0), level_(0), coeffs_{Rational(0)} {}

CyclotomicNumber::CyclotomicNumber(long value) : p_(0), level_(0), coeffs_{Rational(value)} {}

CyclotomicNumber::CyclotomicNumber(const Integer& value) : p_(0), level_(0), coeffs_{Rational(value)} {}

CyclotomicNumber::CyclotomicNumber(const Rational& value) : p_(0), level_(0), coeffs_{value} {
    coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(unsigned long p, unsigned long level, std::vector<Rational> coeffs)
    : p_(p), level_(level), coeffs_(std::move(coeffs)) {}

void CyclotomicNumber::reduce_in_place(unsigned long p, unsigned long k, std::vector<Rational>& v) {
    const unsigned long pk = checked_pk(p, k);
    const unsigned long pk1 = pk / p;
    const unsigned long phi = pk - pk1;
    // fold zeta^(p^k) = 1
    if (v.size() > pk) {
        for (unsigned long e = pk; e < v.size(); ++e) v[e - pk] += v[e];
        v.resize(pk);
    }
    // substitute zeta^(phi + d) = -sum_{i<p-1} zeta^(i p^(k-1) + d)
    for (unsigned long e = phi; e < v.size(); ++e) {
        if (v[e] == 0) continue;
        const Rational c = v[e];
        const unsigned long d = e - phi;
        for (unsigned long i = 0; i + 1 < p; ++i) v[i * pk1 + d] -= c;
    }
    v.resize(phi);
}

CyclotomicNumber CyclotomicNumber::root_of_unity(unsigned long p, unsigned long k, const Integer& e) {
    if (!is_prime(p)) throw std::domain_error("root_of_unity: p must be prime");
    if (k == 0) return CyclotomicNumber(Rational(1));
    const unsigned long pk = checked_pk(p, k);
    const unsigned long exp = to_ulong(mod_floor(e, Integer(pk)));
    std::vector<Rational> v(exp + 1, Rational(0));
    v[exp] = 1;
    reduce_in_place(p, k, v);
    return CyclotomicNumber(p, k, std::move(v));
}

CyclotomicNumber CyclotomicNumber::from_coefficients(unsigned long p, unsigned long k,
                                                     std::vector<Rational> raw) {
    if (k == 0) {
        Rational q = raw.empty() ? Rational(0) : raw[0];
        return CyclotomicNumber(q);
    }
    if (!is_prime(p)) throw std::domain_error("from_coefficients: p must be prime");
    reduce_in_place(p, k, raw);
    const unsigned long phi = to_ulong(phi_prime_power(p, k));
    raw.resize(phi, Rational(0));
    return CyclotomicNumber(p, k, std::move(raw));
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t d = 1; d < coeffs_.size(); ++d)
        if (coeffs_[d] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: not rational: " + to_string());
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lifted_to(unsigned long target) const {
    if (level_ == target) return *this;
    if (level_ > target) throw std::domain_error("lifted_to: target below current level");
    if (p_ == 0) throw std::domain_error("lifted_to: rational has no prime context");
    const unsigned long scale = to_ulong(prime_power(p_, target - level_));
    std::vector<Rational> v(to_ulong(phi_prime_power(p_, target)), Rational(0));
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        if (coeffs_[d] != 0) v[d * scale] = coeffs_[d];
    return CyclotomicNumber(p_, target, std::move(v));
}

namespace {

// Brings a and b into one field; pure rationals adopt the other side's prime.
void align(CyclotomicNumber& a, CyclotomicNumber& b);

}  // namespace

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return CyclotomicNumber(p_, level_, std::move(v));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    CyclotomicNumber x = a, y = b;
    align(x, y);
    std::vector<Rational> v = x.coeffs_;
    for (std::size_t d = 0; d < v.size(); ++d) v[d] += y.coeffs_[d];
    return CyclotomicNumber(x.p_, x.level_, std::move(v));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    CyclotomicNumber x = a, y = b;
    align(x, y);
    if (x.level_ == 0) return CyclotomicNumber(Rational(x.coeffs_[0] * y.coeffs_[0]));
    std::vector<Rational> conv(2 * x.coeffs_.size(), Rational(0));
    for (std::size_t d = 0; d < x.coeffs_.size(); ++d) {
        if (x.coeffs_[d] == 0) continue;
        for (std::size_t e = 0; e < y.coeffs_.size(); ++e) {
            if (y.coeffs_[e] == 0) continue;
            conv[d + e] += x.coeffs_[d] * y.coeffs_[e];
        }
    }
    return CyclotomicNumber::from_coefficients(x.p_, x.level_, std::move(conv));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    CyclotomicNumber x = a, y = b;
    align(x, y);
    return x.coeffs_ == y.coeffs_;
}

namespace {

using Poly = std::vector<Rational>;

void strip(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// division with remainder; divisor nonzero
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    if (den.empty()) throw std::domain_error("poly_divmod: zero divisor");
    Poly q;
    if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size()) {
        const Rational factor = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        q[shift] = factor;
        for (std::size_t i = 0; i + 1 < den.size(); ++i) num[shift + i] -= factor * den[i];
        num.pop_back();  // leading term cancels exactly
        strip(num);
    }
    strip(q);
    return {q, num};
}

Poly poly_sub_scaled(const Poly& a, const Poly& q, const Poly& b) {
    // a - q*b
    Poly out = a;
    if (out.size() < q.size() + b.size()) out.resize(q.size() + b.size(), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    strip(out);
    return out;
}

void align(CyclotomicNumber& a, CyclotomicNumber& b) {
    if (a.prime() != 0 && b.prime() != 0 && a.prime() != b.prime())
        throw std::invalid_argument("cyclotomic arithmetic across different primes");
    unsigned long p = a.prime() != 0 ? a.prime() : b.prime();
    if (p == 0) return;  // both rational
    unsigned long target = std::max(a.level(), b.level());
    auto embed = [&](CyclotomicNumber& x) {
        if (x.prime() == 0) {
            std::vector<Rational> raw{x.coefficients()[0]};
            x = CyclotomicNumber::from_coefficients(p, target, std::move(raw));
        } else if (x.level() < target) {
            x = x.lifted_to(target);
        }
    };
    embed(a);
    embed(b);
}

}  // namespace

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    if (is_rational()) return CyclotomicNumber(Rational(1 / coeffs_[0]));
    // extended Euclid: u*f = gcd (mod Phi), with f = this
    Poly phi_poly;
    for (const Integer& c : cyclotomic_polynomial(p_, level_)) phi_poly.emplace_back(c);
    Poly r0 = phi_poly, r1 = coeffs_;
    strip(r1);
    Poly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, rem] = poly_divmod(r0, r1);
        Poly s2 = poly_sub_scaled(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    assert(!r1.empty());  // Phi is irreducible, gcd is a nonzero constant
    const Rational c = r1[0];
    for (auto& coef : s1) coef /= c;
    return from_coefficients(p_, level_, std::move(s1));
}

CyclotomicNumber CyclotomicNumber::galois_apply(const Integer& u) const {
    if (level_ == 0) return *this;
    const Integer pk = prime_power(p_, level_);
    if (gcd(mod_floor(u, pk), pk) != 1)
        throw UnitRequiredError("galois_apply: u = " + u.get_str() + " not a unit mod " + pk.get_str());
    const unsigned long uu = to_ulong(mod_floor(u, pk));
    const unsigned long pk_ul = to_ulong(pk);
    std::vector<Rational> raw(pk_ul, Rational(0));
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        raw[(d * uu) % pk_ul] += coeffs_[d];
    }
    return from_coefficients(p_, level_, std::move(raw));
}

namespace {

// Generators of { u : u = 1 mod p^lambda } inside (Z/p^k)^x, the subgroup
// fixing Q(zeta_{p^lambda}) pointwise.
std::vector<Integer> fixing_subgroup_generators(unsigned long p, unsigned long k,
                                                unsigned long lambda) {
    if (lambda >= k) return {};
    if (lambda == 0 || (p == 2 && lambda == 1)) return unit_group_generators(p, k);
    return {Integer(1) + prime_power(p, lambda)};
}

}  // namespace

Integer CyclotomicNumber::conductor() const { return prime_power(p_ == 0 ? 2 : p_, conductor_exponent()); }

unsigned long CyclotomicNumber::conductor_exponent() const {
    if (level_ == 0) return 0;
    for (unsigned long lambda = 0; lambda <= level_; ++lambda) {
        bool fixed = true;
        for (const Integer& g : fixing_subgroup_generators(p_, level_, lambda)) {
            if (galois_apply(g) != *this) {
                fixed = false;
                break;
            }
        }
        if (fixed) return lambda;
    }
    return level_;  // unreachable; lambda = level always passes
}

std::string CyclotomicNumber::to_string() const {
    if (is_rational()) {
        Rational v = coeffs_[0];
        v.canonicalize();
        return v.get_str();
    }
    const std::string sym = "z" + prime_power(p_, level_).get_str();
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        Rational c = coeffs_[d];
        c.canonicalize();
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (d == 0) {
            term = mag.get_str();
        } else {
            term = (mag == 1) ? "" : mag.get_str() + "*";
            term += sym;
            if (d > 1) term += "^" + std::to_string(d);
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace metaq
