#include "metaq/presentation.hpp"

#include <algorithm>

namespace metaq {

std::string MetacyclicParams::to_string() const {
    return "(p=" + std::to_string(p) + ", n=" + std::to_string(n) + ", m=" + std::to_string(m) +
           ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")";
}

ValidatedPresentation::ValidatedPresentation(const MetacyclicParams& params, PresentationKind kind)
    : params_(params),
      kind_(kind),
      pn_(prime_power(params.p, params.n)),
      pm_(prime_power(params.p, params.m)),
      order_(prime_power(params.p, params.n + params.m)),
      conj_(Integer(1) + prime_power(params.p, params.n - params.s)),
      pnr_(prime_power(params.p, params.n - params.r)) {}

ValidatedPresentation ValidatedPresentation::validate(const MetacyclicParams& params) {
    if (!is_prime(params.p)) throw NotPrimeError(params.p);
    if (params.n == 0) throw NotReducedError("n >= 1");
    if (params.m == 0) throw NotReducedError("m >= 1");

    PresentationKind kind;
    if (params.r == 0) {
        // split: 0 = r <= s < min(m+1, n)
        if (params.s > params.m) throw NotReducedError("split requires s <= m");
        if (params.s >= params.n) throw NotReducedError("split requires s < n");
        // abelian tuples are canonical only with n >= m; otherwise (n, m) and
        // (m, n) would name the same group twice
        if (params.s == 0 && params.n < params.m)
            throw NotReducedError("abelian (s = 0) requires n >= m");
        kind = PresentationKind::Split;
    } else {
        // non-split: max(1, n-m+1) <= r < min(s, n-s+1)
        unsigned long lower = 1;
        if (params.n + 1 > params.m && params.n - params.m + 1 > lower) lower = params.n - params.m + 1;
        if (params.r < lower) throw NotReducedError("non-split requires r >= max(1, n-m+1)");
        if (params.r >= params.s) throw NotReducedError("non-split requires r < s");
        if (params.r + params.s > params.n) throw NotReducedError("non-split requires r < n-s+1");
        kind = PresentationKind::NonSplit;
    }

    if (params.p == 2 && params.n >= 2 && params.s + 1 >= params.n) throw Exceptional2GroupError();

    return ValidatedPresentation(params, kind);
}

GroupElement ValidatedPresentation::element(const Integer& i, const Integer& j) const {
    return {mod_floor(i, pn_), mod_floor(j, pm_)};
}

GroupElement ValidatedPresentation::multiply(const GroupElement& x, const GroupElement& y) const {
    // a^ix b^jx . a^iy b^jy = a^(ix + iy (1+p^(n-s))^jx) b^(jx+jy), then one
    // application of b^(p^m) = a^(p^(n-r)) if the b-exponent wrapped.
    Integer i = x.i + y.i * mod_pow(conj_, x.j, pn_);
    Integer jsum = x.j + y.j;
    if (jsum >= pm_) {
        jsum -= pm_;
        i += pnr_;
    }
    return {mod_floor(i, pn_), jsum};
}

GroupElement ValidatedPresentation::inverse(const GroupElement& x) const {
    if (x.j == 0) return {mod_floor(-x.i, pn_), Integer(0)};
    // x^-1 = a^i' b^(p^m - j) with i + i'(1+p^(n-s))^j + p^(n-r) = 0 mod p^n
    Integer jinv = pm_ - x.j;
    Integer c = mod_pow(conj_, x.j, pn_);
    Integer iinv = mod_floor(-(x.i + pnr_) * mod_inverse(c, pn_), pn_);
    return {iinv, jinv};
}

GroupElement ValidatedPresentation::power(const GroupElement& x, const Integer& e) const {
    if (e < 0) return power(inverse(x), -e);
    GroupElement acc = identity();
    GroupElement base = x;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = multiply(acc, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return acc;
}

GroupElement ValidatedPresentation::conjugate(const GroupElement& x, const GroupElement& by) const {
    return multiply(by, multiply(x, inverse(by)));
}

Integer ValidatedPresentation::element_order(const GroupElement& x) const {
    Integer order(1);
    GroupElement cur = x;
    const GroupElement e = identity();
    while (!(cur == e)) {
        cur = power(cur, Integer(params_.p));
        order *= params_.p;
    }
    return order;
}

GroupElement ValidatedPresentation::derived_subgroup_generator() const {
    // [b, a] = a^(p^(n-s)) generates G'
    return element(prime_power(params_.p, params_.n - params_.s), 0);
}

std::pair<GroupElement, GroupElement> ValidatedPresentation::center_generators() const {
    const Integer ps = prime_power(params_.p, params_.s);
    return {element(ps, 0), element(0, ps)};
}

Integer group_order(const ValidatedPresentation& g) { return g.group_order(); }

std::vector<MetacyclicParams> enumerate_valid_tuples(const std::vector<unsigned long>& primes,
                                                     const Integer& max_order) {
    std::vector<MetacyclicParams> out;
    for (unsigned long p : primes) {
        for (unsigned long n = 1; prime_power(p, n + 1) <= max_order; ++n) {
            for (unsigned long m = 1; prime_power(p, n + m) <= max_order; ++m) {
                for (unsigned long s = 0; s <= m && s < n; ++s) {
                    for (unsigned long r = 0; r <= s; ++r) {
                        MetacyclicParams params{p, n, m, r, s};
                        try {
                            ValidatedPresentation::validate(params);
                        } catch (const ValidationError&) {
                            continue;
                        }
                        out.push_back(params);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace metaq
