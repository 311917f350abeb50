/**
 * @file presentation.hpp
 * @brief Uniquely reduced presentations of ordinary metacyclic p-groups
 *
 *   G = < a, b : a^(p^n) = 1, b^(p^m) = a^(p^(n-r)), b a b^-1 = a^(1+p^(n-s)) >
 *
 * with King's split/non-split parameter conditions, normal forms a^i b^j,
 * exact element arithmetic, and the structural subgroup data (derived
 * subgroup, center) every other module relies on.
 */
#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "metaq/arith.hpp"
#include "metaq/errors.hpp"

namespace metaq {

enum class PresentationKind { Split, NonSplit };

struct MetacyclicParams {
    unsigned long p = 2;
    unsigned long n = 1;
    unsigned long m = 1;
    unsigned long r = 0;
    unsigned long s = 0;

    friend bool operator==(const MetacyclicParams&, const MetacyclicParams&) = default;
    friend auto operator<=>(const MetacyclicParams&, const MetacyclicParams&) = default;

    std::string to_string() const;
};

/// Normal form a^i b^j with 0 <= i < p^n, 0 <= j < p^m.
struct GroupElement {
    Integer i;
    Integer j;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/**
 * A parameter tuple that passed validation. Every operation downstream takes
 * one of these; raw MetacyclicParams never reach the formulas.
 */
class ValidatedPresentation {
public:
    /**
     * Checks the uniquely reduced presentation conditions:
     *  - split:      r = 0 and 0 <= s < min(m+1, n), with n >= m when s = 0
     *  - non-split:  max(1, n-m+1) <= r < min(s, n-s+1)
     *  - ordinary:   if p = 2 and n >= 2 then s < n-1
     * Throws NotPrimeError, NotReducedError or Exceptional2GroupError.
     */
    static ValidatedPresentation validate(const MetacyclicParams& params);

    const MetacyclicParams& params() const { return params_; }
    PresentationKind kind() const { return kind_; }
    bool is_split() const { return kind_ == PresentationKind::Split; }
    bool is_abelian() const { return params_.s == 0; }

    const Integer& a_order() const { return pn_; }              ///< p^n
    const Integer& b_exponent_modulus() const { return pm_; }   ///< p^m
    const Integer& group_order() const { return order_; }       ///< p^(n+m)
    const Integer& conjugation_unit() const { return conj_; }   ///< 1 + p^(n-s)
    const Integer& b_power_a_exponent() const { return pnr_; }  ///< p^(n-r)

    GroupElement identity() const { return {Integer(0), Integer(0)}; }
    GroupElement generator_a() const { return element(1, 0); }
    GroupElement generator_b() const { return element(0, 1); }

    /// Reduces arbitrary exponents into normal form.
    GroupElement element(const Integer& i, const Integer& j) const;

    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    GroupElement power(const GroupElement& x, const Integer& e) const;
    GroupElement conjugate(const GroupElement& x, const GroupElement& by) const;

    /// Order of x (a power of p).
    Integer element_order(const GroupElement& x) const;

    /// Generator of G' = < a^(p^(n-s)) >; identity when the group is abelian.
    GroupElement derived_subgroup_generator() const;

    /// (a^(p^s), b^(p^s)) generating Z(G).
    std::pair<GroupElement, GroupElement> center_generators() const;

private:
    explicit ValidatedPresentation(const MetacyclicParams& params, PresentationKind kind);

    MetacyclicParams params_;
    PresentationKind kind_;
    Integer pn_, pm_, order_, conj_, pnr_;
};

Integer group_order(const ValidatedPresentation& g);

/**
 * All validated tuples over the given primes with p^(n+m) <= max_order,
 * in a deterministic order. The sweep surface used by verification drivers.
 */
std::vector<MetacyclicParams> enumerate_valid_tuples(const std::vector<unsigned long>& primes,
                                                     const Integer& max_order);

}  // namespace metaq
