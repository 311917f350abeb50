/**
 * @file complex_reps.hpp
 * @brief Complex irreducible representations of an ordinary metacyclic
 *        p-group: the orbit census of the conjugation action on p^n-th roots
 *        of unity, descriptor enumeration, explicit monomial matrices, and
 *        closed-form character values.
 *
 * All roots of unity are expressed through one fixed generator zeta_{p^M} of
 * the working level M = max(n, m); descriptor identity is therefore exact.
 */
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metaq/cyclotomic.hpp"
#include "metaq/matrix.hpp"
#include "metaq/presentation.hpp"

namespace metaq {

/// Orbit counts for sigma(zeta^i) = zeta^(i(1+p^(n-s))) acting on <zeta_{p^n}>.
struct OrbitCensus {
    Integer fixed_points;                       ///< orbits of size 1: p^(n-s)
    std::map<unsigned long, Integer> per_size;  ///< t -> #orbits of size p^t, 1 <= t <= s
};

OrbitCensus orbit_census(const ValidatedPresentation& g);

/// T(a) = zeta_{p^n}^(lambda p^s), T(b) = zeta_{p^m}^(omega_exp).
struct LinearDescriptor {
    Integer lambda;     ///< residue mod p^(n-s)
    Integer omega_exp;  ///< residue mod p^m

    friend bool operator==(const LinearDescriptor&, const LinearDescriptor&) = default;
    friend std::strong_ordering operator<=>(const LinearDescriptor&, const LinearDescriptor&) = default;
};

/// Degree p^t block-monomial representation attached to the orbit of
/// zeta^(l p^(s-t)); omega_index selects one of the p^(m-t) solutions of
/// omega^(p^(m-t)) = zeta^(l p^(n+s-r-t)).
struct NonlinearDescriptor {
    unsigned long t;      ///< 1 <= t <= s
    Integer l;            ///< canonical orbit representative, unit mod p^(n-s+t)
    Integer omega_index;  ///< 0 <= index < p^(m-t)

    friend bool operator==(const NonlinearDescriptor&, const NonlinearDescriptor&) = default;
    friend std::strong_ordering operator<=>(const NonlinearDescriptor&, const NonlinearDescriptor&) = default;
};

using IrrepDescriptor = std::variant<LinearDescriptor, NonlinearDescriptor>;

std::string descriptor_to_string(const IrrepDescriptor& d);

/// M = max(n, m); every zeta and omega of one group lives in Q(zeta_{p^M}).
unsigned long working_level(const ValidatedPresentation& g);

unsigned long degree_exponent(const IrrepDescriptor& d);  ///< t (0 for linear)
Integer degree(const ValidatedPresentation& g, const IrrepDescriptor& d);

/// Exponent w with omega = zeta_{p^M}^w.
Integer omega_zeta_exponent(const ValidatedPresentation& g, const IrrepDescriptor& d);

/// Conductor exponent lambda of the character's value field Q(zeta_{p^lambda}).
unsigned long conductor_exponent(const ValidatedPresentation& g, const IrrepDescriptor& d);

/// Minimal member of the orbit of unit l under multiplication by 1+p^(n-s)
/// modulo p^(n-s+t).
Integer canonical_orbit_representative(const ValidatedPresentation& g, unsigned long t,
                                       const Integer& l);

/// |Irr(G)| = p^(n+m-s) + p^(n+m-s-1) - p^(n+m-2s-1).
Integer irrep_count(const ValidatedPresentation& g);

/// t -> number of inequivalent irreducibles of degree p^t (closed form).
std::map<unsigned long, Integer> irrep_counts_by_degree(const ValidatedPresentation& g);

/// All inequivalent irreducible descriptors, sorted. Guarded against absurd
/// sizes (throws TooLargeError).
std::vector<IrrepDescriptor> enumerate_irreps(const ValidatedPresentation& g);

struct ComplexIrrep {
    IrrepDescriptor descriptor;
    Matrix<CyclotomicNumber> mat_a;
    Matrix<CyclotomicNumber> mat_b;
    Integer degree;
};

ComplexIrrep build_complex_rep(const ValidatedPresentation& g, const IrrepDescriptor& d);

Matrix<CyclotomicNumber> rep_evaluate(const ComplexIrrep& rep, const GroupElement& x);

/**
 * Closed-form character value:
 *   chi(a^i b^j) = p^t omega^(j/p^t) zeta^(i l p^(s-t))   if p^t | i and p^t | j,
 *                  0                                      otherwise
 * (linear characters: zeta^(lambda p^s i) omega^j).
 */
CyclotomicNumber character_value(const ValidatedPresentation& g, const IrrepDescriptor& d,
                                 const GroupElement& x);

/// Same value as (degree exponent t, exponent of zeta_{p^M}); nullopt when 0.
std::optional<std::pair<unsigned long, Integer>> character_monomial(const ValidatedPresentation& g,
                                                                    const IrrepDescriptor& d,
                                                                    const GroupElement& x);

}  // namespace metaq
