/**
 * @file oracle.hpp
 * @brief Brute-force verification: full group enumeration, conjugacy classes,
 *        character orthogonality, and the (warning-only) numeric embedding.
 *        The trust anchor for every closed form in the library.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "metaq/complex_reps.hpp"
#include "metaq/rational_reps.hpp"

namespace metaq {

inline constexpr std::size_t kDefaultEnumerationBound = std::size_t(1) << 12;

struct EnumeratedGroup {
    MetacyclicParams params;
    std::vector<GroupElement> elements;                       ///< index = i * p^m + j
    std::vector<std::vector<std::size_t>> conjugacy_classes;  ///< partition by element index

    std::size_t index_of(const GroupElement& x) const;
};

/// All p^(n+m) normal forms plus the conjugacy class partition. Throws
/// TooLargeError beyond the bound.
EnumeratedGroup enumerate(const ValidatedPresentation& g,
                          std::size_t bound = kDefaultEnumerationBound);

struct OrthogonalityReport {
    bool ok = true;
    bool columns_checked = false;
    std::size_t row_pairs_checked = 0;
    std::size_t column_pairs_checked = 0;
    std::string failure;  ///< first failing pair, empty when ok
};

/// First orthogonality over all descriptor pairs (sum chi chi'-bar = |G| delta)
/// and, optionally, column orthogonality over conjugacy class representatives.
/// Exact root-of-unity arithmetic throughout.
OrthogonalityReport orthogonality_report(const ValidatedPresentation& g,
                                         std::size_t bound = kDefaultEnumerationBound,
                                         bool check_columns = true);

/// sum of squared degrees over the enumerated descriptors equals |G|.
bool degree_square_identity(const ValidatedPresentation& g,
                            std::size_t bound = kDefaultEnumerationBound);

/// conjugacy class count from enumeration equals the closed form
/// p^(n+m-s) + p^(n+m-s-1) - p^(n+m-2s-1).
bool class_count_identity(const ValidatedPresentation& g,
                          std::size_t bound = kDefaultEnumerationBound);

/// Orbit census recomputed by brute force: orbits of e -> e(1+p^(n-s)) on
/// Z/p^n, grouped by size.
OrbitCensus orbit_census_by_enumeration(const ValidatedPresentation& g,
                                        std::size_t bound = kDefaultEnumerationBound);

/// Non-trivial rational irreducible counts per total degree, derived from the
/// Galois class partition (the enumeration counterpart of the closed form).
std::map<Integer, Integer> rational_counts_from_classes(const ValidatedPresentation& g);

/// Floating-point embedding zeta -> exp(2 pi i / p^k); sanity checks only,
/// never authoritative.
std::complex<double> numeric_value(const CyclotomicNumber& x);

}  // namespace metaq
