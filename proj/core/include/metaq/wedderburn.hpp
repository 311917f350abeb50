/**
 * @file wedderburn.hpp
 * @brief Wedderburn decomposition of the rational group algebra QG as a
 *        canonical multiset of simple components M_{p^t}(Q(zeta_{p^lambda})),
 *        computed by the closed combinatorial formula, cross-checked against
 *        the Galois-class enumeration, and comparable across groups.
 */
#pragma once

#include <string>
#include <vector>

#include "metaq/rational_reps.hpp"

namespace metaq {

struct WedderburnComponent {
    Integer multiplicity;
    Integer matrix_size;  ///< p^t
    Integer conductor;    ///< p^lambda; <= 2 canonicalized to 1 (the rational field)

    friend bool operator==(const WedderburnComponent&, const WedderburnComponent&) = default;
};

struct Decomposition {
    MetacyclicParams params;
    std::vector<WedderburnComponent> components;  ///< sorted by (matrix_size, conductor)

    Integer dimension() const;  ///< sum multiplicity * size^2 * phi(conductor)
    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.components == b.components;
    }
};

/// The closed-form decomposition (three cases: n-s >= m; else k = m-(n-s)
/// against s-r).
Decomposition decompose(const ValidatedPresentation& g);

/// Artin-Wedderburn dimension accounting: dimension() == p^(n+m).
bool dimension_check(const Decomposition& d);

struct CrossCheckReport {
    bool equal = false;
    std::string details;  ///< empty when equal
    Decomposition formula;
    Decomposition from_classes;
};

/// Rebuilds the decomposition independently from galois_classes (one
/// M_{chi(1)}(Q(zeta_conductor)) per class) and compares multisets.
CrossCheckReport cross_check(const ValidatedPresentation& g);

enum class CompareResult { Equal, Distinct };

/// Equal iff the canonical decompositions are identical multisets.
CompareResult compare(const ValidatedPresentation& g1, const ValidatedPresentation& g2);

}  // namespace metaq
