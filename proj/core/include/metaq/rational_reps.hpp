/**
 * @file rational_reps.hpp
 * @brief Rational representation theory of ordinary metacyclic p-groups:
 *        Galois conjugacy classes of complex irreducibles, closed-form counts
 *        of rational irreducibles by degree, rational characters Omega(chi),
 *        the faithful-group classification, required pairs (H, psi), and
 *        explicit rational matrix representations by companion-matrix
 *        induction (with quotient lifting for non-faithful classes).
 */
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "metaq/complex_reps.hpp"

namespace metaq {

struct GaloisClass {
    std::vector<IrrepDescriptor> members;  ///< sorted; front() is the class representative
    unsigned long t = 0;                   ///< complex degree exponent
    unsigned long conductor_exp = 0;       ///< lambda with Q(chi) = Q(zeta_{p^lambda})
    Integer conductor;                     ///< p^lambda
    Integer degree;                        ///< p^t
    Integer rational_degree;               ///< p^t phi(p^lambda)

    const IrrepDescriptor& representative() const { return members.front(); }
};

/// The conjugate descriptor of d under zeta -> zeta^u, u a unit mod p^M.
IrrepDescriptor galois_conjugate_descriptor(const ValidatedPresentation& g,
                                            const IrrepDescriptor& d, const Integer& u);

/// Partition of enumerate_irreps(g) into Galois conjugacy classes, sorted by
/// (degree, conductor, representative). Class sizes equal phi(conductor).
std::vector<GaloisClass> galois_classes(const ValidatedPresentation& g);

/// Closed-form counts of non-trivial irreducible rational representations,
/// keyed by total degree (phi(p^lambda), possibly p^t phi(p^lambda)).
std::map<Integer, Integer> rational_irrep_counts(const ValidatedPresentation& g);

/// Omega(chi) = sum of the Galois conjugates of chi; all values rational.
class RationalCharacter {
public:
    RationalCharacter(const ValidatedPresentation& g, GaloisClass cls,
                      std::vector<Rational> values);

    const GaloisClass& galois_class() const { return cls_; }
    const Rational& value(const GroupElement& x) const;

private:
    GaloisClass cls_;
    std::vector<Rational> values_;  // indexed by i * p^m + j
    unsigned long pm_;
};

RationalCharacter omega_character(const ValidatedPresentation& g, const GaloisClass& cls);

enum class FaithfulKind { G1, G2, NotFaithful };

/// G1: r = n-s >= 1 and s < m (so b^(p^m) = a^(p^s)); G2: s = m (split, so
/// b^(p^s) = 1); otherwise the center is not cyclic and G is not faithful.
FaithfulKind classify_faithful(const ValidatedPresentation& g);

/**
 * An abelian subgroup H with a linear character psi such that psi^G is the
 * faithful class representative and Q(psi) = Q(chi). psi is recorded by its
 * root-of-unity exponents on the generators: psi(gen_i) = zeta_{p^c}^(e_i).
 */
struct RequiredPair {
    std::vector<GroupElement> subgroup_gens;
    std::vector<Integer> psi_exponents;
    unsigned long psi_conductor_exp = 0;
    bool induce_along_b = true;  ///< transversal {b^i} for G1, {a^i} for G2
    Integer mu, k_cong, l_cong;  ///< G1 with m < 2s only; zero otherwise
};

RequiredPair required_pair(const ValidatedPresentation& g, const GaloisClass& cls);

/// psi^G(x) = sum_i psi°(x_i x x_i^-1) over the pair's transversal.
CyclotomicNumber induced_character_value(const ValidatedPresentation& g, const RequiredPair& pair,
                                         const GroupElement& x);

/// Companion matrix of Phi_{p^k} in the superdiagonal/bottom-row layout
/// (row i of the e-th power carries the coefficients of zeta^(e+i)).
Matrix<Rational> companion_rational_rep(unsigned long p, unsigned long k);

/// Cached powers and traces of the Phi_{p^c} companion matrix.
class CompanionTable {
public:
    CompanionTable(unsigned long p, unsigned long c);

    unsigned long prime() const { return p_; }
    unsigned long conductor_exp() const { return c_; }
    unsigned long order() const { return order_; }      ///< p^c
    std::size_t dimension() const { return dim_; }      ///< phi(p^c)
    const Matrix<Rational>& power(const Integer& e) const;
    const Rational& trace(const Integer& e) const;

private:
    unsigned long p_, c_, order_;
    std::size_t dim_;
    std::vector<Matrix<Rational>> powers_;
    std::vector<Rational> traces_;
};

/// Block-monomial encoding: block row i holds C^(exps[i]) in block column
/// perm[i]. The dense matrices are materialized from this form.
struct BlockMonomialForm {
    std::vector<std::size_t> perm;
    std::vector<Integer> exps;
};

struct RationalMatrixRep {
    Matrix<Rational> mat_a;
    Matrix<Rational> mat_b;
    Integer degree;
    std::shared_ptr<const CompanionTable> companion;
    BlockMonomialForm a_form, b_form;
};

RationalMatrixRep induce_rational_rep(const ValidatedPresentation& g, const RequiredPair& pair);

/// Exact trace of the representation at a^i b^j via the block form.
Rational rep_trace_at(const RationalMatrixRep& rep, const GroupElement& x);

/// Dense matrix of the representation at a^i b^j.
Matrix<Rational> rep_evaluate(const RationalMatrixRep& rep, const GroupElement& x);

/// ker(chi) = { g : chi(g) = chi(1) }, by enumeration (desk scale).
std::vector<GroupElement> kernel_of(const ValidatedPresentation& g, const GaloisClass& cls);

/// G/K in uniquely reduced form together with the images of a and b under the
/// quotient map, expressed in the quotient's canonical generators.
struct QuotientData {
    ValidatedPresentation quotient;
    GroupElement a_image;
    GroupElement b_image;
};

QuotientData quotient_params(const ValidatedPresentation& g,
                             const std::vector<GroupElement>& kernel);

/// The irreducible rational matrix representation affording Omega(chi):
/// linear classes via the companion construction on G itself, nonlinear ones
/// via kernel -> quotient -> required pair -> induction -> lift.
RationalMatrixRep rational_rep_for(const ValidatedPresentation& g, const GaloisClass& cls);

}  // namespace metaq
