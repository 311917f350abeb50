#include <doctest.h>

#include <set>

#include "metaq/oracle.hpp"
#include "metaq/rational_reps.hpp"
#include "metaq/wedderburn.hpp"

using namespace metaq;

namespace {

ValidatedPresentation group(unsigned long p, unsigned long n, unsigned long m, unsigned long r,
                            unsigned long s) {
    return ValidatedPresentation::validate({p, n, m, r, s});
}

std::vector<GroupElement> all_elements(const ValidatedPresentation& g) {
    std::vector<GroupElement> out;
    for (Integer i(0); i < g.a_order(); ++i)
        for (Integer j(0); j < g.b_exponent_modulus(); ++j) out.push_back({i, j});
    return out;
}

bool rational_relations_hold(const ValidatedPresentation& g, const RationalMatrixRep& rep) {
    const auto identity = Matrix<Rational>::identity(rep.mat_a.rows());
    if (rep.mat_a.pow(g.a_order()) != identity) return false;
    if (rep.mat_b.pow(g.b_exponent_modulus()) != rep.mat_a.pow(g.b_power_a_exponent())) return false;
    return rep.mat_b * rep.mat_a == rep.mat_a.pow(g.conjugation_unit()) * rep.mat_b;
}

}  // namespace

TEST_CASE("class sizes equal phi(conductor) and counts match the case analysis") {
    {
        const auto g = group(2, 5, 3, 0, 2);
        std::size_t degree2_classes = 0;
        for (const auto& cls : galois_classes(g)) {
            CHECK(Integer(cls.members.size()) == phi_prime_power(2, cls.conductor_exp));
            if (cls.t == 1) {
                ++degree2_classes;
                CHECK(cls.conductor == 8);
                CHECK(cls.members.size() == 4);
            }
        }
        CHECK(degree2_classes == 4);  // p^(m-t) classes of size phi(p^(n-s))
    }
    {
        // Case 2 of the class census: one class of size phi(p^(m+r-s)) = phi(9) = 6
        const auto g = group(3, 3, 3, 1, 2);
        std::size_t degree9_classes = 0;
        for (const auto& cls : galois_classes(g)) {
            if (cls.t == 2) {
                ++degree9_classes;
                CHECK(cls.members.size() == 6);
                CHECK(cls.conductor == 9);
            }
        }
        CHECK(degree9_classes == 1);
    }
    {
        // trivial character: class of size 1 and conductor 1
        const auto classes = galois_classes(group(2, 3, 1, 0, 1));
        const auto& trivial = classes.front();
        CHECK(trivial.t == 0);
        CHECK(trivial.conductor == 1);
        CHECK(trivial.members.size() == 1);
    }
}

TEST_CASE("class partition covers all descriptors exactly once") {
    for (const auto& params : enumerate_valid_tuples({2, 3}, Integer(256))) {
        const auto g = ValidatedPresentation::validate(params);
        std::set<IrrepDescriptor> seen;
        std::size_t total = 0;
        for (const auto& cls : galois_classes(g)) {
            for (const auto& mem : cls.members) CHECK(seen.insert(mem).second);
            total += cls.members.size();
        }
        CHECK(Integer(total) == irrep_count(g));
    }
}

TEST_CASE("rational irreducible counts (closed forms)") {
    {
        const auto counts = rational_irrep_counts(group(2, 5, 3, 0, 2));
        CHECK(counts.at(Integer(1)) == 3);
        CHECK(counts.at(Integer(2)) == 6);
        CHECK(counts.at(Integer(4)) == 12);
        CHECK(counts.at(Integer(8)) == 4);
        CHECK(counts.at(Integer(16)) == 2);
        CHECK(counts.size() == 5);
    }
    {
        // C2 x C2: three nontrivial linear rational characters
        const auto counts = rational_irrep_counts(group(2, 1, 1, 0, 0));
        CHECK(counts.at(Integer(1)) == 3);
        CHECK(counts.size() == 1);
    }
    {
        // multiset of SmallGroup(729, 92): Q + 4Q(z3) + 3Q(z9) + 3Q(z27)
        //   + 3M3(Q(z3)) + 2M3(Q(z9)) + M9(Q(z9))
        const auto counts = rational_irrep_counts(group(3, 3, 3, 1, 2));
        CHECK(counts.at(Integer(2)) == 4);
        CHECK(counts.at(Integer(6)) == 6);    // 3Q(z9) and 3M3(Q(z3))
        CHECK(counts.at(Integer(18)) == 5);   // 3Q(z27) and 2M3(Q(z9))
        CHECK(counts.at(Integer(54)) == 1);   // M9(Q(z9))
        CHECK(counts.size() == 4);
    }
}

TEST_CASE("closed-form counts agree with the Galois class partition") {
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(729))) {
        const auto g = ValidatedPresentation::validate(params);
        CHECK(rational_irrep_counts(g) == rational_counts_from_classes(g));
        Integer nontrivial(0);
        for (const auto& [deg, count] : rational_irrep_counts(g)) nontrivial += count;
        CHECK(Integer(galois_classes(g).size()) == nontrivial + 1);
    }
}

TEST_CASE("omega characters are rational with the right identity value") {
    for (const auto& params : enumerate_valid_tuples({2, 3}, Integer(128))) {
        const auto g = ValidatedPresentation::validate(params);
        for (const auto& cls : galois_classes(g)) {
            const auto omega = omega_character(g, cls);
            CHECK(omega.value(g.identity()) == Rational(cls.rational_degree));
            if (cls.t == 0 && cls.conductor_exp == 0) {
                for (const auto& x : all_elements(g)) CHECK(omega.value(x) == 1);
            }
        }
    }
}

TEST_CASE("degree accounting: sum of degree^2 phi(conductor) is |G|") {
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(729))) {
        const auto g = ValidatedPresentation::validate(params);
        Integer total(0);
        for (const auto& cls : galois_classes(g))
            total += cls.degree * cls.degree * phi_prime_power(params.p, cls.conductor_exp);
        CHECK(total == g.group_order());
    }
}

TEST_CASE("faithful classification") {
    CHECK(classify_faithful(group(2, 5, 4, 2, 3)) == FaithfulKind::G1);
    CHECK(classify_faithful(group(3, 3, 2, 0, 2)) == FaithfulKind::G2);
    CHECK(classify_faithful(group(2, 5, 3, 0, 2)) == FaithfulKind::NotFaithful);

    // oracle: faithful iff the center is cyclic, by enumeration
    for (const auto& params : enumerate_valid_tuples({2, 3}, Integer(512))) {
        const auto g = ValidatedPresentation::validate(params);
        std::vector<GroupElement> center;
        for (const auto& x : all_elements(g))
            if (g.conjugate(x, g.generator_a()) == x && g.conjugate(x, g.generator_b()) == x)
                center.push_back(x);
        Integer max_order(1);
        for (const auto& z : center) {
            const Integer order = g.element_order(z);
            if (order > max_order) max_order = order;
        }
        const bool cyclic_center = max_order == Integer(center.size());
        CHECK(cyclic_center == (classify_faithful(g) != FaithfulKind::NotFaithful));
    }
}

TEST_CASE("required pair for the worked G1 example (m < 2s)") {
    const auto g = group(2, 5, 4, 2, 3);
    const auto classes = galois_classes(g);
    const auto& faithful = classes.back();
    REQUIRE(faithful.t == 3);
    const auto pair = required_pair(g, faithful);
    CHECK(pair.k_cong == 794728597);
    CHECK(pair.l_cong == 4069);
    CHECK(pair.mu == 3);
    REQUIRE(pair.subgroup_gens.size() == 2);
    CHECK(pair.subgroup_gens[0] == g.element(4, 0));  // a^4
    CHECK(pair.subgroup_gens[1] == g.element(3, 2));  // a^3 b^2
    CHECK(pair.psi_conductor_exp == 3);               // Q(psi) = Q(zeta_8)
    CHECK(pair.induce_along_b);
}

TEST_CASE("required pair for a G2 group") {
    const auto g = group(3, 3, 2, 0, 2);
    const auto classes = galois_classes(g);
    const auto& faithful = classes.back();
    REQUIRE(faithful.t == 2);
    const auto pair = required_pair(g, faithful);
    REQUIRE(pair.subgroup_gens.size() == 2);
    CHECK(pair.subgroup_gens[0] == g.element(9, 0));  // a^9
    CHECK(pair.subgroup_gens[1] == g.generator_b());
    CHECK(pair.psi_exponents[0] == 1);  // psi(a^9) = zeta_3
    CHECK(pair.psi_exponents[1] == 0);  // psi(b) = 1
    CHECK(pair.psi_conductor_exp == 1);
    CHECK_FALSE(pair.induce_along_b);  // transversal {a^i}
}

TEST_CASE("required pair for a G1 group with m >= 2s") {
    const auto g = group(2, 5, 6, 2, 3);  // order 2048, m = 2s
    const auto classes = galois_classes(g);
    const auto& faithful = classes.back();
    REQUIRE(faithful.t == 3);
    const auto pair = required_pair(g, faithful);
    REQUIRE(pair.subgroup_gens.size() == 2);
    CHECK(pair.subgroup_gens[0] == g.generator_a());
    CHECK(pair.subgroup_gens[1] == g.element(0, 8));  // b^(p^s)
    CHECK(pair.psi_conductor_exp == 5);               // zeta_(p^(n+m-2s)) = zeta_32
    CHECK(pair.psi_exponents[0] == 1);                // psi(a) = zeta_32 (c = n here)
    CHECK(pair.psi_exponents[1] == 1);                // psi(b^8) = zeta_32
}

TEST_CASE("induced character equals the class representative exactly") {
    // one group of each faithful shape: G1 with m < 2s, G2, G1 with m >= 2s
    // (both parities of p)
    for (const auto params : {MetacyclicParams{2, 5, 4, 2, 3}, MetacyclicParams{3, 3, 2, 0, 2},
                              MetacyclicParams{2, 5, 6, 2, 3}, MetacyclicParams{3, 3, 4, 1, 2},
                              MetacyclicParams{2, 4, 2, 0, 2}}) {
        const auto g = ValidatedPresentation::validate(params);
        REQUIRE(classify_faithful(g) != FaithfulKind::NotFaithful);
        const auto classes = galois_classes(g);
        const auto& faithful = classes.back();
        const auto pair = required_pair(g, faithful);
        for (const auto& x : all_elements(g)) {
            CHECK(induced_character_value(g, pair, x) ==
                  character_value(g, faithful.representative(), x));
        }
    }
}

TEST_CASE("companion matrices") {
    {
        const auto c8 = companion_rational_rep(2, 3);
        REQUIRE(c8.rows() == 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(c8(i, j) == (j == i + 1 ? 1 : 0));
        CHECK(c8(3, 0) == -1);
        CHECK(c8(3, 1) == 0);
        CHECK(c8(3, 2) == 0);
        CHECK(c8(3, 3) == 0);
    }
    {
        const auto c2 = companion_rational_rep(2, 1);
        REQUIRE(c2.rows() == 1);
        CHECK(c2(0, 0) == -1);
    }
    {
        const auto c3 = companion_rational_rep(3, 1);
        REQUIRE(c3.rows() == 2);
        CHECK(c3(0, 0) == 0);
        CHECK(c3(0, 1) == 1);
        CHECK(c3(1, 0) == -1);
        CHECK(c3(1, 1) == -1);
    }
    // the cached power table agrees with the direct construction and with
    // genuine matrix powers
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        for (unsigned long c = 1; prime_power(p, c) <= 27; ++c) {
            const CompanionTable table(p, c);
            const auto direct = companion_rational_rep(p, c);
            CHECK(table.power(Integer(1)) == direct);
            Matrix<Rational> acc = Matrix<Rational>::identity(table.dimension());
            for (unsigned long e = 0; e < table.order(); ++e) {
                CHECK(table.power(Integer(e)) == acc);
                CHECK(table.trace(Integer(e)) == acc.trace());
                acc = acc * direct;
            }
            CHECK(acc == Matrix<Rational>::identity(table.dimension()));  // C^(p^c) = I
        }
    }
}

TEST_CASE("induction for the worked example: 32x32 integral representation") {
    const auto g = group(2, 5, 4, 2, 3);
    const auto classes = galois_classes(g);
    const auto& faithful = classes.back();
    const auto rep = induce_rational_rep(g, required_pair(g, faithful));
    CHECK(rep.degree == 32);
    REQUIRE(rep.mat_a.rows() == 32);
    REQUIRE(rep.mat_b.rows() == 32);
    for (const auto* mat : {&rep.mat_a, &rep.mat_b})
        for (std::size_t i = 0; i < mat->rows(); ++i)
            for (std::size_t j = 0; j < mat->cols(); ++j) {
                CHECK((*mat)(i, j).get_den() == 1);  // integral
                CHECK(abs((*mat)(i, j).get_num()) <= 1);
            }
    CHECK(rational_relations_hold(g, rep));

    // Psi^G(b) is the block cyclic shift: identity blocks on the
    // superdiagonal, the companion power P in the lower-left corner
    for (std::size_t i = 0; i + 1 < 8; ++i) CHECK(rep.b_form.perm[i] == i + 1);
    CHECK(rep.b_form.perm[7] == 0);
    for (std::size_t i = 0; i + 1 < 8; ++i) CHECK(rep.b_form.exps[i] == 0);
    CHECK(rep.b_form.exps[7] == 1);  // the corner block is P itself

    // trace equals the rational character on every element
    const auto omega = omega_character(g, faithful);
    for (const auto& x : all_elements(g)) CHECK(rep_trace_at(rep, x) == omega.value(x));

    // dense evaluation agrees with the block form on a few elements
    for (const auto& x : {g.element(1, 0), g.element(3, 5), g.element(17, 11)}) {
        const auto dense = rep.mat_a.pow(x.i) * rep.mat_b.pow(x.j);
        CHECK(dense == rep_evaluate(rep, x));
        CHECK(dense.trace() == rep_trace_at(rep, x));
    }
}

TEST_CASE("kernels by enumeration") {
    const auto g = group(2, 5, 3, 0, 2);
    const auto classes = galois_classes(g);
    // trivial class: kernel is all of G
    CHECK(kernel_of(g, classes.front()).size() == 256);
    // a faithful group's faithful class has trivial kernel
    const auto g1 = group(2, 5, 4, 2, 3);
    const auto classes1 = galois_classes(g1);
    CHECK(kernel_of(g1, classes1.back()).size() == 1);
}

TEST_CASE("quotient of a degree-2 class is faithful metacyclic") {
    const auto g = group(2, 5, 3, 0, 2);
    for (const auto& cls : galois_classes(g)) {
        if (cls.t != 1 || cls.conductor != 8) continue;
        const auto kernel = kernel_of(g, cls);
        const auto qd = quotient_params(g, kernel);
        CHECK(classify_faithful(qd.quotient) != FaithfulKind::NotFaithful);
        CHECK(qd.quotient.group_order() * Integer(kernel.size()) == g.group_order());
        // the quotient map is a homomorphism on the generators
        const auto& q = qd.quotient;
        CHECK(q.power(qd.a_image, g.a_order()) == q.identity());
        CHECK(q.power(qd.b_image, g.b_exponent_modulus()) ==
              q.power(qd.a_image, g.b_power_a_exponent()));
        CHECK(q.conjugate(qd.a_image, qd.b_image) == q.power(qd.a_image, g.conjugation_unit()));
    }
}

TEST_CASE("rational representations afford the rational characters") {
    {
        // trivial class: 1x1 identity
        const auto g = group(2, 5, 3, 0, 2);
        const auto rep = rational_rep_for(g, galois_classes(g).front());
        CHECK(rep.degree == 1);
        CHECK(rep.mat_a == Matrix<Rational>::identity(1));
        CHECK(rep.mat_b == Matrix<Rational>::identity(1));
    }
    // every class of (2,4,2,0,1): trace matches omega on all 64 elements
    for (const auto params :
         {MetacyclicParams{2, 4, 2, 0, 1}, MetacyclicParams{3, 2, 2, 0, 1},
          MetacyclicParams{2, 5, 4, 2, 3}, MetacyclicParams{2, 4, 3, 0, 2}}) {
        const auto g = ValidatedPresentation::validate(params);
        const auto elements = all_elements(g);
        for (const auto& cls : galois_classes(g)) {
            const auto rep = rational_rep_for(g, cls);
            CHECK(rep.degree == cls.rational_degree);
            CHECK(rational_relations_hold(g, rep));
            const auto omega = omega_character(g, cls);
            for (const auto& x : elements) CHECK(rep_trace_at(rep, x) == omega.value(x));
        }
    }
}
