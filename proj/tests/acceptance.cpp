// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact (zero tolerance); the stated wall-clock
// budgets are asserted as part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "metaq/cli.hpp"
#include "metaq/oracle.hpp"
#include "metaq/wedderburn.hpp"

using namespace metaq;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> check;
};

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

// ---- criterion 1: the five worked decompositions, exact multisets ----

bool golden_decompositions(std::string& detail) {
    const std::vector<std::pair<MetacyclicParams, std::string>> golden = {
        {{2, 5, 3, 0, 2}, "4 Q + 6 Q(z4) + 12 Q(z8) + 4 M2(Q(z8)) + 2 M4(Q(z8))"},
        {{2, 4, 4, 0, 2},
         "4 Q + 6 Q(z4) + 4 Q(z8) + 4 Q(z16) + 4 M2(Q(z4)) + 2 M2(Q(z8)) + 4 M4(Q(z4))"},
        {{2, 3, 5, 0, 1},
         "4 Q + 6 Q(z4) + 4 Q(z8) + 4 Q(z16) + 4 Q(z32) + 4 M2(Q(z4)) + 2 M2(Q(z8)) + 2 "
         "M2(Q(z16))"},
        {{2, 4, 4, 1, 2},
         "4 Q + 6 Q(z4) + 4 Q(z8) + 4 Q(z16) + 4 M2(Q(z4)) + 2 M2(Q(z8)) + 2 M4(Q(z8))"},
        {{3, 3, 3, 1, 2},
         "1 Q + 4 Q(z3) + 3 Q(z9) + 3 Q(z27) + 3 M3(Q(z3)) + 2 M3(Q(z9)) + 1 M9(Q(z9))"},
    };
    for (const auto& [params, expected] : golden) {
        const auto start = Clock::now();
        const std::string got =
            decomposition_to_text(decompose(ValidatedPresentation::validate(params)));
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (got != expected) {
            detail = params.to_string() + " produced \"" + got + "\"";
            return false;
        }
        if (seconds >= 1.0) {
            detail = params.to_string() + " took " + std::to_string(seconds) + " s";
            return false;
        }
    }
    return true;
}

// ---- criterion 2: dimension identity over the full sweep ----

bool dimension_identity(std::string& detail) {
    std::size_t count = 0;
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(6561))) {
        const auto d = decompose(ValidatedPresentation::validate(params));
        if (!dimension_check(d)) {
            detail = "dimension mismatch for " + params.to_string();
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
}

// ---- criterion 3: formula == enumeration ----

bool formula_matches_enumeration(std::string& detail) {
    std::size_t count = 0;
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(4096))) {
        const auto report = cross_check(ValidatedPresentation::validate(params));
        if (!report.equal) {
            detail = report.details;
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
}

// ---- criterion 4: character-theory oracle ----

bool character_oracle(std::string& detail) {
    std::size_t count = 0;
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(1024))) {
        const auto g = ValidatedPresentation::validate(params);
        if (!degree_square_identity(g)) {
            detail = "degree squares fail for " + params.to_string();
            return false;
        }
        if (!class_count_identity(g)) {
            detail = "class count fails for " + params.to_string();
            return false;
        }
        const bool columns = g.group_order() <= 512;
        const auto report = orthogonality_report(g, kDefaultEnumerationBound, columns);
        if (!report.ok) {
            detail = params.to_string() + ": " + report.failure;
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
}

// ---- criterion 5: representation relations and traces ----

bool complex_relations_hold(const ValidatedPresentation& g) {
    for (const auto& d : enumerate_irreps(g)) {
        const auto rep = build_complex_rep(g, d);
        const auto identity = Matrix<CyclotomicNumber>::identity(rep.mat_a.rows());
        if (rep.mat_a.pow(g.a_order()) != identity) return false;
        if (rep.mat_b.pow(g.b_exponent_modulus()) != rep.mat_a.pow(g.b_power_a_exponent()))
            return false;
        if (rep.mat_b * rep.mat_a != rep.mat_a.pow(g.conjugation_unit()) * rep.mat_b) return false;
    }
    return true;
}

bool rational_relations_hold(const ValidatedPresentation& g, const RationalMatrixRep& rep) {
    const auto identity = Matrix<Rational>::identity(rep.mat_a.rows());
    if (rep.mat_a.pow(g.a_order()) != identity) return false;
    if (rep.mat_b.pow(g.b_exponent_modulus()) != rep.mat_a.pow(g.b_power_a_exponent())) return false;
    return rep.mat_b * rep.mat_a == rep.mat_a.pow(g.conjugation_unit()) * rep.mat_b;
}

bool representation_relations(std::string& detail) {
    std::size_t groups = 0, reps = 0;
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(512))) {
        const auto g = ValidatedPresentation::validate(params);
        if (!complex_relations_hold(g)) {
            detail = "complex relations fail for " + params.to_string();
            return false;
        }
        const auto elements = all_elements(g);
        for (const auto& cls : galois_classes(g)) {
            const auto rep = rational_rep_for(g, cls);
            if (rep.degree != cls.rational_degree || !rational_relations_hold(g, rep)) {
                detail = "rational relations fail for " + params.to_string();
                return false;
            }
            const auto omega = omega_character(g, cls);
            for (const auto& x : elements) {
                if (rep_trace_at(rep, x) != omega.value(x)) {
                    detail = "trace differs from Omega(chi) for " + params.to_string();
                    return false;
                }
            }
            ++reps;
        }
        ++groups;
    }
    detail = std::to_string(groups) + " groups, " + std::to_string(reps) + " rational reps";
    return true;
}

// ---- criterion 6: the worked 32x32 example ----

bool worked_example(std::string& detail) {
    const auto g = group(2, 5, 4, 2, 3);
    const auto classes = galois_classes(g);
    const auto& faithful = classes.back();
    if (faithful.t != 3 || faithful.conductor != 8) {
        detail = "faithful class not found";
        return false;
    }
    const auto pair = required_pair(g, faithful);
    if (pair.mu != 3 || pair.k_cong != 794728597 || pair.l_cong != 4069) {
        detail = "mu/k/l = " + pair.mu.get_str() + "/" + pair.k_cong.get_str() + "/" +
                 pair.l_cong.get_str();
        return false;
    }
    const auto rep = induce_rational_rep(g, pair);
    if (rep.degree != 32 || rep.mat_a.rows() != 32) {
        detail = "degree " + rep.degree.get_str();
        return false;
    }
    for (const auto* mat : {&rep.mat_a, &rep.mat_b})
        for (std::size_t i = 0; i < 32; ++i)
            for (std::size_t j = 0; j < 32; ++j)
                if ((*mat)(i, j).get_den() != 1) {
                    detail = "non-integral entry";
                    return false;
                }
    if (!rational_relations_hold(g, rep)) {
        detail = "relations fail";
        return false;
    }
    const auto omega = omega_character(g, faithful);
    for (const auto& x : all_elements(g))
        if (rep_trace_at(rep, x) != omega.value(x)) {
            detail = "trace differs from Omega(chi)";
            return false;
        }
    return true;
}

// ---- criterion 7: rational counts vs class enumeration ----

bool rational_count_agreement(std::string& detail) {
    std::size_t count = 0;
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(4096))) {
        const auto g = ValidatedPresentation::validate(params);
        if (rational_irrep_counts(g) != rational_counts_from_classes(g)) {
            detail = "count mismatch for " + params.to_string();
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
}

// ---- criterion 8: decomposition separates isomorphism classes ----

bool decompositions_separate(std::string& detail) {
    std::set<std::string> seen;
    std::size_t count = 0;
    for (const auto& params : enumerate_valid_tuples({2, 3, 5}, Integer(6561))) {
        const auto text = decomposition_to_text(decompose(ValidatedPresentation::validate(params)));
        if (!seen.insert(text).second) {
            detail = "duplicate decomposition at " + params.to_string();
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " pairwise distinct";
    return true;
}

// ---- criterion 9: number-theory identities ----

bool number_theory_identities(std::string& detail) {
    // closed-form orders vs modular exponentiation, alpha + beta <= 12
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        for (unsigned long alpha = 1; alpha <= 11; ++alpha) {
            for (unsigned long beta = 0; alpha + beta <= 12; ++beta) {
                if (p == 2 && alpha == 1 && beta >= 2) continue;  // excluded 2-adic family
                const Integer x = Integer(1) + prime_power(p, alpha);
                if (order_one_plus(p, alpha, beta) !=
                    multiplicative_order_mod_prime_power(x, p, alpha + beta)) {
                    detail = "order mismatch at p=" + std::to_string(p) +
                             " alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta);
                    return false;
                }
            }
        }
    }
    // vanishing sums, p^alpha <= 1024, all in-range (alpha, beta, gamma)
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        for (unsigned long alpha = 2; prime_power(p, alpha) <= 1024; ++alpha) {
            const Integer pa = prime_power(p, alpha);
            const unsigned long pa_ul = to_ulong(pa);
            for (unsigned long beta = 1; beta < alpha; ++beta) {
                const Integer base = Integer(1) + prime_power(p, alpha - beta);
                for (unsigned long gamma = 1; gamma < pa_ul; ++gamma) {
                    const unsigned long delta = valuation(Integer(gamma), p);
                    if (delta >= beta) continue;
                    if (p == 2 && alpha - beta == 1 && beta - delta >= 2) continue;
                    std::vector<Rational> counts(pa_ul, Rational(0));
                    Integer e = mod_floor(Integer(gamma), pa);
                    for (Integer i(0); i < prime_power(p, beta); ++i) {
                        counts[to_ulong(e)] += 1;
                        e = mod_floor(e * base, pa);
                    }
                    if (!CyclotomicNumber::from_coefficients(p, alpha, std::move(counts))
                             .is_zero()) {
                        detail = "vanishing sum fails at p=" + std::to_string(p) +
                                 " alpha=" + std::to_string(alpha) +
                                 " beta=" + std::to_string(beta) +
                                 " gamma=" + std::to_string(gamma);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden decompositions (five worked groups)", 5.0, golden_decompositions},
        {"dimension identity, sweep p in {2,3,5}, order <= 6561", 10.0, dimension_identity},
        {"formula == enumeration (cross-check), order <= 4096", 120.0, formula_matches_enumeration},
        {"character oracle: degrees, orthogonality, class counts, order <= 1024", 300.0,
         character_oracle},
        {"representation relations and Omega traces, order <= 512", 120.0,
         representation_relations},
        {"worked 32x32 example: mu=3, k=794728597, l=4069", 5.0, worked_example},
        {"rational counts == class enumeration, order <= 4096", 60.0, rational_count_agreement},
        {"decompositions pairwise distinct, order <= 6561", 30.0, decompositions_separate},
        {"number theory: orders and vanishing sums", 10.0, number_theory_identities},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (ok && seconds > criteria[i].budget_seconds) {
            ok = false;
            detail = "over budget: " + std::to_string(seconds) + " s";
        }
        std::printf("[%s] %zu. %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), seconds, detail.empty() ? "" : "; ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
