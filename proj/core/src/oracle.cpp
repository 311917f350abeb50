#include "metaq/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

namespace metaq {

namespace {

void require_bound(const ValidatedPresentation& g, std::size_t bound, const char* what) {
    if (g.group_order() > static_cast<unsigned long>(bound))
        throw TooLargeError(std::string(what) + ": |G| = " + g.group_order().get_str() +
                            " exceeds bound " + std::to_string(bound));
}

// compact character value: scale p^t, exponent of zeta_{p^M}; t < 0 means 0
struct CompactValue {
    long t = -1;
    long exp = 0;
};

std::vector<std::vector<CompactValue>> character_table(const ValidatedPresentation& g,
                                                       const std::vector<IrrepDescriptor>& irreps,
                                                       const std::vector<GroupElement>& at) {
    std::vector<std::vector<CompactValue>> table(irreps.size());
    for (std::size_t d = 0; d < irreps.size(); ++d) {
        table[d].resize(at.size());
        for (std::size_t c = 0; c < at.size(); ++c) {
            const auto mono = character_monomial(g, irreps[d], at[c]);
            if (mono)
                table[d][c] = {static_cast<long>(mono->first), static_cast<long>(to_ulong(mono->second))};
        }
    }
    return table;
}

// exact zero test of sum counts[e] zeta^e after reduction mod Phi_{p^M};
// returns the reduced constant term, requiring all other coefficients zero
bool reduced_is_constant(std::vector<long long>& counts, unsigned long p, unsigned long pM,
                         long long expected_constant) {
    const unsigned long pk1 = pM / p;
    const unsigned long phi = pM - pk1;
    for (unsigned long e = phi; e < pM; ++e) {
        const long long c = counts[e];
        if (c == 0) continue;
        counts[e] = 0;
        const unsigned long d = e - phi;
        for (unsigned long i = 0; i + 1 < p; ++i) counts[i * pk1 + d] -= c;
    }
    bool ok = counts[0] == expected_constant;
    for (unsigned long e = 1; e < phi && ok; ++e) ok = counts[e] == 0;
    return ok;
}

}  // namespace

std::size_t EnumeratedGroup::index_of(const GroupElement& x) const {
    const unsigned long pm = to_ulong(prime_power(params.p, params.m));
    return to_ulong(x.i) * pm + to_ulong(x.j);
}

EnumeratedGroup enumerate(const ValidatedPresentation& g, std::size_t bound) {
    require_bound(g, bound, "enumerate");
    const unsigned long pn = to_ulong(g.a_order());
    const unsigned long pm = to_ulong(g.b_exponent_modulus());
    EnumeratedGroup out;
    out.params = g.params();
    out.elements.reserve(static_cast<std::size_t>(pn) * pm);
    for (unsigned long i = 0; i < pn; ++i)
        for (unsigned long j = 0; j < pm; ++j) out.elements.push_back({Integer(i), Integer(j)});

    // conjugation maps by the two generators, as index permutations
    const std::size_t order = out.elements.size();
    std::vector<std::size_t> conj_a(order), conj_b(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
        conj_a[idx] = out.index_of(g.conjugate(out.elements[idx], g.generator_a()));
        conj_b[idx] = out.index_of(g.conjugate(out.elements[idx], g.generator_b()));
    }

    std::vector<bool> seen(order, false);
    for (std::size_t start = 0; start < order; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cls{start};
        seen[start] = true;
        std::vector<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t cur = queue.back();
            queue.pop_back();
            for (std::size_t next : {conj_a[cur], conj_b[cur]}) {
                if (!seen[next]) {
                    seen[next] = true;
                    cls.push_back(next);
                    queue.push_back(next);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        out.conjugacy_classes.push_back(std::move(cls));
    }
    return out;
}

OrthogonalityReport orthogonality_report(const ValidatedPresentation& g, std::size_t bound,
                                         bool check_columns) {
    require_bound(g, bound, "orthogonality_report");
    const auto& pr = g.params();
    const EnumeratedGroup en = enumerate(g, bound);
    const std::vector<IrrepDescriptor> irreps = enumerate_irreps(g);
    const unsigned long M = working_level(g);
    const unsigned long pM = to_ulong(prime_power(pr.p, M));
    const long long order =
        static_cast<long long>(to_ulong(g.group_order()));

    std::vector<GroupElement> reps;
    std::vector<long long> sizes;
    reps.reserve(en.conjugacy_classes.size());
    for (const auto& cls : en.conjugacy_classes) {
        reps.push_back(en.elements[cls.front()]);
        sizes.push_back(static_cast<long long>(cls.size()));
    }
    const auto table = character_table(g, irreps, reps);

    OrthogonalityReport report;
    std::vector<long long> counts(pM, 0);

    // first orthogonality: sum_g chi(g) conj(chi'(g)) = |G| delta
    for (std::size_t d1 = 0; d1 < irreps.size() && report.ok; ++d1) {
        for (std::size_t d2 = d1; d2 < irreps.size() && report.ok; ++d2) {
            long long scale = 1;  // p^(t1+t2)
            for (unsigned long k = 0; k < degree_exponent(irreps[d1]) + degree_exponent(irreps[d2]); ++k)
                scale *= static_cast<long long>(pr.p);
            for (std::size_t c = 0; c < reps.size(); ++c) {
                const CompactValue& v1 = table[d1][c];
                const CompactValue& v2 = table[d2][c];
                if (v1.t < 0 || v2.t < 0) continue;
                const unsigned long e = (v1.exp + pM - v2.exp) % pM;
                counts[e] += sizes[c];
            }
            const long long expected = d1 == d2 ? order / scale : 0;
            if (!reduced_is_constant(counts, pr.p, pM, expected)) {
                report.ok = false;
                report.failure = "first orthogonality fails for " +
                                 descriptor_to_string(irreps[d1]) + " vs " +
                                 descriptor_to_string(irreps[d2]);
            }
            std::fill(counts.begin(), counts.end(), 0);
            ++report.row_pairs_checked;
        }
    }

    if (check_columns && report.ok) {
        report.columns_checked = true;
        // column orthogonality: sum_chi chi(g) conj(chi(h)) = |C_G(g)| delta
        for (std::size_t c1 = 0; c1 < reps.size() && report.ok; ++c1) {
            for (std::size_t c2 = c1; c2 < reps.size() && report.ok; ++c2) {
                for (std::size_t d = 0; d < irreps.size(); ++d) {
                    const CompactValue& v1 = table[d][c1];
                    const CompactValue& v2 = table[d][c2];
                    if (v1.t < 0 || v2.t < 0) continue;
                    long long scale = 1;
                    for (long k = 0; k < v1.t + v2.t; ++k) scale *= static_cast<long long>(pr.p);
                    counts[(v1.exp + pM - v2.exp) % pM] += scale;
                }
                const long long expected = c1 == c2 ? order / sizes[c1] : 0;
                if (!reduced_is_constant(counts, pr.p, pM, expected)) {
                    report.ok = false;
                    report.failure = "column orthogonality fails for classes " +
                                     std::to_string(c1) + " vs " + std::to_string(c2);
                }
                std::fill(counts.begin(), counts.end(), 0);
                ++report.column_pairs_checked;
            }
        }
    }
    return report;
}

bool degree_square_identity(const ValidatedPresentation& g, std::size_t bound) {
    require_bound(g, bound, "degree_square_identity");
    Integer total(0);
    for (const auto& d : enumerate_irreps(g)) {
        const Integer deg = degree(g, d);
        total += deg * deg;
    }
    return total == g.group_order();
}

bool class_count_identity(const ValidatedPresentation& g, std::size_t bound) {
    const EnumeratedGroup en = enumerate(g, bound);
    return Integer(en.conjugacy_classes.size()) == irrep_count(g);
}

OrbitCensus orbit_census_by_enumeration(const ValidatedPresentation& g, std::size_t bound) {
    const auto& pr = g.params();
    if (g.a_order() > static_cast<unsigned long>(bound))
        throw TooLargeError("orbit_census_by_enumeration: p^n exceeds bound");
    const unsigned long pn = to_ulong(g.a_order());
    const unsigned long conj = to_ulong(mod_floor(g.conjugation_unit(), g.a_order()));

    OrbitCensus census;
    census.fixed_points = 0;
    std::vector<bool> seen(pn, false);
    for (unsigned long e = 0; e < pn; ++e) {
        if (seen[e]) continue;
        unsigned long size = 0;
        unsigned long cur = e;
        do {
            seen[cur] = true;
            ++size;
            cur = static_cast<unsigned long>((static_cast<unsigned long long>(cur) * conj) % pn);
        } while (cur != e);
        if (size == 1) {
            census.fixed_points += 1;
        } else {
            unsigned long t = 0;
            for (unsigned long v = size; v > 1; v /= pr.p) ++t;
            census.per_size[t] += 1;
        }
    }
    return census;
}

std::map<Integer, Integer> rational_counts_from_classes(const ValidatedPresentation& g) {
    std::map<Integer, Integer> out;
    for (const auto& cls : galois_classes(g)) {
        if (cls.t == 0 && cls.conductor_exp == 0) continue;  // trivial character
        out[cls.rational_degree] += 1;
    }
    return out;
}

std::complex<double> numeric_value(const CyclotomicNumber& x) {
    if (x.level() == 0) return {x.coefficients()[0].get_d(), 0.0};
    const double pk = prime_power(x.prime(), x.level()).get_d();
    std::complex<double> total(0.0, 0.0);
    for (std::size_t d = 0; d < x.coefficients().size(); ++d) {
        const Rational& c = x.coefficients()[d];
        if (c == 0) continue;
        total += c.get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(d) / pk);
    }
    return total;
}

}  // namespace metaq
