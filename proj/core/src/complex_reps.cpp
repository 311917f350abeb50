#include "metaq/complex_reps.hpp"

#include <algorithm>
#include <cassert>

namespace metaq {

namespace {

constexpr unsigned long kMaxEnumeration = 1ul << 22;

unsigned long ulong_pow(const ValidatedPresentation& g, unsigned long k) {
    return to_ulong(prime_power(g.params().p, k));
}

}  // namespace

OrbitCensus orbit_census(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    OrbitCensus census;
    census.fixed_points = prime_power(pr.p, pr.n - pr.s);
    const Integer per = phi_prime_power(pr.p, pr.n - pr.s);
    for (unsigned long t = 1; t <= pr.s; ++t) census.per_size[t] = per;
    return census;
}

std::string descriptor_to_string(const IrrepDescriptor& d) {
    if (const auto* lin = std::get_if<LinearDescriptor>(&d)) {
        return "L(lambda=" + lin->lambda.get_str() + ", omega=" + lin->omega_exp.get_str() + ")";
    }
    const auto& nl = std::get<NonlinearDescriptor>(d);
    return "N(t=" + std::to_string(nl.t) + ", l=" + nl.l.get_str() +
           ", omega=" + nl.omega_index.get_str() + ")";
}

unsigned long working_level(const ValidatedPresentation& g) {
    return std::max(g.params().n, g.params().m);
}

unsigned long degree_exponent(const IrrepDescriptor& d) {
    if (std::holds_alternative<LinearDescriptor>(d)) return 0;
    return std::get<NonlinearDescriptor>(d).t;
}

Integer degree(const ValidatedPresentation& g, const IrrepDescriptor& d) {
    return prime_power(g.params().p, degree_exponent(d));
}

Integer omega_zeta_exponent(const ValidatedPresentation& g, const IrrepDescriptor& d) {
    const auto& pr = g.params();
    const unsigned long M = working_level(g);
    if (const auto* lin = std::get_if<LinearDescriptor>(&d)) {
        return mod_floor(lin->omega_exp * prime_power(pr.p, M - pr.m), prime_power(pr.p, M));
    }
    const auto& nl = std::get<NonlinearDescriptor>(d);
    // omega^(p^(m-t)) = zeta_{p^M}^(l p^(M+s-r-t)); solutions are
    // e0 + index p^(M-m+t) with e0 = l p^(M+s-r-m) mod p^(M-m+t)
    const Integer step = prime_power(pr.p, M - pr.m + nl.t);
    const Integer e0 = mod_floor(nl.l * prime_power(pr.p, M + pr.s - pr.r - pr.m), step);
    return e0 + nl.omega_index * step;
}

unsigned long conductor_exponent(const ValidatedPresentation& g, const IrrepDescriptor& d) {
    const auto& pr = g.params();
    if (const auto* lin = std::get_if<LinearDescriptor>(&d)) {
        unsigned long ca = 0, cb = 0;
        if (lin->lambda != 0) ca = pr.n - pr.s - valuation(lin->lambda, pr.p);
        if (lin->omega_exp != 0) cb = pr.m - valuation(lin->omega_exp, pr.p);
        return std::max(ca, cb);
    }
    const unsigned long M = working_level(g);
    const Integer w = omega_zeta_exponent(g, d);
    unsigned long comega = 0;
    if (w != 0) comega = M - valuation(w, pr.p);
    return std::max(pr.n - pr.s, comega);
}

Integer canonical_orbit_representative(const ValidatedPresentation& g, unsigned long t,
                                       const Integer& l) {
    const auto& pr = g.params();
    const Integer mod = prime_power(pr.p, pr.n - pr.s + t);
    const Integer conj = mod_floor(g.conjugation_unit(), mod);
    Integer best = mod_floor(l, mod);
    Integer cur = best;
    const Integer start = best;
    while (true) {
        cur = mod_floor(cur * conj, mod);
        if (cur == start) break;
        if (cur < best) best = cur;
    }
    return best;
}

Integer irrep_count(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    return prime_power(pr.p, pr.n + pr.m - pr.s) + prime_power(pr.p, pr.n + pr.m - pr.s - 1) -
           prime_power(pr.p, pr.n + pr.m - 2 * pr.s - 1);
}

std::map<unsigned long, Integer> irrep_counts_by_degree(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    std::map<unsigned long, Integer> counts;
    counts[0] = prime_power(pr.p, pr.n + pr.m - pr.s);
    const Integer phi_ns = phi_prime_power(pr.p, pr.n - pr.s);
    for (unsigned long t = 1; t <= pr.s; ++t) counts[t] = phi_ns * prime_power(pr.p, pr.m - t);
    return counts;
}

std::vector<IrrepDescriptor> enumerate_irreps(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    if (irrep_count(g) > kMaxEnumeration)
        throw TooLargeError("enumerate_irreps: too many descriptors for " + pr.to_string());
    std::vector<IrrepDescriptor> out;
    const unsigned long lin_a = ulong_pow(g, pr.n - pr.s);
    const unsigned long lin_b = ulong_pow(g, pr.m);
    for (unsigned long lambda = 0; lambda < lin_a; ++lambda)
        for (unsigned long c = 0; c < lin_b; ++c)
            out.push_back(LinearDescriptor{Integer(lambda), Integer(c)});

    for (unsigned long t = 1; t <= pr.s; ++t) {
        const unsigned long mod = ulong_pow(g, pr.n - pr.s + t);
        const unsigned long conj = to_ulong(mod_floor(g.conjugation_unit(), Integer(mod)));
        const unsigned long omega_count = ulong_pow(g, pr.m - t);
        std::vector<bool> seen(mod, false);
        for (unsigned long l = 1; l < mod; ++l) {
            if (l % pr.p == 0 || seen[l]) continue;
            // mark the whole orbit of l; l itself is its minimum
            unsigned long cur = l;
            do {
                seen[cur] = true;
                cur = static_cast<unsigned long>((static_cast<unsigned long long>(cur) * conj) % mod);
            } while (cur != l);
            for (unsigned long idx = 0; idx < omega_count; ++idx)
                out.push_back(NonlinearDescriptor{t, Integer(l), Integer(idx)});
        }
    }
    assert(Integer(out.size()) == irrep_count(g));
    return out;
}

ComplexIrrep build_complex_rep(const ValidatedPresentation& g, const IrrepDescriptor& d) {
    const auto& pr = g.params();
    const unsigned long M = working_level(g);
    const Integer pM = prime_power(pr.p, M);

    ComplexIrrep rep;
    rep.descriptor = d;
    rep.degree = degree(g, d);

    if (const auto* lin = std::get_if<LinearDescriptor>(&d)) {
        rep.mat_a = Matrix<CyclotomicNumber>(1, 1);
        rep.mat_b = Matrix<CyclotomicNumber>(1, 1);
        const Integer ea = lin->lambda * prime_power(pr.p, pr.s) * prime_power(pr.p, M - pr.n);
        rep.mat_a(0, 0) = CyclotomicNumber::root_of_unity(pr.p, M, ea);
        rep.mat_b(0, 0) = CyclotomicNumber::root_of_unity(pr.p, M, omega_zeta_exponent(g, d));
        return rep;
    }

    const auto& nl = std::get<NonlinearDescriptor>(d);
    const unsigned long dim = ulong_pow(g, nl.t);
    rep.mat_a = Matrix<CyclotomicNumber>(dim, dim);
    rep.mat_b = Matrix<CyclotomicNumber>(dim, dim);
    // T(a) = diag(zeta^((1+p^(n-s))^k l p^(s-t))), k = 0..p^t-1
    Integer e = nl.l * prime_power(pr.p, pr.s - nl.t) * prime_power(pr.p, M - pr.n);
    for (unsigned long k = 0; k < dim; ++k) {
        rep.mat_a(k, k) = CyclotomicNumber::root_of_unity(pr.p, M, e);
        e = mod_floor(e * g.conjugation_unit(), pM);
    }
    // T(b): cyclic shift with omega in the corner. The orientation with 1s on
    // the superdiagonal and omega at (dim-1, 0) is the one that satisfies
    // b a b^-1 = a^(1+p^(n-s)) for the diagonal above (the transpose realizes
    // the inverse conjugation instead).
    rep.mat_b(dim - 1, 0) = CyclotomicNumber::root_of_unity(pr.p, M, omega_zeta_exponent(g, d));
    for (unsigned long k = 0; k + 1 < dim; ++k) rep.mat_b(k, k + 1) = CyclotomicNumber(1);
    return rep;
}

Matrix<CyclotomicNumber> rep_evaluate(const ComplexIrrep& rep, const GroupElement& x) {
    return rep.mat_a.pow(x.i) * rep.mat_b.pow(x.j);
}

std::optional<std::pair<unsigned long, Integer>> character_monomial(const ValidatedPresentation& g,
                                                                    const IrrepDescriptor& d,
                                                                    const GroupElement& x) {
    const auto& pr = g.params();
    const unsigned long M = working_level(g);
    const Integer pM = prime_power(pr.p, M);
    if (const auto* lin = std::get_if<LinearDescriptor>(&d)) {
        const Integer e = lin->lambda * prime_power(pr.p, pr.s) * prime_power(pr.p, M - pr.n) * x.i +
                          omega_zeta_exponent(g, d) * x.j;
        return std::make_pair(0ul, mod_floor(e, pM));
    }
    const auto& nl = std::get<NonlinearDescriptor>(d);
    const Integer pt = prime_power(pr.p, nl.t);
    if (mod_floor(x.i, pt) != 0 || mod_floor(x.j, pt) != 0) return std::nullopt;
    const Integer j1 = x.j / pt;
    const Integer e = nl.l * prime_power(pr.p, pr.s - nl.t) * prime_power(pr.p, M - pr.n) * x.i +
                      omega_zeta_exponent(g, d) * j1;
    return std::make_pair(nl.t, mod_floor(e, pM));
}

CyclotomicNumber character_value(const ValidatedPresentation& g, const IrrepDescriptor& d,
                                 const GroupElement& x) {
    const auto mono = character_monomial(g, d, x);
    if (!mono) return CyclotomicNumber(0);
    const auto& pr = g.params();
    return CyclotomicNumber(prime_power(pr.p, mono->first)) *
           CyclotomicNumber::root_of_unity(pr.p, working_level(g), mono->second);
}

}  // namespace metaq
