#include "metaq/rational_reps.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>

namespace metaq {

namespace {

constexpr unsigned long kMaxDeskOrder = 1ul << 18;

void require_desk_scale(const ValidatedPresentation& g, const char* what) {
    if (g.group_order() > kMaxDeskOrder)
        throw TooLargeError(std::string(what) + ": group too large for enumeration: " +
                            g.group_order().get_str());
}

std::pair<Integer, Integer> element_key(const GroupElement& x) { return {x.i, x.j}; }

}  // namespace

IrrepDescriptor galois_conjugate_descriptor(const ValidatedPresentation& g,
                                            const IrrepDescriptor& d, const Integer& u) {
    const auto& pr = g.params();
    if (const auto* lin = std::get_if<LinearDescriptor>(&d)) {
        return LinearDescriptor{mod_floor(u * lin->lambda, prime_power(pr.p, pr.n - pr.s)),
                                mod_floor(u * lin->omega_exp, prime_power(pr.p, pr.m))};
    }
    const auto& nl = std::get<NonlinearDescriptor>(d);
    const unsigned long M = working_level(g);
    const Integer pM = prime_power(pr.p, M);
    const Integer l_raw = mod_floor(u * nl.l, prime_power(pr.p, pr.n - pr.s + nl.t));
    const Integer l_can = canonical_orbit_representative(g, nl.t, l_raw);
    const Integer w_new = mod_floor(u * omega_zeta_exponent(g, d), pM);
    const Integer step = prime_power(pr.p, M - pr.m + nl.t);
    const Integer e0 = mod_floor(l_can * prime_power(pr.p, M + pr.s - pr.r - pr.m), step);
    const Integer diff = mod_floor(w_new - e0, pM);
    if (diff % step != 0)
        throw MismatchError("galois_conjugate_descriptor: omega image is not a solution");
    return NonlinearDescriptor{nl.t, l_can, diff / step};
}

std::vector<GaloisClass> galois_classes(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    const unsigned long M = working_level(g);
    const std::vector<Integer> gens = unit_group_generators(pr.p, M);

    std::set<IrrepDescriptor> remaining;
    for (auto& d : enumerate_irreps(g)) remaining.insert(d);

    std::vector<GaloisClass> classes;
    while (!remaining.empty()) {
        const IrrepDescriptor seed = *remaining.begin();
        std::set<IrrepDescriptor> orbit{seed};
        std::vector<IrrepDescriptor> queue{seed};
        while (!queue.empty()) {
            const IrrepDescriptor cur = queue.back();
            queue.pop_back();
            for (const Integer& u : gens) {
                IrrepDescriptor next = galois_conjugate_descriptor(g, cur, u);
                if (orbit.insert(next).second) queue.push_back(next);
            }
        }
        GaloisClass cls;
        cls.members.assign(orbit.begin(), orbit.end());
        for (const auto& mem : cls.members) remaining.erase(mem);
        cls.t = degree_exponent(cls.members.front());
        cls.conductor_exp = conductor_exponent(g, cls.members.front());
        cls.conductor = prime_power(pr.p, cls.conductor_exp);
        cls.degree = prime_power(pr.p, cls.t);
        cls.rational_degree = cls.degree * phi_prime_power(pr.p, cls.conductor_exp);
        // |E(chi)| = [Q(chi) : Q]
        assert(Integer(cls.members.size()) == phi_prime_power(pr.p, cls.conductor_exp));
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const GaloisClass& a, const GaloisClass& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.conductor_exp != b.conductor_exp) return a.conductor_exp < b.conductor_exp;
        return a.members.front() < b.members.front();
    });
    return classes;
}

std::map<Integer, Integer> rational_irrep_counts(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    const unsigned long p = pr.p;
    std::map<Integer, Integer> out;
    auto add = [&](unsigned long lambda, const Integer& count) {
        if (count != 0) out[phi_prime_power(p, lambda)] += count;
    };
    const unsigned long ns = pr.n - pr.s;
    const Integer phi_ns = phi_prime_power(p, ns);
    if (ns >= pr.m) {
        for (unsigned long lambda = 1; lambda <= pr.m; ++lambda)
            add(lambda, prime_power(p, lambda - 1) * Integer(p + 1));
        for (unsigned long lambda = pr.m + 1; lambda <= ns; ++lambda)
            add(lambda, prime_power(p, pr.m));
        for (unsigned long t = 1; t <= pr.s; ++t) add(ns + t, prime_power(p, pr.m - t));
        return out;
    }
    const unsigned long k = pr.m - ns;
    for (unsigned long lambda = 1; lambda <= ns; ++lambda)
        add(lambda, prime_power(p, lambda - 1) * Integer(p + 1));
    if (k <= pr.s - pr.r) {
        for (unsigned long t = 1; t <= k; ++t)
            add(ns + t, 2 * prime_power(p, ns) + Integer(t - 1) * phi_ns);
        for (unsigned long t = k + 1; t <= pr.s; ++t) add(ns + t, prime_power(p, pr.m - t));
    } else {
        for (unsigned long t = 1; t <= pr.s - pr.r; ++t)
            add(ns + t, 2 * prime_power(p, ns) + Integer(t - 1) * phi_ns);
        for (unsigned long lambda = pr.n - pr.r + 1; lambda <= pr.m; ++lambda)
            add(lambda, prime_power(p, ns) + Integer(pr.s - pr.r) * phi_ns);
        for (unsigned long t = pr.s - pr.r + 1; t <= pr.s; ++t)
            add(pr.m + pr.r - pr.s + t, prime_power(p, pr.n - pr.r - t));
    }
    return out;
}

RationalCharacter::RationalCharacter(const ValidatedPresentation& g, GaloisClass cls,
                                     std::vector<Rational> values)
    : cls_(std::move(cls)), values_(std::move(values)), pm_(to_ulong(g.b_exponent_modulus())) {}

const Rational& RationalCharacter::value(const GroupElement& x) const {
    return values_[to_ulong(x.i) * pm_ + to_ulong(x.j)];
}

RationalCharacter omega_character(const ValidatedPresentation& g, const GaloisClass& cls) {
    require_desk_scale(g, "omega_character");
    const auto& pr = g.params();
    const unsigned long M = working_level(g);
    const unsigned long c = cls.conductor_exp;
    const unsigned long pc = to_ulong(prime_power(pr.p, c));
    const Integer scale = prime_power(pr.p, M - c);

    std::vector<unsigned long> units;
    if (c == 0)
        units.push_back(1);
    else
        for (unsigned long u = 1; u < pc; ++u)
            if (u % pr.p != 0) units.push_back(u);

    const unsigned long pn = to_ulong(g.a_order());
    const unsigned long pm = to_ulong(g.b_exponent_modulus());
    std::vector<Rational> values(static_cast<std::size_t>(pn) * pm, Rational(0));
    const IrrepDescriptor& rep = cls.representative();
    for (unsigned long i = 0; i < pn; ++i) {
        for (unsigned long j = 0; j < pm; ++j) {
            const GroupElement x{Integer(i), Integer(j)};
            const auto mono = character_monomial(g, rep, x);
            if (!mono) continue;
            // chi(x) = p^t zeta_{p^M}^E lives in Q(zeta_{p^c}); Omega(chi)(x)
            // is p^t sum_u zeta_{p^c}^(u E / p^(M-c)) over units u mod p^c
            if (mono->second % scale != 0)
                throw MismatchError("omega_character: value outside the conductor field");
            const unsigned long e = c == 0 ? 0 : to_ulong((mono->second / scale) % pc);
            std::vector<Rational> counts(pc, Rational(0));
            for (unsigned long u : units) counts[(u * e) % pc] += 1;
            const CyclotomicNumber sum = CyclotomicNumber::from_coefficients(pr.p, c, std::move(counts));
            values[static_cast<std::size_t>(i) * pm + j] =
                Rational(prime_power(pr.p, mono->first)) * sum.rational_value();
        }
    }
    return RationalCharacter(g, cls, std::move(values));
}

FaithfulKind classify_faithful(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    if (pr.s == pr.m) return FaithfulKind::G2;
    if (pr.r >= 1 && pr.n - pr.r == pr.s && pr.s < pr.m) return FaithfulKind::G1;
    return FaithfulKind::NotFaithful;
}

RequiredPair required_pair(const ValidatedPresentation& g, const GaloisClass& cls) {
    const FaithfulKind kind = classify_faithful(g);
    if (kind == FaithfulKind::NotFaithful)
        throw std::invalid_argument("required_pair: " + g.params().to_string() +
                                    " has no faithful irreducible character");
    const auto& pr = g.params();
    if (cls.t != pr.s)
        throw std::invalid_argument("required_pair: class degree must be p^s (faithful classes)");

    RequiredPair pair;
    pair.mu = 0;
    pair.k_cong = 0;
    pair.l_cong = 0;
    if (kind == FaithfulKind::G2) {
        // H = <a^(p^s), b>, psi(a^(p^s)) = zeta_{p^(n-s)}, psi(b) = 1
        pair.subgroup_gens = {g.element(prime_power(pr.p, pr.s), 0), g.generator_b()};
        pair.psi_exponents = {Integer(1), Integer(0)};
        pair.psi_conductor_exp = pr.n - pr.s;
        pair.induce_along_b = false;
    } else if (pr.m >= 2 * pr.s) {
        // H = <a, b^(p^s)>, psi(a) = zeta_{p^n}, psi(b^(p^s)) = zeta_{p^(n+m-2s)}
        const unsigned long c = pr.n + pr.m - 2 * pr.s;
        pair.subgroup_gens = {g.generator_a(), g.element(0, prime_power(pr.p, pr.s))};
        pair.psi_exponents = {prime_power(pr.p, c - pr.n), Integer(1)};
        pair.psi_conductor_exp = c;
        pair.induce_along_b = true;
    } else {
        // H_mu = <a^(p^(2s-m)), a^mu b^(p^(m-s))> with
        //   k = p^-s ((1+p^(n-s))^(p^m) - 1) / ((1+p^(n-s))^(p^(m-s)) - 1)
        //   l = p^(m-2s) ((1+p^(n-s))^(p^s) - 1) / ((1+p^(n-s))^(p^(m-s)) - 1)
        //   mu k = -1 mod p^(n-s),  -mu l = 1 mod p^(n+m-2s)
        const unsigned long c = pr.n + pr.m - 2 * pr.s;
        const Integer conj = g.conjugation_unit();
        const unsigned long pm_ul = to_ulong(g.b_exponent_modulus());
        const unsigned long ps_ul = to_ulong(prime_power(pr.p, pr.s));
        const unsigned long pms_ul = to_ulong(prime_power(pr.p, pr.m - pr.s));
        const Integer den = ipow(conj, pms_ul) - 1;
        Integer k = ipow(conj, pm_ul) - 1;
        if (k % den != 0) throw MismatchError("required_pair: k quotient is not integral");
        k /= den;
        const Integer ps = prime_power(pr.p, pr.s);
        if (k % ps != 0) throw MismatchError("required_pair: k is not divisible by p^s");
        pair.k_cong = k / ps;
        Integer l = ipow(conj, ps_ul) - 1;
        if (l % den != 0) throw MismatchError("required_pair: l quotient is not integral");
        l /= den;
        const Integer p2sm = prime_power(pr.p, 2 * pr.s - pr.m);
        if (l % p2sm != 0) throw MismatchError("required_pair: l is not divisible by p^(2s-m)");
        pair.l_cong = l / p2sm;

        const Integer pc = prime_power(pr.p, c);
        const Integer pns = prime_power(pr.p, pr.n - pr.s);
        Integer mu = mod_floor(-mod_inverse(pair.l_cong, pc), pc);
        auto satisfies = [&](const Integer& candidate) {
            return mod_floor(candidate * pair.k_cong + 1, pns) == 0 &&
                   mod_floor(-candidate * pair.l_cong - 1, pc) == 0;
        };
        if (!satisfies(mu)) {
            bool found = false;
            for (Integer candidate(0); candidate < pc; ++candidate) {
                if (satisfies(candidate)) {
                    mu = candidate;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw NoSolutionError("required_pair: congruences for mu have no common solution");
        }
        pair.mu = mu;
        pair.subgroup_gens = {g.element(prime_power(pr.p, 2 * pr.s - pr.m), 0),
                              g.element(mu, prime_power(pr.p, pr.m - pr.s))};
        pair.psi_exponents = {Integer(1), Integer(0)};
        pair.psi_conductor_exp = c;
        pair.induce_along_b = true;
    }
    if (pair.psi_conductor_exp != cls.conductor_exp)
        throw MismatchError("required_pair: Q(psi) differs from Q(chi)");
    return pair;
}

namespace {

// psi extended to all of H: element -> exponent of zeta_{p^c}. Built by
// closing the generator powers; collisions double-check well-definedness.
struct SubgroupCharacter {
    std::map<std::pair<Integer, Integer>, Integer> psi;
    unsigned long conductor_exp = 0;

    bool contains(const GroupElement& x) const { return psi.count(element_key(x)) > 0; }
    const Integer& exponent(const GroupElement& x) const { return psi.at(element_key(x)); }
};

SubgroupCharacter close_subgroup(const ValidatedPresentation& g, const RequiredPair& pair) {
    require_desk_scale(g, "required pair induction");
    const Integer pc = prime_power(g.params().p, pair.psi_conductor_exp);
    SubgroupCharacter sub;
    sub.conductor_exp = pair.psi_conductor_exp;

    const GroupElement g1 = pair.subgroup_gens.at(0);
    const Integer o1 = g.element_order(g1);
    const GroupElement g2 =
        pair.subgroup_gens.size() > 1 ? pair.subgroup_gens.at(1) : g.identity();
    const Integer o2 = pair.subgroup_gens.size() > 1 ? g.element_order(g2) : Integer(1);
    const Integer e1 = pair.psi_exponents.at(0);
    const Integer e2 = pair.subgroup_gens.size() > 1 ? pair.psi_exponents.at(1) : Integer(0);

    GroupElement cur1 = g.identity();
    Integer psi1(0);
    for (Integer alpha(0); alpha < o1; ++alpha) {
        GroupElement cur = cur1;
        Integer psi = psi1;
        for (Integer beta(0); beta < o2; ++beta) {
            auto [it, inserted] = sub.psi.emplace(element_key(cur), psi);
            if (!inserted && it->second != psi)
                throw MismatchError("required pair: psi is not well-defined on H");
            cur = g.multiply(cur, g2);
            psi = mod_floor(psi + e2, pc);
        }
        cur1 = g.multiply(cur1, g1);
        psi1 = mod_floor(psi1 + e1, pc);
    }
    return sub;
}

BlockMonomialForm form_identity(std::size_t blocks) {
    BlockMonomialForm f;
    f.perm.resize(blocks);
    f.exps.assign(blocks, Integer(0));
    for (std::size_t i = 0; i < blocks; ++i) f.perm[i] = i;
    return f;
}

BlockMonomialForm form_multiply(const BlockMonomialForm& a, const BlockMonomialForm& b,
                                const Integer& mod) {
    BlockMonomialForm out;
    const std::size_t n = a.perm.size();
    out.perm.resize(n);
    out.exps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.perm[i] = b.perm[a.perm[i]];
        out.exps[i] = mod_floor(a.exps[i] + b.exps[a.perm[i]], mod);
    }
    return out;
}

BlockMonomialForm form_pow(const BlockMonomialForm& f, const Integer& e, const Integer& mod) {
    if (e < 0) throw std::invalid_argument("form_pow: negative exponent");
    BlockMonomialForm acc = form_identity(f.perm.size());
    BlockMonomialForm base = f;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = form_multiply(acc, base, mod);
        k >>= 1;
        if (k > 0) base = form_multiply(base, base, mod);
    }
    return acc;
}

BlockMonomialForm form_at(const RationalMatrixRep& rep, const GroupElement& x) {
    const Integer mod(rep.companion->order());
    return form_multiply(form_pow(rep.a_form, x.i, mod), form_pow(rep.b_form, x.j, mod), mod);
}

Matrix<Rational> form_to_dense(const BlockMonomialForm& f, const CompanionTable& table) {
    const std::size_t d = table.dimension();
    const std::size_t n = f.perm.size() * d;
    Matrix<Rational> out(n, n);
    for (std::size_t bi = 0; bi < f.perm.size(); ++bi) {
        const Matrix<Rational>& block = table.power(f.exps[bi]);
        const std::size_t bj = f.perm[bi];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out(bi * d + i, bj * d + j) = block(i, j);
    }
    return out;
}

Rational form_trace(const BlockMonomialForm& f, const CompanionTable& table) {
    Rational t(0);
    for (std::size_t i = 0; i < f.perm.size(); ++i)
        if (f.perm[i] == i) t += table.trace(f.exps[i]);
    return t;
}

}  // namespace

CyclotomicNumber induced_character_value(const ValidatedPresentation& g, const RequiredPair& pair,
                                         const GroupElement& x) {
    const auto& pr = g.params();
    const SubgroupCharacter sub = close_subgroup(g, pair);
    const unsigned long c = pair.psi_conductor_exp;
    const unsigned long pc = to_ulong(prime_power(pr.p, c));
    const unsigned long B = to_ulong(prime_power(pr.p, pr.s));
    const GroupElement tau = pair.induce_along_b ? g.generator_b() : g.generator_a();

    std::vector<Rational> counts(pc, Rational(0));
    GroupElement xi = g.identity();
    for (unsigned long i = 0; i < B; ++i) {
        const GroupElement conj = g.multiply(xi, g.multiply(x, g.inverse(xi)));
        if (sub.contains(conj)) counts[to_ulong(sub.exponent(conj))] += 1;
        xi = g.multiply(xi, tau);
    }
    return CyclotomicNumber::from_coefficients(pr.p, c, std::move(counts));
}

Matrix<Rational> companion_rational_rep(unsigned long p, unsigned long k) {
    if (k == 0) return Matrix<Rational>::identity(1);
    const std::size_t dim = to_ulong(phi_prime_power(p, k));
    const std::size_t pk1 = to_ulong(prime_power(p, k - 1));
    Matrix<Rational> out(dim, dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) out(i, i + 1) = 1;
    // bottom row: X^phi = -(1 + X^(p^(k-1)) + ... + X^((p-2) p^(k-1)))
    for (std::size_t j = 0; j < dim; ++j)
        if (j % pk1 == 0) out(dim - 1, j) = -1;
    return out;
}

CompanionTable::CompanionTable(unsigned long p, unsigned long c) : p_(p), c_(c) {
    order_ = to_ulong(prime_power(p, c));
    dim_ = to_ulong(phi_prime_power(p, c));
    powers_.reserve(order_);
    traces_.reserve(order_);
    for (unsigned long e = 0; e < order_; ++e) {
        Matrix<Rational> m(dim_, dim_);
        if (c == 0) {
            m(0, 0) = 1;
        } else {
            // row i of C^e carries the reduced coefficients of zeta^(e+i)
            for (std::size_t i = 0; i < dim_; ++i) {
                const auto z = CyclotomicNumber::root_of_unity(p, c, Integer(e + i));
                for (std::size_t j = 0; j < dim_; ++j) m(i, j) = z.coefficients()[j];
            }
        }
        traces_.push_back(m.trace());
        powers_.push_back(std::move(m));
    }
}

const Matrix<Rational>& CompanionTable::power(const Integer& e) const {
    return powers_[to_ulong(mod_floor(e, Integer(order_)))];
}

const Rational& CompanionTable::trace(const Integer& e) const {
    return traces_[to_ulong(mod_floor(e, Integer(order_)))];
}

RationalMatrixRep induce_rational_rep(const ValidatedPresentation& g, const RequiredPair& pair) {
    const auto& pr = g.params();
    const SubgroupCharacter sub = close_subgroup(g, pair);
    auto table = std::make_shared<const CompanionTable>(pr.p, pair.psi_conductor_exp);
    const unsigned long B = to_ulong(prime_power(pr.p, pr.s));
    const GroupElement tau = pair.induce_along_b ? g.generator_b() : g.generator_a();

    std::vector<GroupElement> trans, trans_inv;
    trans.reserve(B);
    GroupElement cur = g.identity();
    for (unsigned long i = 0; i < B; ++i) {
        trans.push_back(cur);
        trans_inv.push_back(g.inverse(cur));
        cur = g.multiply(cur, tau);
    }

    auto build = [&](const GroupElement& target) {
        BlockMonomialForm f;
        f.perm.resize(B);
        f.exps.resize(B);
        for (unsigned long i = 0; i < B; ++i) {
            const GroupElement xi_t = g.multiply(trans[i], target);
            bool found = false;
            for (unsigned long j = 0; j < B; ++j) {
                const GroupElement h = g.multiply(xi_t, trans_inv[j]);
                if (sub.contains(h)) {
                    f.perm[i] = j;
                    f.exps[i] = sub.exponent(h);
                    found = true;
                    break;
                }
            }
            if (!found) throw MismatchError("induce_rational_rep: transversal misses a coset");
        }
        return f;
    };

    RationalMatrixRep rep;
    rep.companion = table;
    rep.a_form = build(g.generator_a());
    rep.b_form = build(g.generator_b());
    rep.mat_a = form_to_dense(rep.a_form, *table);
    rep.mat_b = form_to_dense(rep.b_form, *table);
    rep.degree = Integer(B) * phi_prime_power(pr.p, pair.psi_conductor_exp);
    return rep;
}

Rational rep_trace_at(const RationalMatrixRep& rep, const GroupElement& x) {
    return form_trace(form_at(rep, x), *rep.companion);
}

Matrix<Rational> rep_evaluate(const RationalMatrixRep& rep, const GroupElement& x) {
    return form_to_dense(form_at(rep, x), *rep.companion);
}

std::vector<GroupElement> kernel_of(const ValidatedPresentation& g, const GaloisClass& cls) {
    require_desk_scale(g, "kernel_of");
    const unsigned long pn = to_ulong(g.a_order());
    const unsigned long pm = to_ulong(g.b_exponent_modulus());
    const IrrepDescriptor& rep = cls.representative();
    std::vector<GroupElement> out;
    for (unsigned long i = 0; i < pn; ++i) {
        for (unsigned long j = 0; j < pm; ++j) {
            const GroupElement x{Integer(i), Integer(j)};
            const auto mono = character_monomial(g, rep, x);
            if (mono && mono->second == 0) out.push_back(x);
        }
    }
    return out;
}

namespace {

// G/K as a concrete coset table with multiplication through G: cosets are
// identified by the smallest element index they contain.
class QuotientGroup {
public:
    QuotientGroup(const ValidatedPresentation& g, const std::vector<GroupElement>& kernel)
        : g_(g), pm_(to_ulong(g.b_exponent_modulus())), pn_(to_ulong(g.a_order())) {
        const std::size_t order = static_cast<std::size_t>(pn_) * pm_;
        coset_of_.assign(order, SIZE_MAX);
        for (std::size_t idx = 0; idx < order; ++idx) {
            if (coset_of_[idx] != SIZE_MAX) continue;
            const std::size_t qid = reps_.size();
            const GroupElement rep = element_at(idx);
            reps_.push_back(rep);
            for (const auto& k : kernel) coset_of_[index_of(g_.multiply(rep, k))] = qid;
            if (coset_of_[idx] != qid)
                throw std::invalid_argument("quotient_params: kernel is not a subgroup");
        }
    }

    std::size_t size() const { return reps_.size(); }
    std::size_t qid(const GroupElement& x) const { return coset_of_[index_of(x)]; }
    const GroupElement& rep(std::size_t q) const { return reps_[q]; }
    std::size_t identity() const { return coset_of_[0]; }

    std::size_t multiply(std::size_t x, std::size_t y) const {
        return qid(g_.multiply(reps_[x], reps_[y]));
    }
    std::size_t inverse(std::size_t x) const { return qid(g_.inverse(reps_[x])); }

    std::size_t power(std::size_t x, Integer e) const {
        std::size_t acc = identity();
        std::size_t base = x;
        if (e < 0) {
            base = inverse(base);
            e = -e;
        }
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = multiply(acc, base);
            e >>= 1;
            if (e > 0) base = multiply(base, base);
        }
        return acc;
    }

    Integer order_of(std::size_t x) const {
        Integer order(1);
        std::size_t cur = x;
        while (cur != identity()) {
            cur = power(cur, Integer(g_.params().p));
            order *= g_.params().p;
        }
        return order;
    }

private:
    std::size_t index_of(const GroupElement& x) const {
        return to_ulong(x.i) * pm_ + to_ulong(x.j);
    }
    GroupElement element_at(std::size_t idx) const {
        return {Integer(idx / pm_), Integer(idx % pm_)};
    }

    const ValidatedPresentation& g_;
    unsigned long pm_, pn_;
    std::vector<std::size_t> coset_of_;
    std::vector<GroupElement> reps_;
};

}  // namespace

QuotientData quotient_params(const ValidatedPresentation& g,
                             const std::vector<GroupElement>& kernel) {
    require_desk_scale(g, "quotient_params");
    const auto& pr = g.params();
    if (kernel.empty()) throw std::invalid_argument("quotient_params: empty kernel");
    const QuotientGroup q(g, kernel);
    if (Integer(q.size()) * Integer(kernel.size()) != g.group_order())
        throw std::invalid_argument("quotient_params: kernel size does not divide the group");

    unsigned long total = 0;  // |G/K| = p^total
    for (Integer v(q.size()); v > 1; v /= pr.p) ++total;

    const std::size_t a_img_q = q.qid(g.generator_a());
    const std::size_t b_img_q = q.qid(g.generator_b());

    // candidate reduced tuples for the quotient, small-to-large n'
    std::vector<MetacyclicParams> candidates;
    for (unsigned long nq = 1; nq < total; ++nq) {
        const unsigned long mq = total - nq;
        for (unsigned long sq = 0; sq <= mq && sq < nq; ++sq) {
            for (unsigned long rq = 0; rq <= sq; ++rq) {
                const MetacyclicParams qp{pr.p, nq, mq, rq, sq};
                try {
                    ValidatedPresentation::validate(qp);
                } catch (const ValidationError&) {
                    continue;
                }
                candidates.push_back(qp);
            }
        }
    }

    for (const auto& qp : candidates) {
        const auto quotient = ValidatedPresentation::validate(qp);
        const Integer pnq = quotient.a_order();
        const unsigned long pnq_ul = to_ulong(pnq);
        const Integer conj_target = mod_floor(quotient.conjugation_unit(), pnq);
        const Integer b_power_target = quotient.b_power_a_exponent();

        for (std::size_t abar = 0; abar < q.size(); ++abar) {
            if (q.order_of(abar) != pnq) continue;
            // power table of <abar> and discrete logs within it
            std::vector<std::size_t> pow(pnq_ul);
            std::map<std::size_t, Integer> dlog;
            std::size_t cur = q.identity();
            for (unsigned long e = 0; e < pnq_ul; ++e) {
                pow[e] = cur;
                dlog.emplace(cur, Integer(e));
                cur = q.multiply(cur, abar);
            }
            // <abar> must be normal: conjugates of abar by the generator
            // images stay inside
            const auto conj_in = [&](std::size_t by) {
                const std::size_t image = q.multiply(by, q.multiply(abar, q.inverse(by)));
                return dlog.count(image) > 0;
            };
            if (!conj_in(a_img_q) || !conj_in(b_img_q)) continue;

            const std::size_t conj_target_el = pow[to_ulong(conj_target)];
            const std::size_t b_power_target_el = pow[to_ulong(mod_floor(b_power_target, pnq))];
            for (std::size_t bbar = 0; bbar < q.size(); ++bbar) {
                if (q.multiply(bbar, q.multiply(abar, q.inverse(bbar))) != conj_target_el) continue;
                if (q.power(bbar, quotient.b_exponent_modulus()) != b_power_target_el) continue;
                // b must have order exactly p^m' modulo <abar>
                bool proper = true;
                if (qp.m >= 1) {
                    const std::size_t bp = q.power(bbar, prime_power(pr.p, qp.m - 1));
                    proper = dlog.count(bp) == 0;
                }
                if (!proper) continue;

                // express a coset as abar^x bbar^y (unique normal form)
                auto express = [&](std::size_t target) -> std::optional<GroupElement> {
                    std::size_t cosetpow = q.identity();
                    for (Integer y(0); y < quotient.b_exponent_modulus(); ++y) {
                        const auto it = dlog.find(q.multiply(target, q.inverse(cosetpow)));
                        if (it != dlog.end()) return quotient.element(it->second, y);
                        cosetpow = q.multiply(cosetpow, bbar);
                    }
                    return std::nullopt;
                };
                const auto a_img = express(a_img_q);
                const auto b_img = express(b_img_q);
                if (!a_img || !b_img) continue;

                // the images must satisfy G's relations in the quotient group
                if (!(quotient.power(*a_img, g.a_order()) == quotient.identity())) continue;
                if (!(quotient.power(*b_img, g.b_exponent_modulus()) ==
                      quotient.power(*a_img, g.b_power_a_exponent())))
                    continue;
                if (!(quotient.conjugate(*a_img, *b_img) ==
                      quotient.power(*a_img, g.conjugation_unit())))
                    continue;
                return QuotientData{quotient, *a_img, *b_img};
            }
        }
    }
    throw QuotientNotReducedError("quotient_params: no reduced presentation found for " +
                                  pr.to_string());
}

RationalMatrixRep rational_rep_for(const ValidatedPresentation& g, const GaloisClass& cls) {
    const auto& pr = g.params();
    if (cls.t == 0) {
        // linear class: companion construction on G itself
        const unsigned long c = cls.conductor_exp;
        auto table = std::make_shared<const CompanionTable>(pr.p, c);
        const unsigned long M = working_level(g);
        const Integer scale = prime_power(pr.p, M - c);
        auto exp_of = [&](const GroupElement& x) -> Integer {
            const auto mono = character_monomial(g, cls.representative(), x);
            if (!mono || mono->second % scale != 0)
                throw MismatchError("linear character value outside its conductor field");
            return mono->second / scale;
        };
        RationalMatrixRep rep;
        rep.companion = table;
        rep.a_form = BlockMonomialForm{{0}, {exp_of(g.generator_a())}};
        rep.b_form = BlockMonomialForm{{0}, {exp_of(g.generator_b())}};
        rep.mat_a = form_to_dense(rep.a_form, *table);
        rep.mat_b = form_to_dense(rep.b_form, *table);
        rep.degree = phi_prime_power(pr.p, c);
        return rep;
    }

    const std::vector<GroupElement> kernel = kernel_of(g, cls);
    if (kernel.size() == 1) return induce_rational_rep(g, required_pair(g, cls));

    const QuotientData qd = quotient_params(g, kernel);
    std::optional<GaloisClass> faithful;
    for (const auto& qc : galois_classes(qd.quotient)) {
        if (qc.t == qd.quotient.params().s && qc.conductor_exp == cls.conductor_exp) {
            if (faithful) throw MismatchError("rational_rep_for: faithful quotient class not unique");
            faithful = qc;
        }
    }
    if (!faithful)
        throw MismatchError("rational_rep_for: no faithful quotient class with matching conductor");

    const RationalMatrixRep qrep = induce_rational_rep(qd.quotient, required_pair(qd.quotient, *faithful));
    RationalMatrixRep rep;
    rep.companion = qrep.companion;
    rep.degree = qrep.degree;
    rep.a_form = form_at(qrep, qd.a_image);
    rep.b_form = form_at(qrep, qd.b_image);
    rep.mat_a = form_to_dense(rep.a_form, *rep.companion);
    rep.mat_b = form_to_dense(rep.b_form, *rep.companion);
    return rep;
}

}  // namespace metaq
