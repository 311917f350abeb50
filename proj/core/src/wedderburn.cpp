#include "metaq/wedderburn.hpp"

#include <algorithm>
#include <map>

namespace metaq {

namespace {

// accumulates (size, conductor) -> multiplicity with Q(zeta_1) = Q(zeta_2) = Q
class ComponentAccumulator {
public:
    explicit ComponentAccumulator(unsigned long p) : p_(p) {}

    void add(const Integer& multiplicity, unsigned long size_exp, unsigned long conductor_exp) {
        if (multiplicity == 0) return;
        Integer conductor = prime_power(p_, conductor_exp);
        if (conductor <= 2) conductor = 1;
        acc_[{prime_power(p_, size_exp), conductor}] += multiplicity;
    }

    std::vector<WedderburnComponent> sorted() const {
        std::vector<WedderburnComponent> out;
        out.reserve(acc_.size());
        for (const auto& [key, mult] : acc_) out.push_back({mult, key.first, key.second});
        return out;  // map order is (matrix_size, conductor) ascending
    }

private:
    unsigned long p_;
    std::map<std::pair<Integer, Integer>, Integer> acc_;
};

Integer phi_of_conductor(const Integer& conductor) {
    // conductor is 1 or a prime power p^lambda with p^lambda > 2
    if (conductor == 1) return 1;
    Integer p(2);
    while (conductor % p != 0) ++p;
    return conductor - conductor / p;
}

}  // namespace

Integer Decomposition::dimension() const {
    Integer total(0);
    for (const auto& c : components)
        total += c.multiplicity * c.matrix_size * c.matrix_size * phi_of_conductor(c.conductor);
    return total;
}

Decomposition decompose(const ValidatedPresentation& g) {
    const auto& pr = g.params();
    const unsigned long p = pr.p;
    const unsigned long ns = pr.n - pr.s;
    ComponentAccumulator acc(p);

    acc.add(1, 0, 0);  // the leading Q
    if (ns >= pr.m) {
        for (unsigned long lambda = 1; lambda <= pr.m; ++lambda)
            acc.add(prime_power(p, lambda) + prime_power(p, lambda - 1), 0, lambda);
        for (unsigned long lambda = pr.m + 1; lambda <= ns; ++lambda)
            acc.add(prime_power(p, pr.m), 0, lambda);
        for (unsigned long t = 1; t <= pr.s; ++t) acc.add(prime_power(p, pr.m - t), t, ns);
    } else {
        const unsigned long k = pr.m - ns;
        for (unsigned long lambda = 1; lambda <= ns; ++lambda)
            acc.add(prime_power(p, lambda) + prime_power(p, lambda - 1), 0, lambda);
        for (unsigned long lambda = ns + 1; lambda <= pr.m; ++lambda)
            acc.add(prime_power(p, ns), 0, lambda);
        const Integer phi_ns = phi_prime_power(p, ns);
        if (k <= pr.s - pr.r) {
            for (unsigned long t = 1; t + 1 <= k; ++t) {
                acc.add(prime_power(p, ns), t, ns);
                for (unsigned long lambda = ns + 1; lambda + t <= pr.m; ++lambda)
                    acc.add(phi_ns, t, lambda);
            }
            for (unsigned long t = k; t <= pr.s; ++t) acc.add(prime_power(p, pr.m - t), t, ns);
        } else {
            for (unsigned long t = 1; t <= pr.s - pr.r; ++t) {
                acc.add(prime_power(p, ns), t, ns);
                for (unsigned long lambda = ns + 1; lambda + t <= pr.m; ++lambda)
                    acc.add(phi_ns, t, lambda);
            }
            for (unsigned long t = pr.s - pr.r + 1; t <= pr.s; ++t)
                acc.add(prime_power(p, pr.n - pr.r - t), t, pr.m + pr.r - pr.s);
        }
    }
    return Decomposition{pr, acc.sorted()};
}

bool dimension_check(const Decomposition& d) {
    return d.dimension() == prime_power(d.params.p, d.params.n + d.params.m);
}

CrossCheckReport cross_check(const ValidatedPresentation& g) {
    CrossCheckReport report;
    report.formula = decompose(g);

    ComponentAccumulator acc(g.params().p);
    for (const auto& cls : galois_classes(g)) acc.add(1, cls.t, cls.conductor_exp);
    report.from_classes = Decomposition{g.params(), acc.sorted()};

    report.equal = report.formula.components == report.from_classes.components;
    if (!report.equal)
        report.details = "formula and Galois-class decompositions differ for " + g.params().to_string();
    return report;
}

CompareResult compare(const ValidatedPresentation& g1, const ValidatedPresentation& g2) {
    return decompose(g1).components == decompose(g2).components ? CompareResult::Equal
                                                                : CompareResult::Distinct;
}

}  // namespace metaq
