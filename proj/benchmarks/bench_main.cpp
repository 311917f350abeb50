#include <benchmark/benchmark.h>

#include "metaq/oracle.hpp"
#include "metaq/wedderburn.hpp"

using namespace metaq;

namespace {

ValidatedPresentation group(unsigned long p, unsigned long n, unsigned long m, unsigned long r,
                            unsigned long s) {
    return ValidatedPresentation::validate({p, n, m, r, s});
}

void BM_GroupMultiply(benchmark::State& state) {
    const auto g = group(2, 5, 4, 2, 3);
    const GroupElement x = g.element(13, 7);
    const GroupElement y = g.element(29, 11);
    for (auto _ : state) benchmark::DoNotOptimize(g.multiply(x, y));
}
BENCHMARK(BM_GroupMultiply);

void BM_GroupPower(benchmark::State& state) {
    const auto g = group(2, 5, 4, 2, 3);
    const GroupElement x = g.element(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(g.power(x, g.group_order() - 1));
}
BENCHMARK(BM_GroupPower);

void BM_CyclotomicMultiply(benchmark::State& state) {
    const unsigned long level = static_cast<unsigned long>(state.range(0));
    std::vector<Rational> ca(to_ulong(phi_prime_power(2, level))), cb = ca;
    for (std::size_t d = 0; d < ca.size(); ++d) {
        ca[d] = make_rational(Integer(d + 1), Integer(3));
        cb[d] = make_rational(Integer(2 * d + 1), Integer(5));
    }
    const auto x = CyclotomicNumber::from_coefficients(2, level, ca);
    const auto y = CyclotomicNumber::from_coefficients(2, level, cb);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(4)->Arg(6)->Arg(8);

void BM_CyclotomicInverse(benchmark::State& state) {
    const unsigned long level = static_cast<unsigned long>(state.range(0));
    std::vector<Rational> ca(to_ulong(phi_prime_power(2, level)));
    for (std::size_t d = 0; d < ca.size(); ++d) ca[d] = make_rational(Integer(d + 1), Integer(3));
    const auto x = CyclotomicNumber::from_coefficients(2, level, ca);
    for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(4)->Arg(6);

void BM_Decompose(benchmark::State& state) {
    const auto g = group(2, 5, 4, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose);

void BM_GaloisClasses(benchmark::State& state) {
    const auto g = group(2, 5, 4, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(galois_classes(g));
}
BENCHMARK(BM_GaloisClasses);

void BM_CrossCheck(benchmark::State& state) {
    const auto g = group(3, 3, 3, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(cross_check(g).equal);
}
BENCHMARK(BM_CrossCheck);

void BM_Orthogonality(benchmark::State& state) {
    const auto g = group(2, 4, 3, 0, 2);  // order 128
    for (auto _ : state) benchmark::DoNotOptimize(orthogonality_report(g).ok);
}
BENCHMARK(BM_Orthogonality);

void BM_InducedRationalRep(benchmark::State& state) {
    const auto g = group(2, 5, 4, 2, 3);
    const auto classes = galois_classes(g);
    const auto& faithful = classes.back();
    for (auto _ : state) benchmark::DoNotOptimize(rational_rep_for(g, faithful).degree);
}
BENCHMARK(BM_InducedRationalRep);

void BM_SweepDecompose(benchmark::State& state) {
    const auto tuples = enumerate_valid_tuples({2, 3, 5}, Integer(6561));
    for (auto _ : state) {
        Integer total(0);
        for (const auto& params : tuples)
            total += decompose(ValidatedPresentation::validate(params)).dimension();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_SweepDecompose);

}  // namespace

BENCHMARK_MAIN();
