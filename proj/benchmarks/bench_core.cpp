#include <benchmark/benchmark.h>

#include <random>

#include "zgrass/freealg.hpp"
#include "zgrass/verify.hpp"

namespace {

using namespace zgrass;

FiniteModel demo_model() {
    GradingSpec spec({-1, 0, 1}, {UpperIndex::infinity(), UpperIndex::finite(2),
                                  UpperIndex::infinity()});
    return FiniteModel(spec, {4, 2, 4});
}

void BM_MonoMul(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (int i = 0; i < 1024; ++i)
        pairs.emplace_back(Monomial::from_bits(rng() & 0x3ff),
                           Monomial::from_bits(rng() & 0x3ff));
    std::size_t i = 0;
    for (auto _ : state) {
        auto p = mono_mul(pairs[i & 1023].first, pairs[i & 1023].second);
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(BM_MonoMul);

void BM_ElementMul(benchmark::State& state) {
    std::mt19937_64 rng(11);
    Element a(10), b(10);
    for (int t = 0; t < 8; ++t) {
        a.add_term(Monomial::from_bits(rng() & 0x3ff), Rational(1 + t));
        b.add_term(Monomial::from_bits(rng() & 0x3ff), Rational(2 * t - 5));
    }
    for (auto _ : state) {
        Element c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ElementMul);

void BM_ComponentBasis(benchmark::State& state) {
    FiniteModel model = demo_model();
    for (auto _ : state) {
        auto basis = model.component_basis(0, 4);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_ComponentBasis);

void BM_IdentityCheck(benchmark::State& state) {
    FiniteModel model = demo_model();
    GradedPolynomial f = parse_poly("[x1@1, x2@-1, x3@0]");
    Scope scope = Scope::for_degree(3);
    for (auto _ : state) {
        Verdict v = is_graded_identity(f, model, scope);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_IdentityCheck);

void BM_SupportSearch(benchmark::State& state) {
    GradingSpec spec({-9, 1, 6}, {UpperIndex::infinity(), UpperIndex::finite(1),
                                  UpperIndex::infinity()});
    for (auto _ : state) {
        auto q = support_contains(spec, 23, 40);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_SupportSearch);

}  // namespace

BENCHMARK_MAIN();
