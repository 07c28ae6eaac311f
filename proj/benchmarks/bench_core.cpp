#include <benchmark/benchmark.h>

#include "orbitmult/branching.hpp"
#include "orbitmult/cg_solver.hpp"
#include "orbitmult/oracle.hpp"

namespace {

using namespace orbitmult;

void BM_CgMultiplicity(benchmark::State& state) {
    const DominantWeight lambda({5, 3, 3, 1});
    const DominantWeight mu({6, 3, 3, 2});
    const Rational alpha(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cg_multiplicity(lambda, alpha, mu));
    }
}
BENCHMARK(BM_CgMultiplicity);

void BM_HermitianEigenvalues(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(7);
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rng.complex_gaussian();
            m(j, i) = std::conj(m(i, j));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(m));
    }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(3)->Arg(8);

void BM_PieriStrip(benchmark::State& state) {
    const DominantWeight lambda({4, 2, 0, -2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor_with_dual_sym(lambda, 6));
    }
}
BENCHMARK(BM_PieriStrip);

void BM_RandomizedSearch(benchmark::State& state) {
    const DominantWeight lambda({2, 0, -1});
    const DominantWeight mu({3, 0, -1});
    OracleConfig cfg;
    cfg.tol = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(randomized_search(lambda, 2.0, mu, 200000, cfg));
    }
}
BENCHMARK(BM_RandomizedSearch);

} // namespace
