#include "qkoszul/cohomology.hpp"
#include "qkoszul/invariants.hpp"
#include "qkoszul/koszul.hpp"
#include "qkoszul/qalgebra.hpp"
#include "qkoszul/qmatrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qkoszul;

namespace {

Field field_of(int order) { return order ? Field::root_of_unity(order) : Field::generic(); }

// Reversed word: every pair starts out of order.
XiPoly reversed_word(int n, int len, bool tilde, Field f) {
    XiMonomial m;
    std::mt19937_64 rng(7);
    for (int k = 0; k < len; ++k) {
        const int r = std::uniform_int_distribution<int>(1, tilde ? n - 1 : n)(rng);
        const int s = tilde ? std::uniform_int_distribution<int>(r + 1, n)(rng) : std::uniform_int_distribution<int>(1, n)(rng);
        m.emplace_back(r, s);
    }
    std::sort(m.rbegin(), m.rend());
    return XiPoly::monomial(f, tilde, m, f.one());
}

void BM_XiNormalForm(benchmark::State& state) {
    const XiPoly p = reversed_word(4, static_cast<int>(state.range(0)), false, Field::generic());
    for (auto _ : state) benchmark::DoNotOptimize(xi_normal_form(p));
}
BENCHMARK(BM_XiNormalForm)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_TildeNormalForm(benchmark::State& state) {
    const XiPoly p = reversed_word(4, static_cast<int>(state.range(0)), true, Field::generic());
    for (auto _ : state) benchmark::DoNotOptimize(tilde_normal_form(p));
}
BENCHMARK(BM_TildeNormalForm)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

// args: n, d, zeta order (0 generic)
void BM_StrandHomology(benchmark::State& state) {
    const Field f = field_of(static_cast<int>(state.range(2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(strand_homology(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), f));
}
BENCHMARK(BM_StrandHomology)->Args({3, 6, 0})->Args({4, 6, 0})->Args({4, 6, 11})->Unit(benchmark::kMillisecond);

void BM_Equivariance(benchmark::State& state) {
    const Field f = field_of(static_cast<int>(state.range(2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(equivariance_check(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), f));
}
BENCHMARK(BM_Equivariance)->Args({3, 4, 0})->Args({4, 4, 0})->Args({3, 4, 7})->Unit(benchmark::kMillisecond);

void BM_StepTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int a = 0; a < n; ++a) benchmark::DoNotOptimize(step_lemma_table(n, a, Field::generic()));
}
BENCHMARK(BM_StepTable)->DenseRange(3, 7, 2);

void BM_GramRank(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Weight beta = k * Weight::root(3, 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(pairing_gram_rank(3, beta, Field::generic()));
}
BENCHMARK(BM_GramRank)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// Twisted decomposition of the orbit invariant of (1, ..., 1, 0, ..., 0).
void BM_Decompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Field f = Field::generic();
    Weight l(n);
    for (int r = 1; r <= n / 2; ++r) l[r] = 1;
    const GroupAlgebraElement g = *orbit_invariant_basis(l, stabilizer_of_first(n), f);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
