#include <benchmark/benchmark.h>

#include "demazure/closedforms.hpp"
#include "demazure/cvmod.hpp"
#include "demazure/macdonald.hpp"
#include "demazure/qalg.hpp"

using namespace demazure;

static void BM_qbinom_division(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qbinom_by_division(n, n / 2));
}
BENCHMARK(BM_qbinom_division)->Arg(20)->Arg(40)->Arg(80);

static void BM_basis_char(benchmark::State& state) {
    // uncached oracle path; size scales with the number of basis tuples
    Partition xi{3, 3, 2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(basis_char(xi));
}
BENCHMARK(BM_basis_char);

static void BM_weyl_tensor(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    GradedCharacter w = weyl_char(m);
    for (auto _ : state) benchmark::DoNotOptimize(tensor(w, w));
}
BENCHMARK(BM_weyl_tensor)->Arg(6)->Arg(10)->Arg(14);

static void BM_flag_decompose(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    GradedCharacter prod = tensor(weyl_char(m), weyl_char(m));
    for (auto _ : state) benchmark::DoNotOptimize(demazure_flag_decompose(prod, 2));
}
BENCHMARK(BM_flag_decompose)->Arg(6)->Arg(10);

static void BM_determinant(benchmark::State& state) {
    const long r = state.range(0);
    BinomialMatrix m = matrix_A(r, r);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_determinant)->Arg(8)->Arg(12)->Arg(16);

static void BM_pieri_expand(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pieri_expand(n, n));
}
BENCHMARK(BM_pieri_expand)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
