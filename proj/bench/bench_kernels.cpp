// Serial reference vs OpenMP version of each kernel.

#include "iterlog/random.hpp"
#include "iterlog/stirling.hpp"
#include "iterlog/sz_operators.hpp"
#include "iterlog/trimat.hpp"

#include <benchmark/benchmark.h>

using namespace iterlog;

namespace {

TriWindow<Rational> random_window(int size, std::uint64_t seed)
{
    Rng rng(seed);
    TriWindow<Rational> m(size);
    for (int i = 0; i < size; ++i) {
        for (int j = i; j < size; ++j) {
            m.set(i, j, random_rational(rng));
        }
    }
    return m;
}

void BM_mat_mul(benchmark::State& state, Exec exec)
{
    const int size = static_cast<int>(state.range(0));
    const auto a = random_window(size, 1);
    const auto b = random_window(size, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(a, b, exec));
    }
}

// chain-sum kernel through the path-sum route (no cache in between)
void BM_chain_sums(benchmark::State& state, Exec exec)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(c_sequence(CRoute::pathsum, n, exec));
    }
}

void BM_verify_sz(benchmark::State& state, Exec exec)
{
    const int v = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_sz(v, v, exec));
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_mat_mul, serial, Exec::serial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_mat_mul, parallel, Exec::parallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_chain_sums, serial, Exec::serial)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_chain_sums, parallel, Exec::parallel)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_verify_sz, serial, Exec::serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_verify_sz, parallel, Exec::parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
