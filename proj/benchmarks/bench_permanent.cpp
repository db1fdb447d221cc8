#include <benchmark/benchmark.h>

#include "permabound/permanent.hpp"
#include "permabound/random.hpp"

using namespace permabound;

namespace {

ComplexMatrix gaussian(int n) {
    return random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 1234, static_cast<std::uint64_t>(n));
}

void BM_PerNaive(benchmark::State& state) {
    ComplexMatrix z = gaussian(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Complex v = per_naive(z);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PerNaive)->DenseRange(6, 10);

void BM_PerRyser(benchmark::State& state) {
    ComplexMatrix z = gaussian(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Complex v = per_ryser(z);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PerRyser)->DenseRange(8, 22, 2)->Unit(benchmark::kMicrosecond);

void BM_PerRyserWorkers(benchmark::State& state) {
    ComplexMatrix z = gaussian(20);
    for (auto _ : state) {
        Complex v = per_ryser(z, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PerRyserWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SubsetIteration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (IndexSubset s : iter_subsets(n, n / 2)) acc ^= s.bits();
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_SubsetIteration)->Arg(16)->Arg(20)->Arg(24);

} // namespace
