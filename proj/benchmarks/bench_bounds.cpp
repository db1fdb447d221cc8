#include <benchmark/benchmark.h>

#include "permabound/bounds.hpp"
#include "permabound/convolution.hpp"
#include "permabound/linforms.hpp"
#include "permabound/random.hpp"

using namespace permabound;

namespace {

void BM_BoundClassic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 77, 0);
    for (auto _ : state) {
        double b = bound_classic(z);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BoundClassic)->Arg(10)->Arg(30)->Arg(60);

void BM_BoundPartition(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ColumnPartition p = random_partition(n, 78, 0, 0);
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 77, 1);
    for (auto _ : state) {
        double b = bound_partition(z, p);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BoundPartition)->Arg(10)->Arg(30)->Arg(60);

void BM_Esym(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    WeightVector y = random_weights(n, 79, 0, 0);
    for (auto _ : state) {
        double e = esym(y, n / 2);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_Esym)->Arg(16)->Arg(63);

void BM_MasterInequality(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int l = 2 * n / 3, m = l / 2;
    ProductSetFunction g(random_weights(n, 80, 0, 0));
    SetFunction h = random_set_function(n, l - m, 80, 0, 1);
    for (auto _ : state) {
        InequalityReport rep = master_inequality_check(g, h, n, l, m);
        benchmark::DoNotOptimize(rep.slack);
    }
}
BENCHMARK(BM_MasterInequality)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_ConvCoefficients(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ConvCoefficients cc = conv_coefficients(2 * n / 3, n / 3, n);
        benchmark::DoNotOptimize(cc.constant().to_double());
    }
}
BENCHMARK(BM_ConvCoefficients)->Arg(8)->Arg(12)->Arg(16);

void BM_ExpandProduct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, 4, nullptr, 81, 0);
    for (auto _ : state) {
        SparsePolynomial p = expand_product(z);
        benchmark::DoNotOptimize(p.term_count());
    }
}
BENCHMARK(BM_ExpandProduct)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
