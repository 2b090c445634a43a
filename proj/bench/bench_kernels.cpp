// OpenMP kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "kawa/fourier.hpp"
#include "kawa/imatrix.hpp"

using namespace kawa;

namespace
{

IMatrix random_matrix(int n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    IMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = u(rng);
            m(i, j) = Interval(x, x + 1e-12);
        }
    return m;
}

ISeq random_seq(int n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Interval> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c)
        x = Interval(u(rng));
    return ISeq(50.0, Parity::even, std::move(c));
}

void bm_matmul(benchmark::State& st)
{
    const IMatrix a = random_matrix(static_cast<int>(st.range(0)), 1);
    const IMatrix b = random_matrix(static_cast<int>(st.range(0)), 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::matmul(a, b));
}

void bm_matmul_serial(benchmark::State& st)
{
    const IMatrix a = random_matrix(static_cast<int>(st.range(0)), 1);
    const IMatrix b = random_matrix(static_cast<int>(st.range(0)), 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
}

void bm_conv(benchmark::State& st)
{
    const ISeq u = random_seq(static_cast<int>(st.range(0)), 3);
    const ISeq v = random_seq(static_cast<int>(st.range(0)), 4);
    for (auto _ : st)
        benchmark::DoNotOptimize(conv(u, v));
}

void bm_conv_serial(benchmark::State& st)
{
    const ISeq u = random_seq(static_cast<int>(st.range(0)), 3);
    const ISeq v = random_seq(static_cast<int>(st.range(0)), 4);
    for (auto _ : st)
        benchmark::DoNotOptimize(conv_serial(u, v));
}

} // namespace

BENCHMARK(bm_matmul)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_matmul_serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_conv)->Arg(300)->Arg(1000)->Arg(3000)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_conv_serial)->Arg(300)->Arg(1000)->Arg(3000)->Unit(benchmark::kMicrosecond);

int main(int argc, char** argv)
{
    benchmark::Initialize(&argc, argv);
    benchmark::AddCustomContext("omp_threads", std::to_string(omp_get_max_threads()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
