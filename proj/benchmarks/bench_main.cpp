#include <benchmark/benchmark.h>

#include "toriczeta/gfan.hpp"
#include "toriczeta/heightzeta.hpp"
#include "toriczeta/intlat.hpp"

#include <random>

using namespace tz;

namespace {

GFan blp2_fan() {
    GFan f;
    f.rank = 2;
    f.q = 2;
    f.e = 1;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}, {1, 1}};
    f.max_cones = {{0, 3}, {1, 3}, {1, 2}, {0, 2}};
    f.frobenius = IntMatrix::identity(2);
    f.finalize();
    return f;
}

IntMatrix random_matrix(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-8, 8);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

void BM_snf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::vector<IntMatrix> inputs;
    for (int k = 0; k < 32; ++k) inputs.push_back(random_matrix(n, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        auto s = intlat::snf(inputs[i++ % inputs.size()]);
        benchmark::DoNotOptimize(s.D);
    }
}
BENCHMARK(BM_snf)->Arg(4)->Arg(8)->Arg(12);

void BM_local_factor(benchmark::State& state) {
    GFan f = blp2_fan();
    Place v{true, {0, 1}, 1};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = heightzeta::local_factor(f, v, n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_local_factor)->Arg(6)->Arg(10)->Arg(14);

void BM_zeta_coeffs(benchmark::State& state) {
    GFan f = blp2_fan();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto N = heightzeta::zeta_coeffs(f, n);
        benchmark::DoNotOptimize(N);
    }
}
BENCHMARK(BM_zeta_coeffs)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
