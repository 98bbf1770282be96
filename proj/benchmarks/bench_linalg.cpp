#include <benchmark/benchmark.h>

#include <random>

#include "pants/exact/linalg.hpp"

using namespace pants::exact;

namespace {

RatMatrix seeded_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    return m;
}

RatMatrix seeded_invertible(std::size_t n, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        RatMatrix m = seeded_matrix(n, s);
        if (!det(m).is_zero()) return m;
    }
}

void bm_rref(benchmark::State& state) {
    RatMatrix m = seeded_matrix(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->Arg(8)->Arg(16)->Arg(30);

void bm_det_bareiss(benchmark::State& state) {
    RatMatrix m = seeded_matrix(state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(bm_det_bareiss)->Arg(8)->Arg(16)->Arg(30);

void bm_invert(benchmark::State& state) {
    RatMatrix m = seeded_invertible(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(invert(m));
}
BENCHMARK(bm_invert)->Arg(8)->Arg(16);

}  // namespace
