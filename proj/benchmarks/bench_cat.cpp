#include <benchmark/benchmark.h>

#include "pants/cat/random_reps.hpp"

using namespace pants::cat;

namespace {

void bm_validate(benchmark::State& state) {
    StarSumRep rep = random_pants(1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(validate(rep));
}
BENCHMARK(bm_validate)->Arg(3)->Arg(6);

void bm_to_autpair(benchmark::State& state) {
    StarSumRep rep = random_pants(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(to_autpair(rep));
}
BENCHMARK(bm_to_autpair)->Arg(3)->Arg(6);

void bm_hom_star(benchmark::State& state) {
    StarSumRep a = random_pants(3, static_cast<std::size_t>(state.range(0)));
    StarSumRep b = random_pants(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hom_star(a, b));
}
BENCHMARK(bm_hom_star)->Arg(3)->Arg(6);

}  // namespace
