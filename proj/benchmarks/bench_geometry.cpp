#include <benchmark/benchmark.h>

#include "pants/geom/link.hpp"
#include "pants/geom/polyline.hpp"

using namespace pants::geom;

namespace {

void bm_link_point(benchmark::State& state) {
    GeomConfig cfg;
    double t = 0;
    for (auto _ : state) {
        t += 0.37;
        benchmark::DoNotOptimize(link_point({t, 1.3 * t}, cfg));
    }
}
BENCHMARK(bm_link_point);

void bm_trefoil_polyline(benchmark::State& state) {
    GeomConfig cfg;
    cfg.ray_samples = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(trefoil_polyline(cfg));
}
BENCHMARK(bm_trefoil_polyline)->Arg(512)->Arg(2048);

void bm_polyline_crossings(benchmark::State& state) {
    GeomConfig cfg;
    cfg.ray_samples = static_cast<int>(state.range(0));
    Polyline2 curve = trefoil_polyline(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(polyline_crossings(curve));
}
BENCHMARK(bm_polyline_crossings)->Arg(2048)->Arg(8192);

void bm_region_count_2d(benchmark::State& state) {
    GeomConfig cfg;
    Polyline2 curve = trefoil_polyline(cfg);
    cfg.grid_res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region_count_2d(curve, cfg));
}
BENCHMARK(bm_region_count_2d)->Arg(96)->Arg(192);

void bm_link_regions_3d(benchmark::State& state) {
    GeomConfig cfg;
    cfg.grid_res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(link_regions_3d(cfg));
}
BENCHMARK(bm_link_regions_3d)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

}  // namespace
