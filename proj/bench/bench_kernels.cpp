#include <benchmark/benchmark.h>

#include <vector>

#include "mahler/kernels.hpp"
#include "mahler/random.hpp"

using namespace mahler;

namespace {

std::vector<Polygon> bodies(std::size_t count, bool centered) {
    Rng rng(2024);
    std::vector<Polygon> out;
    for (std::size_t i = 0; i < count; ++i) {
        Polygon k = random_cyclic(rng, 5 + static_cast<int>(i % 20), 0.2);
        out.push_back(centered ? santalo_centered(k) : k);
    }
    return out;
}

void BM_VolumeProductsSerial(benchmark::State& st) {
    const auto ks = bodies(static_cast<std::size_t>(st.range(0)), true);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::volume_products_serial(ks));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_VolumeProductsParallel(benchmark::State& st) {
    const auto ks = bodies(static_cast<std::size_t>(st.range(0)), true);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::volume_products_parallel(ks));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SantaloPointsSerial(benchmark::State& st) {
    const auto ks = bodies(static_cast<std::size_t>(st.range(0)), false);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::santalo_points_serial(ks));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SantaloPointsParallel(benchmark::State& st) {
    const auto ks = bodies(static_cast<std::size_t>(st.range(0)), false);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::santalo_points_parallel(ks));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_RadialPolarAreaSerial(benchmark::State& st) {
    const Polygon k = regular_polygon(64);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::radial_polar_area_serial(k, {0.1, 0.05}, static_cast<int>(st.range(0))));
}

void BM_RadialPolarAreaParallel(benchmark::State& st) {
    const Polygon k = regular_polygon(64);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::radial_polar_area_parallel(k, {0.1, 0.05}, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_VolumeProductsSerial)->Arg(256)->Arg(4096);
BENCHMARK(BM_VolumeProductsParallel)->Arg(256)->Arg(4096);
BENCHMARK(BM_SantaloPointsSerial)->Arg(64)->Arg(1024);
BENCHMARK(BM_SantaloPointsParallel)->Arg(64)->Arg(1024);
BENCHMARK(BM_RadialPolarAreaSerial)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_RadialPolarAreaParallel)->Arg(1 << 14)->Arg(1 << 20);

BENCHMARK_MAIN();
