#include <benchmark/benchmark.h>

#include "fcmlab/datagen.hpp"
#include "fcmlab/fcm.hpp"
#include "fcmlab/inertia.hpp"
#include "fcmlab/selection.hpp"

using namespace fcmlab;

namespace {

Dataset gaussian(int clusters, int per_cluster, std::uint64_t seed) {
    GaussianSpec spec;
    spec.cluster_count = clusters;
    spec.points_per_cluster = per_cluster;
    spec.seed = seed;
    return gen_gaussian_clusters(spec);
}

void BM_UpdateMemberships(benchmark::State& state) {
    const Dataset data = ruspini_fixture();
    const Centroids centroids = initialize_centroids(data, 4, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(update_memberships(data, centroids, 2.0));
    }
}
BENCHMARK(BM_UpdateMemberships);

void BM_FitRuspiniK4(benchmark::State& state) {
    const Dataset data = ruspini_fixture();
    FcmConfig cfg;
    cfg.cluster_count = 4;
    cfg.seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit(data, cfg));
    }
}
BENCHMARK(BM_FitRuspiniK4);

void BM_FitGaussian(benchmark::State& state) {
    const Dataset data = gaussian(static_cast<int>(state.range(0)), 50, 7);
    FcmConfig cfg;
    cfg.cluster_count = static_cast<int>(state.range(0));
    cfg.seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit(data, cfg));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_FitGaussian)->Arg(3)->Arg(5);

void BM_ComputeIndices(benchmark::State& state) {
    const Dataset data = ruspini_fixture();
    FcmConfig cfg;
    cfg.cluster_count = 4;
    cfg.seed = 1;
    const ClusterModel model = fit(data, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_indices(data, model, 2.0));
    }
}
BENCHMARK(BM_ComputeIndices);

void BM_SweepRuspini(benchmark::State& state) {
    const Dataset data = ruspini_fixture();
    FcmConfig base;
    base.seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(data, base, 2, 12));
    }
}
BENCHMARK(BM_SweepRuspini);

} // namespace

BENCHMARK_MAIN();
