#include <benchmark/benchmark.h>

#include "gve/baselines.hpp"
#include "gve/clustering.hpp"
#include "gve/optimize.hpp"
#include "gve/rng.hpp"

namespace {

// ring with seeded random chords, deterministic
gve::Graph ring_with_chords(int n, int chords, uint64_t seed) {
    gve::Rng rng(seed);
    gve::Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
        g.node_names.push_back(std::to_string(i));
        g.node_index.emplace(g.node_names.back(), i);
    }
    for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1.0});
    int added = 0;
    while (added < chords) {
        int u = static_cast<int>(rng.integer(n));
        int v = static_cast<int>(rng.integer(n));
        if (u == v || (u + 1) % n == v || (v + 1) % n == u) continue;
        g.edges.push_back({std::min(u, v), std::max(u, v), 1.0});
        ++added;
    }
    return g;
}

gve::EmbeddingSet random_embedding(int n, int m, uint64_t seed) {
    gve::Rng rng(seed);
    gve::EmbeddingSet E;
    E.n = n;
    E.m = m;
    E.kappa = 1.0;
    E.e.resize(static_cast<size_t>(n) * m);
    for (double& x : E.e) x = rng.uniform(-3.0, 3.0);
    return E;
}

void BM_apsp(benchmark::State& state) {
    gve::Graph g = ring_with_chords(static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(0)) / 2, 1);
    for (auto _ : state) {
        gve::DistanceMatrix D = gve::apsp(g);
        benchmark::DoNotOptimize(D.d.data());
    }
}
BENCHMARK(BM_apsp)->Arg(64)->Arg(256)->Arg(1024);

void BM_stress(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    gve::DistanceMatrix D = gve::apsp(ring_with_chords(n, n / 2, 2));
    gve::EmbeddingSet E = random_embedding(n, 8, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(gve::stress(E, D, gve::LossKind::absolute, 1e-12));
}
BENCHMARK(BM_stress)->Arg(256)->Arg(1024);

void BM_stress_gradient(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    gve::DistanceMatrix D = gve::apsp(ring_with_chords(n, n / 2, 4));
    gve::EmbeddingSet E = random_embedding(n, 8, 5);
    for (auto _ : state) {
        auto g = gve::stress_gradient(E, D, gve::LossKind::absolute, 1e-12,
                                      gve::KappaMode::learned);
        benchmark::DoNotOptimize(g.coords.data());
    }
}
BENCHMARK(BM_stress_gradient)->Arg(256)->Arg(1024);

void BM_optimize_direct(benchmark::State& state) {
    gve::DistanceMatrix D = gve::apsp(ring_with_chords(128, 64, 6));
    gve::OptimConfig cfg;
    cfg.m = 2;
    cfg.iterations = 50;
    cfg.seed = 7;
    for (auto _ : state) {
        auto res = gve::optimize_direct(D, cfg);
        benchmark::DoNotOptimize(res.embedding.e.data());
    }
}
BENCHMARK(BM_optimize_direct);

void BM_mean_shift(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    gve::PointCloud pts = gve::PointCloud::from_embedding(random_embedding(n, 2, 8));
    for (auto _ : state) {
        auto p = gve::mean_shift(pts);
        benchmark::DoNotOptimize(p.labels.data());
    }
}
BENCHMARK(BM_mean_shift)->Arg(128)->Arg(512);

void BM_affinity_propagation(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    gve::PointCloud pts = gve::PointCloud::from_embedding(random_embedding(n, 2, 9));
    for (auto _ : state) {
        auto p = gve::affinity_propagation(pts);
        benchmark::DoNotOptimize(p.labels.data());
    }
}
BENCHMARK(BM_affinity_propagation)->Arg(128)->Arg(256);

void BM_louvain(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    gve::Graph g = ring_with_chords(n, 2 * n, 10);
    for (auto _ : state) {
        auto p = gve::louvain(g, 11);
        benchmark::DoNotOptimize(p.labels.data());
    }
}
BENCHMARK(BM_louvain)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
