#pragma once

#include <cstdint>
#include <vector>

#include "gve/stress.hpp"

namespace gve {

struct OptimConfig {
    LossKind loss_kind = LossKind::absolute;
    KappaMode kappa_mode = KappaMode::learned;
    double kappa_value = 1.0;  // used when kappa_mode == fixed
    int m = 2;
    int iterations = 2000;
    double learning_rate = 0.05;        // embedding coordinates
    double alpha_learning_rate = 0.01;  // kappa reparameterization
    int64_t pair_batch = 0;             // 0 = automatic (see optimize_direct)
    uint64_t seed = 42;
    double epsilon = 1e-12;

    void validate() const;  // throws std::invalid_argument
};

struct OptimResult {
    EmbeddingSet embedding;
    std::vector<double> loss_trace;  // stress per iteration, entry 0 = initial
};

// Minimizes stress by Adam from a seeded random initialization. All pairs are
// scored every step while n(n-1)/2 <= 131072; beyond that a seeded minibatch
// of 65536 pairs per step is sampled (or cfg.pair_batch when positive).
// Deterministic given the config. Throws on a non-finite loss, naming the
// iteration.
OptimResult optimize_direct(const DistanceMatrix& D, const OptimConfig& cfg);

}  // namespace gve
