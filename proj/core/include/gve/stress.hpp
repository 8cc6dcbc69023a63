#pragma once

#include <cstdint>
#include <vector>

#include "gve/embedding.hpp"
#include "gve/graph.hpp"

namespace gve {

enum class LossKind { absolute, relative };

enum class KappaMode { fixed, learned };

// Squared discrepancy of one embedding distance against the target:
// absolute -> (d - D)^2, relative -> (d/D - 1)^2. D_ij must be positive.
double pair_loss(double d, double D_ij, LossKind kind);

// Average pairwise discrepancy over unordered pairs,
// 2/(n(n-1)) * sum_{i>j} pair_loss(pair_distance(e_i, e_j), D_ij).
// Zero for n < 2.
double stress(const EmbeddingSet& E, const DistanceMatrix& D, LossKind kind,
              double epsilon = 0.0);

struct StressGradient {
    std::vector<double> coords;  // n*m, same layout as EmbeddingSet::e
    double dalpha = 0.0;         // 0 when kappa is fixed
};

// Analytic gradient of stress with respect to every embedding coordinate
// and, when mode == learned, the unconstrained parameter alpha behind kappa.
StressGradient stress_gradient(const EmbeddingSet& E, const DistanceMatrix& D,
                               LossKind kind, double epsilon,
                               KappaMode mode = KappaMode::fixed);

// Pair subset variants used for minibatched optimization. Pairs are (i, j)
// with i != j; the value is the mean pair_loss over the given pairs, which
// matches stress when the subset is all unordered pairs.
struct PairList {
    std::vector<std::pair<int, int>> pairs;
};

double stress_on_pairs(const EmbeddingSet& E, const DistanceMatrix& D,
                       LossKind kind, double epsilon, const PairList& batch);

StressGradient stress_gradient_on_pairs(const EmbeddingSet& E,
                                        const DistanceMatrix& D, LossKind kind,
                                        double epsilon, KappaMode mode,
                                        const PairList& batch);

}  // namespace gve
