#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gve/graph.hpp"
#include "gve/metrics.hpp"

namespace gve {

// Two-phase Louvain (local moving + aggregation) with seeded visiting order.
// Moves are accepted only above a 1e-7 modularity gain. q_trace, when given,
// receives the modularity of the induced partition after every local-moving
// pass; it is non-decreasing. An edgeless graph yields the singleton
// partition.
Partition louvain(const Graph& g, uint64_t seed,
                  std::vector<double>* q_trace = nullptr);

// Iteratively removes the highest-betweenness edge (recomputed after every
// removal). With target_k set, returns the first partition with >= k
// components; otherwise the intermediate partition with maximum modularity.
Partition girvan_newman(const Graph& g, std::optional<int> target_k = std::nullopt);

// Clauset-Newman-Moore agglomeration: repeatedly merges the community pair
// with the largest positive modularity gain.
Partition greedy_modularity(const Graph& g);

// Asynchronous label propagation with seeded sweep order and random
// tie-breaking; stops when every vertex holds a plurality label among its
// neighbors, or after 100 sweeps.
Partition label_propagation(const Graph& g, uint64_t seed);

// Kernighan-Lin bisection into two balanced halves (one-vertex imbalance for
// odd n) minimizing cut weight, from a seeded initial split.
Partition kernighan_lin(const Graph& g, uint64_t seed);

}  // namespace gve
