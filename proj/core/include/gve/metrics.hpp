#pragma once

#include <vector>

#include "gve/embedding.hpp"
#include "gve/graph.hpp"

namespace gve {

// Assignment of each vertex to exactly one community, labels 0..k-1.
struct Partition {
    std::vector<int> labels;
    int k = 0;
};

// Relabels arbitrary integer labels to contiguous 0..k-1 in first-appearance
// order.
Partition make_partition(const std::vector<int>& raw);

// Root-mean-square embedding distance error over unordered pairs,
// evaluated with epsilon = 0. Requires n >= 2.
double rmse(const EmbeddingSet& E, const DistanceMatrix& D);

// Relative variant: residuals are d/D - 1.
double rmrse(const EmbeddingSet& E, const DistanceMatrix& D);

// Newman-Girvan modularity with edge weights,
// Q = sum_c [ w_in_c / w - (deg_c / 2w)^2 ]. Zero for an edgeless graph.
double modularity(const Graph& g, const Partition& p);

// Adjusted Rand score in [-1, 1] via the pair-counting contingency table.
double adjusted_rand_score(const Partition& a, const Partition& b);

// Mutual information normalized by the arithmetic mean of the label
// entropies; 0/0 (both partitions trivial) is defined as 1.
double normalized_mutual_info(const Partition& a, const Partition& b);

}  // namespace gve
