#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gve/embedding.hpp"
#include "gve/graph.hpp"
#include "gve/metrics.hpp"

namespace gve {

struct PointCloud {
    int n = 0;
    int dim = 0;
    std::vector<double> x;  // row-major n*dim

    const double* point(int i) const { return x.data() + static_cast<size_t>(i) * dim; }

    static PointCloud from_embedding(const EmbeddingSet& E) {
        return PointCloud{E.n, E.m, E.e};
    }
};

// Median pairwise Euclidean distance; 0 for n < 2.
double median_pairwise_distance(const PointCloud& pts);

// Flat-kernel mean shift. bandwidth <= 0 selects the automatic value
// 0.5 * median pairwise distance. Modes closer than bandwidth/2 merge.
Partition mean_shift(const PointCloud& pts, double bandwidth = 0.0);

// Responsibility/availability message passing on s(i,j) = -|pi-pj|^2.
// preference = nullopt uses the median off-diagonal similarity. If the
// messages have not stabilized after 200 iterations the current exemplar
// assignment is returned and *converged (when given) is set to false.
Partition affinity_propagation(const PointCloud& pts,
                               std::optional<double> preference = std::nullopt,
                               double damping = 0.5, bool* converged = nullptr);

enum class Linkage { average, complete, single };

// Bottom-up merging until k clusters remain; ties break on smallest indices.
Partition agglomerative(const PointCloud& pts, int k, Linkage linkage);

// Density clustering; noise points become singleton communities so the
// result is always a full partition.
Partition dbscan(const PointCloud& pts, double eps, int min_pts);

struct SweepConfig {
    std::vector<double> mean_shift_bandwidth_factors{0.5, 1.0, 2.0};
    std::vector<double> affinity_preference_factors{1.0, 2.0};
    double affinity_damping = 0.5;
    int agglomerative_max_k = 12;
    Linkage agglomerative_linkage = Linkage::average;
    std::vector<double> dbscan_eps_quantiles{0.10, 0.25, 0.50};
    std::vector<int> dbscan_min_pts{3, 5};
};

struct CommunityResult {
    std::string algorithm;
    std::string params;
    Partition partition;
    double modularity = 0.0;
};

// Runs every requested algorithm over its hyperparameter grid on the
// embedding point cloud, scores each partition by modularity on the graph,
// and returns all results sorted by (modularity desc, algorithm, params).
// algorithms is a subset of {"mean_shift", "affinity", "agglo", "dbscan"}.
std::vector<CommunityResult> detect_communities(const Graph& g,
                                                const EmbeddingSet& E,
                                                const std::set<std::string>& algorithms,
                                                const SweepConfig& sweep = {});

}  // namespace gve
