#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gve {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Undirected weighted graph. Vertices carry external string ids and are
// indexed 0..n-1 in first-appearance order of the input text.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::string> node_names;              // index -> id
    std::unordered_map<std::string, int> node_index;  // id -> index

    double total_weight() const;
    bool unit_weights() const;

    // adjacency[i] = list of (neighbor, weight); both directions of each edge
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

// Parses whitespace-separated lines "u v [w]". Lines beginning with '#'
// are comments, blank lines are skipped, w defaults to 1.0. Rejects
// self-loops, duplicate edges and non-positive weights.
Graph parse_edge_list(const std::string& text);

// Connected components as sorted vertex-index lists, ordered by smallest
// member. Covers all of 0..n-1.
std::vector<std::vector<int>> components(const Graph& g);

// Dense symmetric matrix of topological distances.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> d;  // row-major n*n

    double& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }

    // column j as a contiguous slice is not available (row-major); rows are.
    const double* row(int i) const { return d.data() + static_cast<size_t>(i) * n; }

    double max_value() const;
};

// All-pairs shortest paths. BFS per source when every weight is exactly 1,
// binary-heap Dijkstra otherwise. Vertices in different components get the
// maximum finite intra-component distance over the whole graph plus one
// (1 when the graph has no edges).
DistanceMatrix apsp(const Graph& g);

}  // namespace gve
