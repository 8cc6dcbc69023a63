#include "gve/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "gve/parallel.hpp"

namespace gve {

double Graph::total_weight() const {
    double w = 0.0;
    for (const Edge& e : edges) w += e.w;
    return w;
}

bool Graph::unit_weights() const {
    for (const Edge& e : edges)
        if (e.w != 1.0) return false;
    return true;
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    return adj;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    Graph g;
    // key = min_index * 2^32 + max_index, for duplicate detection
    std::unordered_map<uint64_t, int> seen;

    auto intern = [&g](const std::string& id) {
        auto it = g.node_index.find(id);
        if (it != g.node_index.end()) return it->second;
        int idx = g.n++;
        g.node_index.emplace(id, idx);
        g.node_names.push_back(id);
        return idx;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::vector<std::string> tok = tokenize(line);
        if (tok.size() < 2 || tok.size() > 3)
            throw ParseError(lineno, "expected 'u v [w]', got " +
                                         std::to_string(tok.size()) + " token(s)");

        double w = 1.0;
        if (tok.size() == 3) {
            size_t pos = 0;
            try {
                w = std::stod(tok[2], &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad weight '" + tok[2] + "'");
            }
            if (pos != tok[2].size() || !std::isfinite(w))
                throw ParseError(lineno, "bad weight '" + tok[2] + "'");
            if (w <= 0.0)
                throw ParseError(lineno, "non-positive weight " + tok[2]);
        }

        int u = intern(tok[0]);
        int v = intern(tok[1]);
        if (u == v) throw ParseError(lineno, "self-loop on '" + tok[0] + "'");

        uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) |
                       static_cast<uint64_t>(std::max(u, v));
        auto [it, inserted] = seen.emplace(key, lineno);
        if (!inserted)
            throw ParseError(lineno, "duplicate edge '" + tok[0] + " " + tok[1] +
                                         "' (first seen on line " +
                                         std::to_string(it->second) + ")");

        g.edges.push_back(Edge{u, v, w});
    }
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    auto adj = g.adjacency();
    int ncomp = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        // BFS flood fill
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u]) {
                (void)w;
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    // component ids already follow smallest-member order (s scans ascending)
    std::vector<std::vector<int>> out(ncomp);
    for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
    return out;
}

double DistanceMatrix::max_value() const {
    double mx = 0.0;
    for (double x : d) mx = std::max(mx, x);
    return mx;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void bfs_row(const std::vector<std::vector<std::pair<int, double>>>& adj,
             int src, double* dist, int n) {
    std::fill(dist, dist + n, kInf);
    dist[src] = 0.0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [v, w] : adj[u]) {
            (void)w;
            if (dist[v] == kInf) {
                dist[v] = dist[u] + 1.0;
                q.push(v);
            }
        }
    }
}

void dijkstra_row(const std::vector<std::vector<std::pair<int, double>>>& adj,
                  int src, double* dist, int n) {
    std::fill(dist, dist + n, kInf);
    dist[src] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.emplace(0.0, src);
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > dist[u]) continue;
        for (auto [v, w] : adj[u]) {
            double cand = du + w;
            if (cand < dist[v]) {
                dist[v] = cand;
                pq.emplace(cand, v);
            }
        }
    }
}

}  // namespace

DistanceMatrix apsp(const Graph& g) {
    DistanceMatrix D;
    D.n = g.n;
    D.d.assign(static_cast<size_t>(g.n) * g.n, 0.0);
    if (g.n == 0) return D;

    auto adj = g.adjacency();
    bool unit = g.unit_weights();

    parallel_chunks(g.n, std::min(g.n, 64), [&](int, int begin, int end) {
        for (int s = begin; s < end; ++s) {
            double* row = D.d.data() + static_cast<size_t>(s) * g.n;
            if (unit)
                bfs_row(adj, s, row, g.n);
            else
                dijkstra_row(adj, s, row, g.n);
        }
    });

    // enforce exact symmetry: per-source runs may sum the same path's
    // weights in different orders
    if (!unit) {
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j) {
                double v = std::min(D.at(i, j), D.at(j, i));
                D.at(i, j) = v;
                D.at(j, i) = v;
            }
    }

    // disconnected rule: cross-component distance = global max finite + 1
    double max_finite = 0.0;
    bool any_inf = false;
    for (double x : D.d) {
        if (x == kInf)
            any_inf = true;
        else
            max_finite = std::max(max_finite, x);
    }
    if (any_inf) {
        double cross = max_finite + 1.0;  // 1 when the graph has no edges
        for (double& x : D.d)
            if (x == kInf) x = cross;
    }
    return D;
}

}  // namespace gve
