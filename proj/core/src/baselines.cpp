#include "gve/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "gve/parallel.hpp"
#include "gve/rng.hpp"

namespace gve {

namespace {

void shuffle_order(std::vector<int>& order, Rng& rng) {
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.integer(i)]);
}

}  // namespace

// ---------------------------------------------------------------------------
// Louvain
// ---------------------------------------------------------------------------

namespace {

struct WorkGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;  // no self entries
    std::vector<double> selfw;                             // self-loop weight
    std::vector<double> deg;                               // weighted degree incl. 2*self
    double w2 = 0.0;                                       // total degree = 2w
};

WorkGraph make_work_graph(const Graph& g) {
    WorkGraph wg;
    wg.n = g.n;
    wg.adj.resize(g.n);
    wg.selfw.assign(g.n, 0.0);
    wg.deg.assign(g.n, 0.0);
    for (const Edge& e : g.edges) {
        wg.adj[e.u].emplace_back(e.v, e.w);
        wg.adj[e.v].emplace_back(e.u, e.w);
        wg.deg[e.u] += e.w;
        wg.deg[e.v] += e.w;
    }
    for (double d : wg.deg) wg.w2 += d;
    return wg;
}

// One full local-moving phase; returns true if any vertex moved.
bool local_moving(const WorkGraph& wg, std::vector<int>& node_comm, Rng& rng,
                  const Graph& original, const std::vector<int>& vertex_comm_of_node,
                  std::vector<int>* vertex_comm, std::vector<double>* q_trace) {
    std::vector<double> comm_tot(wg.n, 0.0);
    for (int u = 0; u < wg.n; ++u) comm_tot[node_comm[u]] += wg.deg[u];

    std::vector<int> order(wg.n);
    for (int i = 0; i < wg.n; ++i) order[i] = i;
    shuffle_order(order, rng);

    std::map<int, double> k_u2c;  // ordered: deterministic tie-breaking
    bool any_move = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int u : order) {
            int c_old = node_comm[u];
            k_u2c.clear();
            k_u2c[c_old];  // staying is always a candidate
            for (auto [v, w] : wg.adj[u]) k_u2c[node_comm[v]] += w;

            comm_tot[c_old] -= wg.deg[u];
            double stay = k_u2c[c_old] - comm_tot[c_old] * wg.deg[u] / wg.w2;
            double best_score = stay;
            int best_c = c_old;
            for (auto [c, k] : k_u2c) {
                if (c == c_old) continue;
                double score = k - comm_tot[c] * wg.deg[u] / wg.w2;
                if (score > best_score) {  // first (smallest) community wins ties
                    best_score = score;
                    best_c = c;
                }
            }
            // require a real modularity gain over staying
            if (best_c != c_old && (best_score - stay) / (wg.w2 / 2.0) > 1e-7) {
                node_comm[u] = best_c;
                comm_tot[best_c] += wg.deg[u];
                improved = true;
                any_move = true;
            } else {
                node_comm[u] = c_old;
                comm_tot[c_old] += wg.deg[u];
            }
        }
        if (q_trace) {
            for (size_t v = 0; v < vertex_comm->size(); ++v)
                (*vertex_comm)[v] = node_comm[vertex_comm_of_node[v]];
            q_trace->push_back(modularity(original, make_partition(*vertex_comm)));
        }
    }
    return any_move;
}

}  // namespace

Partition louvain(const Graph& g, uint64_t seed, std::vector<double>* q_trace) {
    if (g.n == 0) return Partition{};
    if (g.edges.empty()) {
        std::vector<int> raw(g.n);
        for (int i = 0; i < g.n; ++i) raw[i] = i;
        return make_partition(raw);
    }

    Rng rng(seed);
    WorkGraph wg = make_work_graph(g);

    // vertex_comm[v] = community of original vertex v, tracked across levels
    std::vector<int> vertex_comm(g.n);
    std::vector<int> node_of_vertex(g.n);
    for (int v = 0; v < g.n; ++v) node_of_vertex[v] = v;

    for (;;) {
        std::vector<int> node_comm(wg.n);
        for (int u = 0; u < wg.n; ++u) node_comm[u] = u;

        bool moved = local_moving(wg, node_comm, rng, g, node_of_vertex,
                                  &vertex_comm, q_trace);
        for (int v = 0; v < g.n; ++v) vertex_comm[v] = node_comm[node_of_vertex[v]];
        if (!moved) break;

        // aggregate communities into super-nodes
        std::vector<int> remap(wg.n, -1);
        int nc = 0;
        for (int u = 0; u < wg.n; ++u)
            if (remap[node_comm[u]] < 0) remap[node_comm[u]] = nc++;

        WorkGraph next;
        next.n = nc;
        next.adj.resize(nc);
        next.selfw.assign(nc, 0.0);
        next.deg.assign(nc, 0.0);
        std::vector<std::unordered_map<int, double>> agg(nc);
        for (int u = 0; u < wg.n; ++u) {
            int cu = remap[node_comm[u]];
            next.selfw[cu] += wg.selfw[u];
            for (auto [v, w] : wg.adj[u]) {
                int cv = remap[node_comm[v]];
                if (cu == cv)
                    next.selfw[cu] += 0.5 * w;  // each intra edge visited twice
                else
                    agg[cu][cv] += w;
            }
        }
        for (int c = 0; c < nc; ++c) {
            // deterministic adjacency order
            std::map<int, double> sorted(agg[c].begin(), agg[c].end());
            for (auto [d, w] : sorted) next.adj[c].emplace_back(d, w);
            double s = 2.0 * next.selfw[c];
            for (auto [d, w] : next.adj[c]) {
                (void)d;
                s += w;
            }
            next.deg[c] = s;
            next.w2 += s;
        }
        if (nc == wg.n) break;
        for (int v = 0; v < g.n; ++v) node_of_vertex[v] = remap[vertex_comm[v]];
        wg = std::move(next);
    }
    return make_partition(vertex_comm);
}

// ---------------------------------------------------------------------------
// Girvan-Newman
// ---------------------------------------------------------------------------

namespace {

struct EdgeSet {
    int n;
    std::vector<Edge> edges;
    std::vector<bool> alive;

    std::vector<std::vector<std::pair<int, int>>> adjacency() const {
        std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
        for (size_t id = 0; id < edges.size(); ++id) {
            if (!alive[id]) continue;
            adj[edges[id].u].emplace_back(edges[id].v, static_cast<int>(id));
            adj[edges[id].v].emplace_back(edges[id].u, static_cast<int>(id));
        }
        return adj;
    }
};

Partition component_partition(const EdgeSet& es) {
    auto adj = es.adjacency();
    std::vector<int> comp(es.n, -1);
    int nc = 0;
    for (int s = 0; s < es.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, id] : adj[u]) {
                (void)id;
                if (comp[v] < 0) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
            }
        }
        ++nc;
    }
    return make_partition(comp);
}

// Brandes accumulation from one source; adds into edge_score.
void brandes_source(const EdgeSet& es,
                    const std::vector<std::vector<std::pair<int, int>>>& adj,
                    int src, bool unit, std::vector<double>& edge_score) {
    int n = es.n;
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<double> sigma(n, 0.0);
    std::vector<int> order;  // vertices in non-decreasing distance
    order.reserve(n);
    dist[src] = 0.0;
    sigma[src] = 1.0;

    if (unit) {
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (auto [v, id] : adj[u]) {
                (void)id;
                if (dist[v] == std::numeric_limits<double>::infinity()) {
                    dist[v] = dist[u] + 1.0;
                    q.push(v);
                }
                if (dist[v] == dist[u] + 1.0) sigma[v] += sigma[u];
            }
        }
    } else {
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        std::vector<bool> done(n, false);
        pq.emplace(0.0, src);
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (done[u]) continue;
            done[u] = true;
            order.push_back(u);
            for (auto [v, id] : adj[u]) {
                double w = es.edges[id].w;
                if (du + w < dist[v] - 1e-12) {
                    dist[v] = du + w;
                    sigma[v] = sigma[u];
                    pq.emplace(dist[v], v);
                } else if (std::abs(du + w - dist[v]) <= 1e-12 && !done[v]) {
                    sigma[v] += sigma[u];
                }
            }
        }
    }

    std::vector<double> delta(n, 0.0);
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        for (auto [u, id] : adj[v]) {
            // shortest-path DAG edge u -> v?
            double w = unit ? 1.0 : es.edges[id].w;
            if (std::abs(dist[u] + w - dist[v]) <= 1e-12 && sigma[v] > 0.0) {
                double c = sigma[u] / sigma[v] * (1.0 + delta[v]);
                edge_score[id] += c;
                delta[u] += c;
            }
        }
    }
}

std::vector<double> edge_betweenness(const EdgeSet& es) {
    auto adj = es.adjacency();
    bool unit = true;
    for (size_t id = 0; id < es.edges.size(); ++id)
        if (es.alive[id] && es.edges[id].w != 1.0) {
            unit = false;
            break;
        }

    int chunks = std::min(es.n, 32);
    std::vector<std::vector<double>> partial(
        chunks, std::vector<double>(es.edges.size(), 0.0));
    parallel_chunks(es.n, chunks, [&](int c, int begin, int end) {
        for (int s = begin; s < end; ++s)
            brandes_source(es, adj, s, unit, partial[c]);
    });
    std::vector<double> score(es.edges.size(), 0.0);
    for (const auto& p : partial)
        for (size_t id = 0; id < score.size(); ++id) score[id] += p[id];
    for (double& s : score) s *= 0.5;  // undirected: every pair counted twice
    return score;
}

}  // namespace

Partition girvan_newman(const Graph& g, std::optional<int> target_k) {
    if (g.n == 0) return Partition{};
    EdgeSet es{g.n, g.edges, std::vector<bool>(g.edges.size(), true)};

    Partition part = component_partition(es);
    if (target_k && part.k >= *target_k) return part;
    Partition best = part;
    double best_q = modularity(g, part);

    size_t remaining = g.edges.size();
    while (remaining > 0) {
        std::vector<double> score = edge_betweenness(es);
        int arg = -1;
        double mx = -1.0;
        for (size_t id = 0; id < score.size(); ++id) {
            if (!es.alive[id]) continue;
            if (score[id] > mx + 1e-12) {
                mx = score[id];
                arg = static_cast<int>(id);
            }
            // ties keep the earliest edge id (input order), deterministic
        }
        es.alive[arg] = false;
        --remaining;

        part = component_partition(es);
        if (target_k) {
            if (part.k >= *target_k) return part;
        } else {
            double q = modularity(g, part);
            if (q > best_q) {
                best_q = q;
                best = part;
            }
        }
    }
    return target_k ? part : best;
}

// ---------------------------------------------------------------------------
// Clauset-Newman-Moore greedy modularity
// ---------------------------------------------------------------------------

Partition greedy_modularity(const Graph& g) {
    if (g.n == 0) return Partition{};
    std::vector<int> comm(g.n);
    for (int i = 0; i < g.n; ++i) comm[i] = i;
    if (g.edges.empty()) return make_partition(comm);

    double w = g.total_weight();
    std::vector<double> a(g.n, 0.0);  // deg_c / 2w
    std::vector<std::map<int, double>> links(g.n);
    for (const Edge& e : g.edges) {
        a[e.u] += e.w / (2.0 * w);
        a[e.v] += e.w / (2.0 * w);
        links[e.u][e.v] += e.w / w;
        links[e.v][e.u] += e.w / w;
    }
    std::vector<bool> active(g.n, true);

    for (;;) {
        double best_gain = 0.0;
        int bi = -1, bj = -1;
        for (int c = 0; c < g.n; ++c) {
            if (!active[c]) continue;
            for (auto [d, e_cd] : links[c]) {
                if (d <= c) continue;
                double gain = e_cd - 2.0 * a[c] * a[d];
                if (gain > best_gain + 1e-15) {
                    best_gain = gain;
                    bi = c;
                    bj = d;
                }
            }
        }
        if (bi < 0) break;

        // merge bj into bi
        for (auto [d, e_jd] : links[bj]) {
            if (d == bi) continue;
            links[d].erase(bj);
            if (d != bi) {
                links[bi][d] += e_jd;
                links[d][bi] += e_jd;
            }
        }
        links[bi].erase(bj);
        links[bj].clear();
        a[bi] += a[bj];
        active[bj] = false;
        for (int v = 0; v < g.n; ++v)
            if (comm[v] == bj) comm[v] = bi;
    }
    return make_partition(comm);
}

// ---------------------------------------------------------------------------
// Asynchronous label propagation
// ---------------------------------------------------------------------------

Partition label_propagation(const Graph& g, uint64_t seed) {
    if (g.n == 0) return Partition{};
    Rng rng(seed);
    auto adj = g.adjacency();
    std::vector<int> label(g.n);
    for (int i = 0; i < g.n; ++i) label[i] = i;

    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;

    for (int sweep = 0; sweep < 100; ++sweep) {
        shuffle_order(order, rng);
        bool changed = false;
        std::map<int, double> freq;
        for (int u : order) {
            if (adj[u].empty()) continue;
            freq.clear();
            for (auto [v, w] : adj[u]) freq[label[v]] += w;
            double mx = 0.0;
            for (auto [l, f] : freq) {
                (void)l;
                mx = std::max(mx, f);
            }
            std::vector<int> best;
            for (auto [l, f] : freq)
                if (f == mx) best.push_back(l);
            if (std::find(best.begin(), best.end(), label[u]) == best.end()) {
                label[u] = best[rng.integer(best.size())];
                changed = true;
            }
        }
        if (!changed) break;
    }
    return make_partition(label);
}

// ---------------------------------------------------------------------------
// Kernighan-Lin bisection
// ---------------------------------------------------------------------------

Partition kernighan_lin(const Graph& g, uint64_t seed) {
    if (g.n < 2) throw std::invalid_argument("kernighan_lin: need n >= 2");
    Rng rng(seed);
    int n = g.n;

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    shuffle_order(order, rng);
    std::vector<int> side(n, 0);
    for (int i = 0; i < n; ++i) side[order[i]] = i < (n + 1) / 2 ? 0 : 1;

    auto adj = g.adjacency();
    std::unordered_map<uint64_t, double> wmap;
    for (const Edge& e : g.edges) {
        uint64_t key = (static_cast<uint64_t>(std::min(e.u, e.v)) << 32) |
                       static_cast<uint64_t>(std::max(e.u, e.v));
        wmap[key] = e.w;
    }
    auto edge_w = [&](int u, int v) {
        uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) |
                       static_cast<uint64_t>(std::max(u, v));
        auto it = wmap.find(key);
        return it == wmap.end() ? 0.0 : it->second;
    };

    for (int pass = 0; pass < 100; ++pass) {
        // D[u] = external - internal connection weight
        std::vector<double> dval(n, 0.0);
        for (int u = 0; u < n; ++u)
            for (auto [v, w] : adj[u]) dval[u] += side[v] != side[u] ? w : -w;

        std::vector<bool> locked(n, false);
        std::vector<std::pair<int, int>> swaps;
        std::vector<double> cumulative;
        double running = 0.0;

        int steps = static_cast<int>(std::min(std::count(side.begin(), side.end(), 0),
                                              std::count(side.begin(), side.end(), 1)));
        for (int s = 0; s < steps; ++s) {
            double best_gain = -std::numeric_limits<double>::infinity();
            int ba = -1, bb = -1;
            for (int u = 0; u < n; ++u) {
                if (locked[u] || side[u] != 0) continue;
                for (int v = 0; v < n; ++v) {
                    if (locked[v] || side[v] != 1) continue;
                    double gain = dval[u] + dval[v] - 2.0 * edge_w(u, v);
                    if (gain > best_gain) {
                        best_gain = gain;
                        ba = u;
                        bb = v;
                    }
                }
            }
            if (ba < 0) break;
            locked[ba] = locked[bb] = true;
            swaps.emplace_back(ba, bb);
            running += best_gain;
            cumulative.push_back(running);
            for (int x = 0; x < n; ++x) {
                if (locked[x]) continue;
                double wxa = edge_w(x, ba), wxb = edge_w(x, bb);
                if (side[x] == 0)
                    dval[x] += 2.0 * wxa - 2.0 * wxb;
                else
                    dval[x] += 2.0 * wxb - 2.0 * wxa;
            }
        }

        int best_prefix = -1;
        double best_total = 1e-12;  // require a strictly positive improvement
        for (size_t i = 0; i < cumulative.size(); ++i)
            if (cumulative[i] > best_total) {
                best_total = cumulative[i];
                best_prefix = static_cast<int>(i);
            }
        if (best_prefix < 0) break;
        for (int i = 0; i <= best_prefix; ++i) {
            side[swaps[i].first] = 1;
            side[swaps[i].second] = 0;
        }
    }
    return make_partition(side);
}

}  // namespace gve
