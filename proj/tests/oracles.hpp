// Test-only oracles: independent reference implementations the production
// code is checked against. Nothing here may call into the code path under
// test.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "gve/graph.hpp"
#include "gve/metrics.hpp"
#include "gve/rng.hpp"

namespace oracle {

// Floyd-Warshall over the full vertex-triple cube, then the same
// disconnected-graph convention (global max finite intra distance plus one,
// 1 for an edgeless graph) applied independently.
inline std::vector<double> floyd_warshall(const gve::Graph& g) {
    const double inf = std::numeric_limits<double>::infinity();
    int n = g.n;
    std::vector<double> d(static_cast<size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0.0;
    for (const gve::Edge& e : g.edges) {
        size_t uv = static_cast<size_t>(e.u) * n + e.v;
        size_t vu = static_cast<size_t>(e.v) * n + e.u;
        d[uv] = std::min(d[uv], e.w);
        d[vu] = std::min(d[vu], e.w);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double via = d[static_cast<size_t>(i) * n + k] +
                             d[static_cast<size_t>(k) * n + j];
                if (via < d[static_cast<size_t>(i) * n + j])
                    d[static_cast<size_t>(i) * n + j] = via;
            }
    double max_finite = 0.0;
    bool any_inf = false;
    for (double x : d) {
        if (x == inf)
            any_inf = true;
        else
            max_finite = std::max(max_finite, x);
    }
    if (any_inf)
        for (double& x : d)
            if (x == inf) x = max_finite + 1.0;
    return d;
}

// Central finite differences of a scalar function of a parameter vector.
inline std::vector<double> finite_difference(
    std::vector<double> params, const std::function<double(const std::vector<double>&)>& f,
    double step = 1e-6) {
    std::vector<double> grad(params.size());
    for (size_t i = 0; i < params.size(); ++i) {
        double saved = params[i];
        params[i] = saved + step;
        double hi = f(params);
        params[i] = saved - step;
        double lo = f(params);
        params[i] = saved;
        grad[i] = (hi - lo) / (2.0 * step);
    }
    return grad;
}

// max over coordinates of |a-b| / max(1, |a|, |b|)
inline double gradient_mismatch(const std::vector<double>& a,
                                const std::vector<double>& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double denom = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
        worst = std::max(worst, std::abs(a[i] - b[i]) / denom);
    }
    return worst;
}

// Hubert-Arabie ARI from explicit enumeration of all vertex pairs: counts of
// pairs together/apart in each partition.
inline double pair_counting_ari(const std::vector<int>& a, const std::vector<int>& b) {
    double n11 = 0, n00 = 0, n10 = 0, n01 = 0;
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool ta = a[i] == a[j];
            bool tb = b[i] == b[j];
            if (ta && tb)
                ++n11;
            else if (!ta && !tb)
                ++n00;
            else if (ta)
                ++n10;
            else
                ++n01;
        }
    double num = 2.0 * (n11 * n00 - n10 * n01);
    double den = (n11 + n10) * (n10 + n00) + (n11 + n01) * (n01 + n00);
    if (den == 0.0) return 1.0;
    return num / den;
}

// NMI by direct entropy arithmetic over an explicitly built contingency
// table, arithmetic-mean normalization.
inline double entropy_nmi(const std::vector<int>& a, const std::vector<int>& b) {
    int ka = 0, kb = 0;
    for (int x : a) ka = std::max(ka, x + 1);
    for (int x : b) kb = std::max(kb, x + 1);
    double n = static_cast<double>(a.size());
    std::vector<std::vector<double>> t(ka, std::vector<double>(kb, 0.0));
    for (size_t i = 0; i < a.size(); ++i) t[a[i]][b[i]] += 1.0;
    std::vector<double> ra(ka, 0.0), cb(kb, 0.0);
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < kb; ++j) {
            ra[i] += t[i][j];
            cb[j] += t[i][j];
        }
    auto ent = [n](const std::vector<double>& v) {
        double h = 0.0;
        for (double x : v)
            if (x > 0.0) h -= x / n * std::log(x / n);
        return h;
    };
    double mi = 0.0;
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < kb; ++j)
            if (t[i][j] > 0.0)
                mi += t[i][j] / n * std::log(n * t[i][j] / (ra[i] * cb[j]));
    double mean_h = 0.5 * (ent(ra) + ent(cb));
    if (mean_h == 0.0) return 1.0;
    return mi / mean_h;
}

// Random connected graph: spanning tree plus extra random edges.
inline gve::Graph random_connected_graph(int n, double extra_edge_prob,
                                         bool unit_weights, uint64_t seed) {
    gve::Rng rng(seed);
    gve::Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
        g.node_names.push_back("v" + std::to_string(i));
        g.node_index.emplace(g.node_names.back(), i);
    }
    auto weight = [&]() { return unit_weights ? 1.0 : rng.uniform(0.5, 2.0); };
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.integer(v));
        g.edges.push_back({u, v, weight()});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool tree_edge = false;
            for (const gve::Edge& e : g.edges)
                if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
                    tree_edge = true;
                    break;
                }
            if (!tree_edge && rng.uniform() < extra_edge_prob)
                g.edges.push_back({u, v, weight()});
        }
    return g;
}

// Random graph that may be disconnected.
inline gve::Graph random_graph(int n, double edge_prob, bool unit_weights,
                               uint64_t seed) {
    gve::Rng rng(seed);
    gve::Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
        g.node_names.push_back("v" + std::to_string(i));
        g.node_index.emplace(g.node_names.back(), i);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < edge_prob)
                g.edges.push_back({u, v, unit_weights ? 1.0 : rng.uniform(0.5, 2.0)});
    return g;
}

}  // namespace oracle
