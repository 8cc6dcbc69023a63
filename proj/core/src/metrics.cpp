#include "gve/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace gve {

Partition make_partition(const std::vector<int>& raw) {
    Partition p;
    p.labels.reserve(raw.size());
    std::unordered_map<int, int> remap;
    for (int label : raw) {
        auto [it, inserted] = remap.emplace(label, p.k);
        if (inserted) ++p.k;
        p.labels.push_back(it->second);
    }
    return p;
}

namespace {

double pair_rms(const EmbeddingSet& E, const DistanceMatrix& D, bool relative) {
    if (E.n != D.n) throw std::invalid_argument("embedding/distance size mismatch");
    if (E.n < 2) throw std::invalid_argument("need at least 2 vertices");
    int n = E.n;
    int m = E.m;
    double half_kappa = 0.5 * E.kappa;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* ei = E.e.data() + static_cast<size_t>(i) * m;
        for (int j = 0; j < i; ++j) {
            const double* ej = E.e.data() + static_cast<size_t>(j) * m;
            double s = 0.0;
            for (int k = 0; k < m; ++k) {
                double diff = ei[k] - ej[k];
                s += diff * diff;
            }
            double d = s > 0.0 ? std::pow(s, half_kappa) : 0.0;
            double r = relative ? d / D.at(i, j) - 1.0 : d - D.at(i, j);
            sum += r * r;
        }
    }
    return std::sqrt(2.0 * sum / (static_cast<double>(n) * (n - 1)));
}

}  // namespace

double rmse(const EmbeddingSet& E, const DistanceMatrix& D) {
    return pair_rms(E, D, false);
}

double rmrse(const EmbeddingSet& E, const DistanceMatrix& D) {
    return pair_rms(E, D, true);
}

double modularity(const Graph& g, const Partition& p) {
    if (static_cast<int>(p.labels.size()) != g.n)
        throw std::invalid_argument("partition/graph size mismatch");
    double w = g.total_weight();
    if (w <= 0.0) return 0.0;

    std::vector<double> w_in(p.k, 0.0);   // intra-community edge weight
    std::vector<double> w_deg(p.k, 0.0);  // weighted degree sum
    for (const Edge& e : g.edges) {
        int cu = p.labels[e.u];
        int cv = p.labels[e.v];
        if (cu == cv) w_in[cu] += e.w;
        w_deg[cu] += e.w;
        w_deg[cv] += e.w;
    }
    double q = 0.0;
    for (int c = 0; c < p.k; ++c) {
        double share = w_deg[c] / (2.0 * w);
        q += w_in[c] / w - share * share;
    }
    return q;
}

namespace {

double comb2(double x) { return x * (x - 1.0) / 2.0; }

// k_a x k_b contingency table of label co-occurrence counts
std::vector<std::vector<double>> contingency(const Partition& a, const Partition& b) {
    std::vector<std::vector<double>> table(a.k, std::vector<double>(b.k, 0.0));
    for (size_t i = 0; i < a.labels.size(); ++i)
        table[a.labels[i]][b.labels[i]] += 1.0;
    return table;
}

}  // namespace

double adjusted_rand_score(const Partition& a, const Partition& b) {
    if (a.labels.size() != b.labels.size())
        throw std::invalid_argument("partition length mismatch");
    double n = static_cast<double>(a.labels.size());
    if (n < 2) return 1.0;

    auto table = contingency(a, b);
    std::vector<double> row_sum(a.k, 0.0), col_sum(b.k, 0.0);
    double index = 0.0;
    for (int i = 0; i < a.k; ++i)
        for (int j = 0; j < b.k; ++j) {
            row_sum[i] += table[i][j];
            col_sum[j] += table[i][j];
            index += comb2(table[i][j]);
        }
    double sum_a = 0.0, sum_b = 0.0;
    for (double x : row_sum) sum_a += comb2(x);
    for (double x : col_sum) sum_b += comb2(x);

    double expected = sum_a * sum_b / comb2(n);
    double max_index = 0.5 * (sum_a + sum_b);
    double denom = max_index - expected;
    if (denom == 0.0) return 1.0;  // both partitions trivial
    return (index - expected) / denom;
}

double normalized_mutual_info(const Partition& a, const Partition& b) {
    if (a.labels.size() != b.labels.size())
        throw std::invalid_argument("partition length mismatch");
    double n = static_cast<double>(a.labels.size());
    if (n == 0.0) return 1.0;

    auto table = contingency(a, b);
    std::vector<double> row_sum(a.k, 0.0), col_sum(b.k, 0.0);
    for (int i = 0; i < a.k; ++i)
        for (int j = 0; j < b.k; ++j) {
            row_sum[i] += table[i][j];
            col_sum[j] += table[i][j];
        }

    double h_a = 0.0, h_b = 0.0, mi = 0.0;
    for (double x : row_sum)
        if (x > 0.0) h_a -= x / n * std::log(x / n);
    for (double x : col_sum)
        if (x > 0.0) h_b -= x / n * std::log(x / n);
    for (int i = 0; i < a.k; ++i)
        for (int j = 0; j < b.k; ++j) {
            double nij = table[i][j];
            if (nij > 0.0)
                mi += nij / n * std::log(n * nij / (row_sum[i] * col_sum[j]));
        }

    double mean_h = 0.5 * (h_a + h_b);
    if (mean_h == 0.0) return 1.0;  // both partitions trivial
    double v = mi / mean_h;
    // clamp tiny floating-point overshoot
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

}  // namespace gve
