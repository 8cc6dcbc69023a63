#include "gve/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "gve/parallel.hpp"

namespace gve {

namespace {

double sq_dist(const double* a, const double* b, int dim) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
        double diff = a[k] - b[k];
        s += diff * diff;
    }
    return s;
}

std::vector<double> all_pairwise_distances(const PointCloud& pts) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(pts.n) * (pts.n - 1) / 2);
    for (int i = 0; i < pts.n; ++i)
        for (int j = 0; j < i; ++j)
            out.push_back(std::sqrt(sq_dist(pts.point(i), pts.point(j), pts.dim)));
    return out;
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    size_t mid = v.size() / 2;
    if (v.size() % 2 == 1) return v[mid];
    return 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

double median_pairwise_distance(const PointCloud& pts) {
    if (pts.n < 2) return 0.0;
    return median_of(all_pairwise_distances(pts));
}

Partition mean_shift(const PointCloud& pts, double bandwidth) {
    int n = pts.n;
    int dim = pts.dim;
    if (n == 0) return Partition{};
    if (n == 1) return make_partition({0});

    double bw = bandwidth > 0.0 ? bandwidth : 0.5 * median_pairwise_distance(pts);
    if (bw <= 0.0) {
        // degenerate cloud: group by exact coordinate equality
        std::vector<int> raw(n, -1);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j)
                if (sq_dist(pts.point(i), pts.point(j), dim) == 0.0) {
                    raw[i] = raw[j];
                    break;
                }
            if (raw[i] < 0) raw[i] = next++;
        }
        return make_partition(raw);
    }

    // tiny relative slack keeps exact-boundary neighbors (an equilateral
    // fitted simplex puts every point at exactly the grid bandwidth)
    double bw2 = bw * bw * (1.0 + 1e-9);
    double tol2 = 1e-5 * bw * (1e-5 * bw);

    // shift every point to its mode
    std::vector<double> modes(static_cast<size_t>(n) * dim);
    parallel_for(n, [&](int i) {
        std::vector<double> y(pts.point(i), pts.point(i) + dim);
        std::vector<double> next(dim);
        for (int iter = 0; iter < 300; ++iter) {
            std::fill(next.begin(), next.end(), 0.0);
            int count = 0;
            for (int j = 0; j < n; ++j) {
                if (sq_dist(y.data(), pts.point(j), dim) <= bw2) {
                    const double* pj = pts.point(j);
                    for (int k = 0; k < dim; ++k) next[k] += pj[k];
                    ++count;
                }
            }
            for (int k = 0; k < dim; ++k) next[k] /= count;
            double moved = sq_dist(y.data(), next.data(), dim);
            y = next;
            if (moved < tol2) break;
        }
        std::copy(y.begin(), y.end(), modes.begin() + static_cast<size_t>(i) * dim);
    });

    // merge modes closer than bandwidth/2, first mode wins
    double merge2 = 0.25 * bw2;
    std::vector<int> raw(n, -1);
    std::vector<int> centers;  // indices whose mode anchors a cluster
    for (int i = 0; i < n; ++i) {
        const double* mi = modes.data() + static_cast<size_t>(i) * dim;
        for (size_t c = 0; c < centers.size(); ++c) {
            const double* mc = modes.data() + static_cast<size_t>(centers[c]) * dim;
            if (sq_dist(mi, mc, dim) <= merge2) {
                raw[i] = static_cast<int>(c);
                break;
            }
        }
        if (raw[i] < 0) {
            raw[i] = static_cast<int>(centers.size());
            centers.push_back(i);
        }
    }
    return make_partition(raw);
}

Partition affinity_propagation(const PointCloud& pts,
                               std::optional<double> preference, double damping,
                               bool* converged) {
    int n = pts.n;
    if (n < 2) throw std::invalid_argument("affinity_propagation: need n >= 2");
    if (damping < 0.5 || damping >= 1.0)
        throw std::invalid_argument("affinity_propagation: damping must be in [0.5, 1)");
    if (converged) *converged = true;

    std::vector<double> s(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> offdiag;
    offdiag.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            double v = -sq_dist(pts.point(i), pts.point(j), pts.dim);
            s[static_cast<size_t>(i) * n + j] = v;
            s[static_cast<size_t>(j) * n + i] = v;
            offdiag.push_back(v);
        }
    double pref = preference ? *preference : median_of(offdiag);
    for (int k = 0; k < n; ++k) s[static_cast<size_t>(k) * n + k] = pref;

    std::vector<double> r(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    std::vector<int> exemplar(n, -1);
    int stable = 0;
    bool did_converge = false;

    for (int iter = 0; iter < 200; ++iter) {
        // responsibilities
        for (int i = 0; i < n; ++i) {
            const double* si = s.data() + static_cast<size_t>(i) * n;
            const double* ai = a.data() + static_cast<size_t>(i) * n;
            double* ri = r.data() + static_cast<size_t>(i) * n;
            double max1 = -std::numeric_limits<double>::infinity();
            double max2 = max1;
            int arg1 = -1;
            for (int k = 0; k < n; ++k) {
                double v = si[k] + ai[k];
                if (v > max1) {
                    max2 = max1;
                    max1 = v;
                    arg1 = k;
                } else if (v > max2) {
                    max2 = v;
                }
            }
            for (int k = 0; k < n; ++k) {
                double v = si[k] - (k == arg1 ? max2 : max1);
                ri[k] = damping * ri[k] + (1.0 - damping) * v;
            }
        }
        // availabilities
        for (int k = 0; k < n; ++k) {
            double pos_sum = 0.0;
            for (int i = 0; i < n; ++i)
                if (i != k) pos_sum += std::max(0.0, r[static_cast<size_t>(i) * n + k]);
            double rkk = r[static_cast<size_t>(k) * n + k];
            for (int i = 0; i < n; ++i) {
                double v;
                if (i == k) {
                    v = pos_sum;
                } else {
                    double other = pos_sum - std::max(0.0, r[static_cast<size_t>(i) * n + k]);
                    v = std::min(0.0, rkk + other);
                }
                double& ref = a[static_cast<size_t>(i) * n + k];
                ref = damping * ref + (1.0 - damping) * v;
            }
        }
        // exemplar snapshot
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            double best = -std::numeric_limits<double>::infinity();
            int arg = i;
            for (int k = 0; k < n; ++k) {
                double v = a[static_cast<size_t>(i) * n + k] + r[static_cast<size_t>(i) * n + k];
                if (v > best) {
                    best = v;
                    arg = k;
                }
            }
            if (exemplar[i] != arg) {
                exemplar[i] = arg;
                changed = true;
            }
        }
        stable = changed ? 0 : stable + 1;
        if (stable >= 15) {
            did_converge = true;
            break;
        }
    }
    if (converged) *converged = did_converge;

    // final assignment: exemplars are points whose self responsibility plus
    // availability is positive; everyone joins the most similar exemplar
    std::vector<int> exemplars;
    for (int k = 0; k < n; ++k)
        if (r[static_cast<size_t>(k) * n + k] + a[static_cast<size_t>(k) * n + k] > 0.0)
            exemplars.push_back(k);
    std::vector<int> raw(n, 0);
    if (exemplars.empty()) {
        return make_partition(raw);  // degenerate: one cluster
    }
    for (int i = 0; i < n; ++i) {
        double best = -std::numeric_limits<double>::infinity();
        int arg = exemplars.front();
        for (int k : exemplars) {
            double v = s[static_cast<size_t>(i) * n + k];
            if (v > best) {
                best = v;
                arg = k;
            }
        }
        raw[i] = arg;
    }
    for (int k : exemplars) raw[k] = k;
    return make_partition(raw);
}

Partition agglomerative(const PointCloud& pts, int k, Linkage linkage) {
    int n = pts.n;
    if (k < 1 || k > n) throw std::invalid_argument("agglomerative: need 1 <= k <= n");
    if (n == 0) return Partition{};

    // dense inter-cluster distance matrix, Lance-Williams updates
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            double v = std::sqrt(sq_dist(pts.point(i), pts.point(j), pts.dim));
            d[static_cast<size_t>(i) * n + j] = v;
            d[static_cast<size_t>(j) * n + i] = v;
        }

    std::vector<bool> active(n, true);
    std::vector<int> size(n, 1);
    std::vector<int> member(n);  // vertex -> active cluster anchor
    for (int i = 0; i < n; ++i) member[i] = i;

    int clusters = n;
    while (clusters > k) {
        double best = std::numeric_limits<double>::infinity();
        int bi = -1, bj = -1;
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                double v = d[static_cast<size_t>(i) * n + j];
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        // merge bj into bi (bi < bj, so the anchor is the smallest index)
        for (int c = 0; c < n; ++c) {
            if (!active[c] || c == bi || c == bj) continue;
            double dic = d[static_cast<size_t>(bi) * n + c];
            double djc = d[static_cast<size_t>(bj) * n + c];
            double v;
            switch (linkage) {
                case Linkage::single: v = std::min(dic, djc); break;
                case Linkage::complete: v = std::max(dic, djc); break;
                default:
                    v = (size[bi] * dic + size[bj] * djc) / (size[bi] + size[bj]);
            }
            d[static_cast<size_t>(bi) * n + c] = v;
            d[static_cast<size_t>(c) * n + bi] = v;
        }
        size[bi] += size[bj];
        active[bj] = false;
        for (int v = 0; v < n; ++v)
            if (member[v] == bj) member[v] = bi;
        --clusters;
    }
    return make_partition(member);
}

Partition dbscan(const PointCloud& pts, double eps, int min_pts) {
    if (eps <= 0.0) throw std::invalid_argument("dbscan: eps must be positive");
    if (min_pts < 1) throw std::invalid_argument("dbscan: min_pts must be >= 1");
    int n = pts.n;
    if (n == 0) return Partition{};

    double eps2 = eps * eps * (1.0 + 1e-9);
    std::vector<std::vector<int>> neigh(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sq_dist(pts.point(i), pts.point(j), pts.dim) <= eps2)
                neigh[i].push_back(j);  // includes i itself

    constexpr int kNoise = -1;
    constexpr int kUnvisited = -2;
    std::vector<int> raw(n, kUnvisited);
    int next_label = 0;
    for (int i = 0; i < n; ++i) {
        if (raw[i] != kUnvisited) continue;
        if (static_cast<int>(neigh[i].size()) < min_pts) {
            raw[i] = kNoise;
            continue;
        }
        int label = next_label++;
        raw[i] = label;
        std::vector<int> queue = neigh[i];
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int p = queue[qi];
            if (raw[p] == kNoise) raw[p] = label;  // border point
            if (raw[p] != kUnvisited) continue;
            raw[p] = label;
            if (static_cast<int>(neigh[p].size()) >= min_pts)
                queue.insert(queue.end(), neigh[p].begin(), neigh[p].end());
        }
    }
    // remaining noise points become their own communities
    for (int i = 0; i < n; ++i)
        if (raw[i] == kNoise) raw[i] = next_label++;
    return make_partition(raw);
}

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double quantile_of(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    size_t idx = static_cast<size_t>(q * static_cast<double>(v.size() - 1));
    return v[idx];
}

}  // namespace

std::vector<CommunityResult> detect_communities(const Graph& g,
                                                const EmbeddingSet& E,
                                                const std::set<std::string>& algorithms,
                                                const SweepConfig& sweep) {
    if (algorithms.empty())
        throw std::invalid_argument("detect_communities: empty algorithm set");
    static const std::set<std::string> known{"mean_shift", "affinity", "agglo", "dbscan"};
    for (const std::string& a : algorithms)
        if (!known.count(a))
            throw std::invalid_argument("detect_communities: unknown algorithm '" + a + "'");
    if (E.n != g.n)
        throw std::invalid_argument("detect_communities: embedding/graph size mismatch");

    PointCloud pts = PointCloud::from_embedding(E);
    std::vector<CommunityResult> out;
    auto push = [&](std::string algo, std::string params, Partition part) {
        double q = modularity(g, part);
        out.push_back(CommunityResult{std::move(algo), std::move(params),
                                      std::move(part), q});
    };

    if (algorithms.count("mean_shift") && pts.n >= 1) {
        double auto_bw = 0.5 * median_pairwise_distance(pts);
        for (double f : sweep.mean_shift_bandwidth_factors) {
            double bw = auto_bw * f;
            if (bw <= 0.0) continue;
            push("mean_shift", "bandwidth=" + fmt_double(bw), mean_shift(pts, bw));
        }
    }
    if (algorithms.count("affinity") && pts.n >= 2) {
        std::vector<double> offdiag = all_pairwise_distances(pts);
        for (double& v : offdiag) v = -v * v;
        double med = median_of(offdiag);
        for (double f : sweep.affinity_preference_factors) {
            double pref = med * f;
            push("affinity",
                 "preference=" + fmt_double(pref) + ",damping=" +
                     fmt_double(sweep.affinity_damping),
                 affinity_propagation(pts, pref, sweep.affinity_damping));
        }
    }
    if (algorithms.count("agglo")) {
        int kmax = std::min(sweep.agglomerative_max_k, pts.n - 1);
        for (int k = 2; k <= kmax; ++k) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "k=%02d,linkage=average", k);
            push("agglo", buf, agglomerative(pts, k, sweep.agglomerative_linkage));
        }
    }
    if (algorithms.count("dbscan") && pts.n >= 1) {
        std::vector<double> dists = all_pairwise_distances(pts);
        for (double q : sweep.dbscan_eps_quantiles) {
            double eps = quantile_of(dists, q);
            if (eps <= 0.0) continue;
            for (int mp : sweep.dbscan_min_pts) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "eps=%s,min_pts=%d",
                              fmt_double(eps).c_str(), mp);
                push("dbscan", buf, dbscan(pts, eps, mp));
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const CommunityResult& a, const CommunityResult& b) {
        if (a.modularity != b.modularity) return a.modularity > b.modularity;
        if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
        return a.params < b.params;
    });
    return out;
}

}  // namespace gve
