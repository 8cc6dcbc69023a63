#include "gve/stress.hpp"

#include <cmath>
#include <stdexcept>

#include "gve/parallel.hpp"

namespace gve {

double pair_loss(double d, double D_ij, LossKind kind) {
    if (D_ij <= 0.0)
        throw std::invalid_argument("pair_loss: target distance must be positive");
    if (kind == LossKind::absolute) {
        double r = d - D_ij;
        return r * r;
    }
    double r = d / D_ij - 1.0;
    return r * r;
}

namespace {

double dloss_dd(double d, double D_ij, LossKind kind) {
    if (kind == LossKind::absolute) return 2.0 * (d - D_ij);
    return 2.0 * (d / D_ij - 1.0) / D_ij;
}

// d kappa / d alpha expressed through kappa itself:
// kappa = kmin + (kmax-kmin)*sigmoid(alpha) => (kappa-kmin)(kmax-kappa)/(kmax-kmin)
double dkappa_dalpha(double kappa) {
    return (kappa - kKappaMin) * (kKappaMax - kappa) / (kKappaMax - kKappaMin);
}

}  // namespace

double stress(const EmbeddingSet& E, const DistanceMatrix& D, LossKind kind,
              double epsilon) {
    int n = E.n;
    if (n < 2) return 0.0;
    int m = E.m;
    double half_kappa = 0.5 * E.kappa;

    int chunks = std::min(n, 64);
    std::vector<double> partial(chunks, 0.0);
    parallel_chunks(n, chunks, [&](int c, int begin, int end) {
        double acc = 0.0;
        for (int i = begin; i < end; ++i) {
            const double* ei = E.e.data() + static_cast<size_t>(i) * m;
            for (int j = 0; j < i; ++j) {
                const double* ej = E.e.data() + static_cast<size_t>(j) * m;
                double s = epsilon;
                for (int k = 0; k < m; ++k) {
                    double diff = ei[k] - ej[k];
                    s += diff * diff;
                }
                double d = s > 0.0 ? std::pow(s, half_kappa) : 0.0;
                acc += pair_loss(d, D.at(i, j), kind);
            }
        }
        partial[c] = acc;
    });

    double sum = 0.0;
    for (double p : partial) sum += p;
    return 2.0 * sum / (static_cast<double>(n) * (n - 1));
}

StressGradient stress_gradient(const EmbeddingSet& E, const DistanceMatrix& D,
                               LossKind kind, double epsilon, KappaMode mode) {
    int n = E.n;
    int m = E.m;
    StressGradient g;
    g.coords.assign(static_cast<size_t>(n) * m, 0.0);
    if (n < 2) return g;

    double kappa = E.kappa;
    double half_kappa = 0.5 * kappa;
    bool learned = mode == KappaMode::learned;

    // Each row i accumulates over all j != i, so every unordered pair is
    // visited twice: once for each endpoint's gradient. The scalar terms are
    // halved accordingly below.
    int chunks = std::min(n, 64);
    std::vector<double> dk_partial(chunks, 0.0);
    parallel_chunks(n, chunks, [&](int c, int begin, int end) {
        double dk = 0.0;
        for (int i = begin; i < end; ++i) {
            const double* ei = E.e.data() + static_cast<size_t>(i) * m;
            double* gi = g.coords.data() + static_cast<size_t>(i) * m;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double* ej = E.e.data() + static_cast<size_t>(j) * m;
                double s = epsilon;
                for (int k = 0; k < m; ++k) {
                    double diff = ei[k] - ej[k];
                    s += diff * diff;
                }
                if (s <= 0.0) continue;  // coincident with epsilon = 0: zero contribution
                double d = std::pow(s, half_kappa);
                double dl = dloss_dd(d, D.at(i, j), kind);
                double coeff = dl * kappa * std::pow(s, half_kappa - 1.0);
                for (int k = 0; k < m; ++k) gi[k] += coeff * (ei[k] - ej[k]);
                if (learned) dk += dl * d * 0.5 * std::log(s);
            }
        }
        dk_partial[c] = dk;
    });

    double scale = 2.0 / (static_cast<double>(n) * (n - 1));
    for (double& x : g.coords) x *= scale;

    if (learned) {
        double dk_sum = 0.0;
        for (double p : dk_partial) dk_sum += p;
        double dstress_dkappa = 0.5 * dk_sum * scale;  // halve the double count
        g.dalpha = dstress_dkappa * dkappa_dalpha(kappa);
    }
    return g;
}

double stress_on_pairs(const EmbeddingSet& E, const DistanceMatrix& D,
                       LossKind kind, double epsilon, const PairList& batch) {
    if (batch.pairs.empty()) return 0.0;
    int m = E.m;
    double half_kappa = 0.5 * E.kappa;
    double acc = 0.0;
    for (auto [i, j] : batch.pairs) {
        const double* ei = E.e.data() + static_cast<size_t>(i) * m;
        const double* ej = E.e.data() + static_cast<size_t>(j) * m;
        double s = epsilon;
        for (int k = 0; k < m; ++k) {
            double diff = ei[k] - ej[k];
            s += diff * diff;
        }
        double d = s > 0.0 ? std::pow(s, half_kappa) : 0.0;
        acc += pair_loss(d, D.at(i, j), kind);
    }
    return acc / static_cast<double>(batch.pairs.size());
}

StressGradient stress_gradient_on_pairs(const EmbeddingSet& E,
                                        const DistanceMatrix& D, LossKind kind,
                                        double epsilon, KappaMode mode,
                                        const PairList& batch) {
    int n = E.n;
    int m = E.m;
    StressGradient g;
    g.coords.assign(static_cast<size_t>(n) * m, 0.0);
    if (batch.pairs.empty()) return g;

    double kappa = E.kappa;
    double half_kappa = 0.5 * kappa;
    bool learned = mode == KappaMode::learned;
    double dk_sum = 0.0;

    for (auto [i, j] : batch.pairs) {
        const double* ei = E.e.data() + static_cast<size_t>(i) * m;
        const double* ej = E.e.data() + static_cast<size_t>(j) * m;
        double s = epsilon;
        for (int k = 0; k < m; ++k) {
            double diff = ei[k] - ej[k];
            s += diff * diff;
        }
        if (s <= 0.0) continue;
        double d = std::pow(s, half_kappa);
        double dl = dloss_dd(d, D.at(i, j), kind);
        double coeff = dl * kappa * std::pow(s, half_kappa - 1.0);
        double* gi = g.coords.data() + static_cast<size_t>(i) * m;
        double* gj = g.coords.data() + static_cast<size_t>(j) * m;
        for (int k = 0; k < m; ++k) {
            double t = coeff * (ei[k] - ej[k]);
            gi[k] += t;
            gj[k] -= t;
        }
        if (learned) dk_sum += dl * d * 0.5 * std::log(s);
    }

    double scale = 1.0 / static_cast<double>(batch.pairs.size());
    for (double& x : g.coords) x *= scale;
    if (learned) g.dalpha = dk_sum * scale * dkappa_dalpha(kappa);
    return g;
}

}  // namespace gve
