#include "gve/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gve/adam.hpp"
#include "gve/rng.hpp"

namespace gve {

namespace {

constexpr int64_t kFullBatchPairLimit = 131072;
constexpr int64_t kDefaultBatch = 65536;

}  // namespace

void OptimConfig::validate() const {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (learning_rate <= 0.0) throw std::invalid_argument("learning_rate must be positive");
    if (alpha_learning_rate <= 0.0)
        throw std::invalid_argument("alpha_learning_rate must be positive");
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
    if (pair_batch < 0) throw std::invalid_argument("pair_batch must be >= 0");
    if (kappa_mode == KappaMode::fixed &&
        (kappa_value < kKappaMin || kappa_value > kKappaMax))
        throw std::invalid_argument("kappa must lie in [" + std::to_string(kKappaMin) +
                                    ", " + std::to_string(kKappaMax) + "]");
}

OptimResult optimize_direct(const DistanceMatrix& D, const OptimConfig& cfg) {
    cfg.validate();
    int n = D.n;
    int m = cfg.m;

    Rng rng(cfg.seed);

    EmbeddingSet E;
    E.n = n;
    E.m = m;
    E.e.resize(static_cast<size_t>(n) * m);
    // start at the data scale: i.i.d. normal with sd = max(D) / (2 sqrt(m))
    double sd = D.max_value() / (2.0 * std::sqrt(static_cast<double>(m)));
    if (sd <= 0.0) sd = 1.0;
    for (double& x : E.e) x = sd * rng.normal();

    bool learned = cfg.kappa_mode == KappaMode::learned;
    double alpha = learned ? alpha_of_kappa(1.0) : 0.0;
    E.kappa = learned ? kappa_of_alpha(alpha) : cfg.kappa_value;

    OptimResult out;
    if (n < 2) {
        out.embedding = E;
        out.loss_trace.assign(1, 0.0);
        return out;
    }

    int64_t total_pairs = static_cast<int64_t>(n) * (n - 1) / 2;
    int64_t batch_size = cfg.pair_batch > 0 ? std::min(cfg.pair_batch, total_pairs)
                         : total_pairs <= kFullBatchPairLimit ? 0
                                                              : kDefaultBatch;
    bool full_batch = batch_size == 0;

    Adam adam_coords(E.e.size());
    Adam adam_alpha(1);
    std::vector<double> alpha_vec(1, alpha);
    std::vector<double> alpha_grad(1, 0.0);

    EmbeddingSet best = E;
    double best_loss = std::numeric_limits<double>::infinity();
    PairList batch;

    for (int it = 0; it < cfg.iterations; ++it) {
        double loss;
        StressGradient grad;
        if (full_batch) {
            loss = stress(E, D, cfg.loss_kind, cfg.epsilon);
            grad = stress_gradient(E, D, cfg.loss_kind, cfg.epsilon, cfg.kappa_mode);
        } else {
            batch.pairs.clear();
            batch.pairs.reserve(batch_size);
            for (int64_t b = 0; b < batch_size; ++b) {
                int i = static_cast<int>(rng.integer(n));
                int j = static_cast<int>(rng.integer(n - 1));
                if (j >= i) ++j;
                batch.pairs.emplace_back(i, j);
            }
            loss = stress_on_pairs(E, D, cfg.loss_kind, cfg.epsilon, batch);
            grad = stress_gradient_on_pairs(E, D, cfg.loss_kind, cfg.epsilon,
                                            cfg.kappa_mode, batch);
        }
        if (!std::isfinite(loss))
            throw std::runtime_error("optimize_direct: non-finite loss at iteration " +
                                     std::to_string(it));
        out.loss_trace.push_back(loss);

        if (full_batch && loss < best_loss) {
            best_loss = loss;
            best = E;
        }

        adam_coords.step(E.e, grad.coords, cfg.learning_rate);
        if (learned) {
            alpha_grad[0] = grad.dalpha;
            adam_alpha.step(alpha_vec, alpha_grad, cfg.alpha_learning_rate);
            E.kappa = kappa_of_alpha(alpha_vec[0]);
        }
    }

    if (full_batch) {
        // keep the best iterate seen, including the post-update one
        double final_loss = stress(E, D, cfg.loss_kind, cfg.epsilon);
        if (std::isfinite(final_loss) && final_loss < best_loss) best = E;
        out.embedding = std::move(best);
    } else {
        out.embedding = std::move(E);
    }
    return out;
}

}  // namespace gve
