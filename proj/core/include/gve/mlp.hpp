#pragma once

#include <span>
#include <string>
#include <vector>

#include "gve/optimize.hpp"

namespace gve {

// Feed-forward network mapping a normalized distance-matrix column to an
// embedding: tanh hidden layers, linear output.
struct MlpParams {
    std::vector<int> layer_sizes;              // [n, hidden..., m]
    std::vector<std::vector<double>> weights;  // per layer, out x in row-major
    std::vector<std::vector<double>> biases;   // per layer, out

    int input_size() const { return layer_sizes.front(); }
    int output_size() const { return layer_sizes.back(); }
    size_t layer_count() const { return weights.size(); }
};

// Xavier-uniform weights, zero biases, seeded.
MlpParams init_mlp(const std::vector<int>& layer_sizes, uint64_t seed);

// column must already be divided by input_scale and have length n.
std::vector<double> mlp_forward(const MlpParams& params,
                                std::span<const double> column);

struct NeuralConfig {
    OptimConfig opt;
    std::vector<int> hidden_sizes{128, 128};
    double input_scale = 0.0;  // 0 = automatic (max entry of D)

    NeuralConfig() { opt.learning_rate = 0.01; }

    void validate() const;
};

struct MlpGradient {
    std::vector<std::vector<double>> weights;  // same shapes as MlpParams
    std::vector<std::vector<double>> biases;
    double dalpha = 0.0;
};

// Exact gradient of the stress objective with respect to every network
// parameter, by reverse-mode accumulation through the pairwise loss, plus
// dLoss/dalpha when kappa is learned.
MlpGradient mlp_gradient(const MlpParams& params, const DistanceMatrix& D,
                         double input_scale, LossKind kind, double kappa,
                         double epsilon, KappaMode mode);

struct NeuralResult {
    MlpParams params;
    EmbeddingSet embedding;  // f(D_col_j) for every j, with the final kappa
    std::vector<double> loss_trace;
    double input_scale = 1.0;
};

// Trains the network by Adam on the same stress objective as the direct
// path. Deterministic given the config; throws on non-finite loss.
NeuralResult train_neural(const DistanceMatrix& D, const NeuralConfig& cfg);

// Versioned JSON model container; load/save round-trips losslessly.
struct MlpModel {
    MlpParams params;
    double input_scale = 1.0;
    double kappa = 1.0;
};

void save_mlp(const std::string& path, const MlpModel& model);
MlpModel load_mlp(const std::string& path);

// Embeddings induced by a trained model on a distance matrix.
EmbeddingSet neural_embedding(const MlpParams& params, const DistanceMatrix& D,
                              double input_scale, double kappa);

}  // namespace gve
