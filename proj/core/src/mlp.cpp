#include "gve/mlp.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "gve/adam.hpp"
#include "gve/parallel.hpp"
#include "gve/rng.hpp"

namespace gve {

MlpParams init_mlp(const std::vector<int>& layer_sizes, uint64_t seed) {
    if (layer_sizes.size() < 2)
        throw std::invalid_argument("init_mlp: need at least input and output sizes");
    for (int s : layer_sizes)
        if (s < 1) throw std::invalid_argument("init_mlp: layer sizes must be >= 1");

    MlpParams p;
    p.layer_sizes = layer_sizes;
    Rng rng(seed);
    for (size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        int in = layer_sizes[l];
        int out = layer_sizes[l + 1];
        double limit = std::sqrt(6.0 / (in + out));
        std::vector<double> w(static_cast<size_t>(out) * in);
        for (double& x : w) x = rng.uniform(-limit, limit);
        p.weights.push_back(std::move(w));
        p.biases.emplace_back(out, 0.0);
    }
    return p;
}

namespace {

// activations[l] has length layer_sizes[l]; activations[0] is the input.
void forward_stack(const MlpParams& p, std::span<const double> column,
                   std::vector<std::vector<double>>& activations) {
    size_t L = p.layer_count();
    activations.resize(L + 1);
    activations[0].assign(column.begin(), column.end());
    for (size_t l = 0; l < L; ++l) {
        int in = p.layer_sizes[l];
        int out = p.layer_sizes[l + 1];
        const std::vector<double>& w = p.weights[l];
        const std::vector<double>& b = p.biases[l];
        const std::vector<double>& a = activations[l];
        std::vector<double>& next = activations[l + 1];
        next.assign(out, 0.0);
        bool hidden = l + 1 < L;
        for (int o = 0; o < out; ++o) {
            double z = b[o];
            const double* wrow = w.data() + static_cast<size_t>(o) * in;
            for (int i = 0; i < in; ++i) z += wrow[i] * a[i];
            next[o] = hidden ? std::tanh(z) : z;
        }
    }
}

// Accumulates parameter gradients for one column given dLoss/d(output).
void backward_stack(const MlpParams& p,
                    const std::vector<std::vector<double>>& activations,
                    std::span<const double> dout, MlpGradient& grad) {
    size_t L = p.layer_count();
    std::vector<double> delta(dout.begin(), dout.end());
    for (size_t li = L; li-- > 0;) {
        int in = p.layer_sizes[li];
        int out = p.layer_sizes[li + 1];
        const std::vector<double>& a = activations[li];
        std::vector<double>& gw = grad.weights[li];
        std::vector<double>& gb = grad.biases[li];
        for (int o = 0; o < out; ++o) {
            double d = delta[o];
            gb[o] += d;
            double* gwrow = gw.data() + static_cast<size_t>(o) * in;
            for (int i = 0; i < in; ++i) gwrow[i] += d * a[i];
        }
        if (li == 0) break;
        std::vector<double> prev(in, 0.0);
        const std::vector<double>& w = p.weights[li];
        for (int o = 0; o < out; ++o) {
            double d = delta[o];
            const double* wrow = w.data() + static_cast<size_t>(o) * in;
            for (int i = 0; i < in; ++i) prev[i] += wrow[i] * d;
        }
        // tanh' through the stored activation of the hidden layer
        for (int i = 0; i < in; ++i) prev[i] *= 1.0 - a[i] * a[i];
        delta = std::move(prev);
    }
}

MlpGradient zero_gradient(const MlpParams& p) {
    MlpGradient g;
    for (size_t l = 0; l < p.layer_count(); ++l) {
        g.weights.emplace_back(p.weights[l].size(), 0.0);
        g.biases.emplace_back(p.biases[l].size(), 0.0);
    }
    return g;
}

void add_gradient(MlpGradient& into, const MlpGradient& from) {
    for (size_t l = 0; l < into.weights.size(); ++l) {
        for (size_t i = 0; i < into.weights[l].size(); ++i)
            into.weights[l][i] += from.weights[l][i];
        for (size_t i = 0; i < into.biases[l].size(); ++i)
            into.biases[l][i] += from.biases[l][i];
    }
    into.dalpha += from.dalpha;
}

// Forward every normalized column (= row of D / scale, D being symmetric)
// into an embedding row.
EmbeddingSet forward_all(const MlpParams& p, const DistanceMatrix& D,
                         double input_scale, double kappa) {
    int n = D.n;
    int m = p.output_size();
    EmbeddingSet E;
    E.n = n;
    E.m = m;
    E.kappa = kappa;
    E.e.assign(static_cast<size_t>(n) * m, 0.0);
    parallel_chunks(n, std::min(n, 16), [&](int, int begin, int end) {
        std::vector<std::vector<double>> acts;
        std::vector<double> col(n);
        for (int j = begin; j < end; ++j) {
            const double* row = D.row(j);
            for (int i = 0; i < n; ++i) col[i] = row[i] / input_scale;
            forward_stack(p, col, acts);
            const std::vector<double>& out = acts.back();
            for (int k = 0; k < m; ++k) E.at(j, k) = out[k];
        }
    });
    return E;
}

// Backprop dLoss/de_j for all columns into parameter space, chunked with
// per-chunk partials reduced in chunk order.
MlpGradient backward_all(const MlpParams& p, const DistanceMatrix& D,
                         double input_scale, const std::vector<double>& coord_grad,
                         int m) {
    int n = D.n;
    int chunks = std::min(n, 8);
    std::vector<MlpGradient> partial;
    partial.reserve(chunks);
    for (int c = 0; c < chunks; ++c) partial.push_back(zero_gradient(p));

    parallel_chunks(n, chunks, [&](int c, int begin, int end) {
        std::vector<std::vector<double>> acts;
        std::vector<double> col(n);
        for (int j = begin; j < end; ++j) {
            std::span<const double> dout{coord_grad.data() + static_cast<size_t>(j) * m,
                                         static_cast<size_t>(m)};
            bool all_zero = true;
            for (double x : dout)
                if (x != 0.0) {
                    all_zero = false;
                    break;
                }
            if (all_zero) continue;  // column untouched by the pair batch
            const double* row = D.row(j);
            for (int i = 0; i < n; ++i) col[i] = row[i] / input_scale;
            forward_stack(p, col, acts);
            backward_stack(p, acts, dout, partial[c]);
        }
    });

    MlpGradient total = zero_gradient(p);
    for (const MlpGradient& g : partial) add_gradient(total, g);
    return total;
}

}  // namespace

std::vector<double> mlp_forward(const MlpParams& params,
                                std::span<const double> column) {
    if (static_cast<int>(column.size()) != params.input_size())
        throw std::invalid_argument("mlp_forward: column length " +
                                    std::to_string(column.size()) +
                                    " does not match input size " +
                                    std::to_string(params.input_size()));
    std::vector<std::vector<double>> acts;
    forward_stack(params, column, acts);
    return acts.back();
}

void NeuralConfig::validate() const {
    opt.validate();
    if (hidden_sizes.empty())
        throw std::invalid_argument("hidden_sizes must be non-empty");
    for (int h : hidden_sizes)
        if (h < 1) throw std::invalid_argument("hidden sizes must be >= 1");
    if (input_scale < 0.0)
        throw std::invalid_argument("input_scale must be >= 0");
}

MlpGradient mlp_gradient(const MlpParams& params, const DistanceMatrix& D,
                         double input_scale, LossKind kind, double kappa,
                         double epsilon, KappaMode mode) {
    EmbeddingSet E = forward_all(params, D, input_scale, kappa);
    StressGradient sg = stress_gradient(E, D, kind, epsilon, mode);
    MlpGradient g = backward_all(params, D, input_scale, sg.coords, E.m);
    g.dalpha = sg.dalpha;
    return g;
}

EmbeddingSet neural_embedding(const MlpParams& params, const DistanceMatrix& D,
                              double input_scale, double kappa) {
    return forward_all(params, D, input_scale, kappa);
}

NeuralResult train_neural(const DistanceMatrix& D, const NeuralConfig& cfg) {
    cfg.validate();
    int n = D.n;
    if (n < 1) throw std::invalid_argument("train_neural: empty distance matrix");

    double scale = cfg.input_scale > 0.0 ? cfg.input_scale : D.max_value();
    if (scale <= 0.0) scale = 1.0;

    std::vector<int> sizes;
    sizes.push_back(n);
    sizes.insert(sizes.end(), cfg.hidden_sizes.begin(), cfg.hidden_sizes.end());
    sizes.push_back(cfg.opt.m);
    MlpParams params = init_mlp(sizes, cfg.opt.seed);

    bool learned = cfg.opt.kappa_mode == KappaMode::learned;
    double alpha = learned ? alpha_of_kappa(1.0) : 0.0;
    double kappa = learned ? kappa_of_alpha(alpha) : cfg.opt.kappa_value;

    Rng rng(cfg.opt.seed + 0x9e3779b97f4a7c15ull);  // batch sampling stream

    int64_t total_pairs = static_cast<int64_t>(n) * std::max(n - 1, 0) / 2;
    int64_t batch_size = cfg.opt.pair_batch > 0
                             ? std::min(cfg.opt.pair_batch, total_pairs)
                         : total_pairs <= 131072 ? 0
                                                 : 65536;
    bool full_batch = batch_size == 0;

    std::vector<Adam> adam_w, adam_b;
    for (size_t l = 0; l < params.layer_count(); ++l) {
        adam_w.emplace_back(params.weights[l].size());
        adam_b.emplace_back(params.biases[l].size());
    }
    Adam adam_alpha(1);
    std::vector<double> alpha_vec{alpha}, alpha_grad{0.0};

    NeuralResult out;
    out.input_scale = scale;

    MlpParams best = params;
    double best_kappa = kappa;
    double best_loss = std::numeric_limits<double>::infinity();
    PairList batch;

    for (int it = 0; it < cfg.opt.iterations; ++it) {
        EmbeddingSet E = forward_all(params, D, scale, kappa);
        double loss;
        StressGradient sg;
        if (full_batch) {
            loss = stress(E, D, cfg.opt.loss_kind, cfg.opt.epsilon);
            sg = stress_gradient(E, D, cfg.opt.loss_kind, cfg.opt.epsilon,
                                 cfg.opt.kappa_mode);
        } else {
            batch.pairs.clear();
            batch.pairs.reserve(batch_size);
            for (int64_t b = 0; b < batch_size; ++b) {
                int i = static_cast<int>(rng.integer(n));
                int j = static_cast<int>(rng.integer(n - 1));
                if (j >= i) ++j;
                batch.pairs.emplace_back(i, j);
            }
            loss = stress_on_pairs(E, D, cfg.opt.loss_kind, cfg.opt.epsilon, batch);
            sg = stress_gradient_on_pairs(E, D, cfg.opt.loss_kind, cfg.opt.epsilon,
                                          cfg.opt.kappa_mode, batch);
        }
        if (!std::isfinite(loss))
            throw std::runtime_error("train_neural: non-finite loss at iteration " +
                                     std::to_string(it));
        out.loss_trace.push_back(loss);
        if (full_batch && loss < best_loss) {
            best_loss = loss;
            best = params;
            best_kappa = kappa;
        }

        MlpGradient g = backward_all(params, D, scale, sg.coords, cfg.opt.m);
        for (size_t l = 0; l < params.layer_count(); ++l) {
            adam_w[l].step(params.weights[l], g.weights[l], cfg.opt.learning_rate);
            adam_b[l].step(params.biases[l], g.biases[l], cfg.opt.learning_rate);
        }
        if (learned) {
            alpha_grad[0] = sg.dalpha;
            adam_alpha.step(alpha_vec, alpha_grad, cfg.opt.alpha_learning_rate);
            kappa = kappa_of_alpha(alpha_vec[0]);
        }
    }

    if (full_batch) {
        EmbeddingSet final_E = forward_all(params, D, scale, kappa);
        double final_loss = stress(final_E, D, cfg.opt.loss_kind, cfg.opt.epsilon);
        if (std::isfinite(final_loss) && final_loss < best_loss) {
            out.params = std::move(params);
            out.embedding = std::move(final_E);
        } else {
            out.params = std::move(best);
            out.embedding = forward_all(out.params, D, scale, best_kappa);
        }
    } else {
        out.params = std::move(params);
        out.embedding = forward_all(out.params, D, scale, kappa);
    }
    return out;
}

void save_mlp(const std::string& path, const MlpModel& model) {
    nlohmann::json j;
    j["format"] = "gve-mlp";
    j["version"] = 1;
    j["activation"] = "tanh";
    j["layer_sizes"] = model.params.layer_sizes;
    j["weights"] = model.params.weights;
    j["biases"] = model.params.biases;
    j["input_scale"] = model.input_scale;
    j["kappa"] = model.kappa;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << j.dump() << "\n";
}

MlpModel load_mlp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    f >> j;
    if (j.value("format", "") != "gve-mlp")
        throw std::runtime_error(path + ": not a gve-mlp model file");
    if (j.value("version", 0) != 1)
        throw std::runtime_error(path + ": unsupported model version");
    MlpModel model;
    model.params.layer_sizes = j.at("layer_sizes").get<std::vector<int>>();
    model.params.weights = j.at("weights").get<std::vector<std::vector<double>>>();
    model.params.biases = j.at("biases").get<std::vector<std::vector<double>>>();
    model.input_scale = j.at("input_scale").get<double>();
    model.kappa = j.at("kappa").get<double>();
    return model;
}

}  // namespace gve
