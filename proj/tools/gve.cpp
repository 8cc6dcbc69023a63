// Command-line front end: embed graphs, detect communities, run classical
// baselines, evaluate fit metrics and render SVG drawings.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gve/baselines.hpp"
#include "gve/clustering.hpp"
#include "gve/drawing.hpp"
#include "gve/io.hpp"
#include "gve/metrics.hpp"
#include "gve/mlp.hpp"
#include "gve/optimize.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

gve::Graph load_graph(const std::string& path) {
    return gve::parse_edge_list(gve::read_file(path));
}

gve::LossKind parse_loss(const std::string& s) {
    if (s == "abs") return gve::LossKind::absolute;
    if (s == "rel") return gve::LossKind::relative;
    throw UsageError("--loss must be 'abs' or 'rel'");
}

// "auto" -> learned, otherwise a fixed value inside [0.05, 2.0]
void parse_kappa(const std::string& s, gve::OptimConfig& cfg) {
    if (s == "auto") {
        cfg.kappa_mode = gve::KappaMode::learned;
        return;
    }
    cfg.kappa_mode = gve::KappaMode::fixed;
    try {
        size_t pos = 0;
        cfg.kappa_value = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw UsageError("--kappa must be 'auto' or a number");
    }
    if (cfg.kappa_value < gve::kKappaMin || cfg.kappa_value > gve::kKappaMax)
        throw UsageError("--kappa must lie in [0.05, 2.0]");
}

int cmd_embed(const std::string& graph_path, const std::string& out_path,
              int m, const std::string& loss, const std::string& kappa,
              const std::string& method, int iters, uint64_t seed, double lr,
              const std::vector<int>& hidden, const std::string& model_out) {
    gve::OptimConfig cfg;
    cfg.loss_kind = parse_loss(loss);
    parse_kappa(kappa, cfg);
    cfg.m = m;
    cfg.iterations = iters;
    cfg.seed = seed;
    if (method != "direct" && method != "neural")
        throw UsageError("--method must be 'direct' or 'neural'");
    if (lr > 0.0)
        cfg.learning_rate = lr;
    else if (method == "neural")
        cfg.learning_rate = 0.01;

    auto t0 = std::chrono::steady_clock::now();
    gve::Graph g = load_graph(graph_path);
    gve::DistanceMatrix D = gve::apsp(g);

    gve::EmbeddingSet E;
    size_t iterations_run = 0;
    if (method == "direct") {
        gve::OptimResult res = gve::optimize_direct(D, cfg);
        E = std::move(res.embedding);
        iterations_run = res.loss_trace.size();
    } else {
        gve::NeuralConfig ncfg;
        ncfg.opt = cfg;
        if (!hidden.empty()) ncfg.hidden_sizes = hidden;
        gve::NeuralResult res = gve::train_neural(D, ncfg);
        E = std::move(res.embedding);
        iterations_run = res.loss_trace.size();
        if (!model_out.empty())
            gve::save_mlp(model_out, gve::MlpModel{std::move(res.params),
                                                   res.input_scale, E.kappa});
    }

    std::string tsv = gve::embedding_to_tsv(g, E);
    gve::write_file(out_path, tsv);

    // report metrics of what was actually written (quantized to the file's
    // 9 significant digits), so a later `eval` reproduces them exactly
    gve::EmbeddingSet written = gve::embedding_from_tsv(tsv, g);
    auto t1 = std::chrono::steady_clock::now();

    json out;
    out["rmse"] = g.n >= 2 ? gve::rmse(written, D) : 0.0;
    out["rmrse"] = g.n >= 2 ? gve::rmrse(written, D) : 0.0;
    out["kappa"] = written.kappa;
    out["iterations"] = iterations_run;
    out["wall_seconds"] = std::chrono::duration<double>(t1 - t0).count();
    std::cout << out.dump() << "\n";
    return 0;
}

json score_against_truth(const gve::Partition& p, const gve::Partition& truth) {
    json j;
    j["ars"] = gve::adjusted_rand_score(p, truth);
    j["nmi"] = gve::normalized_mutual_info(p, truth);
    return j;
}

int cmd_communities(const std::string& graph_path, const std::string& emb_path,
                    const std::string& algos_csv, const std::string& truth_path,
                    const std::string& out_path) {
    std::set<std::string> algos;
    std::stringstream ss(algos_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) algos.insert(tok);
    }
    if (algos.empty()) throw UsageError("--algos must name at least one algorithm");
    for (const std::string& a : algos)
        if (a != "mean_shift" && a != "affinity" && a != "agglo" && a != "dbscan")
            throw UsageError("unknown algorithm '" + a + "'");

    gve::Graph g = load_graph(graph_path);
    gve::EmbeddingSet E = gve::embedding_from_tsv(gve::read_file(emb_path), g);

    std::optional<gve::Partition> truth;
    if (!truth_path.empty()) {
        std::istringstream ts(gve::read_file(truth_path));
        truth = gve::read_partition(ts, g);
    }

    std::vector<gve::CommunityResult> results = gve::detect_communities(g, E, algos);
    if (results.empty()) throw std::runtime_error("no grid cell produced a partition");

    json cells = json::array();
    for (const gve::CommunityResult& r : results) {
        json c;
        c["algorithm"] = r.algorithm;
        c["params"] = r.params;
        c["modularity"] = r.modularity;
        c["k"] = r.partition.k;
        if (truth) {
            json s = score_against_truth(r.partition, *truth);
            c["ars"] = s["ars"];
            c["nmi"] = s["nmi"];
        }
        cells.push_back(std::move(c));
    }

    std::ostringstream pf;
    gve::write_partition(pf, g, results.front().partition);
    gve::write_file(out_path, pf.str());

    json out;
    out["results"] = std::move(cells);
    out["best"] = out["results"].front();
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_baselines(const std::string& graph_path, const std::string& algo,
                  uint64_t seed, const std::string& truth_path,
                  const std::string& select, const std::string& out_path) {
    gve::Graph g = load_graph(graph_path);

    gve::Partition p;
    if (algo == "louvain") {
        p = gve::louvain(g, seed);
    } else if (algo == "gn") {
        std::optional<int> target_k;
        if (select != "modularity") {
            if (select.rfind("k=", 0) != 0)
                throw UsageError("--select must be 'modularity' or 'k=<int>'");
            try {
                target_k = std::stoi(select.substr(2));
            } catch (const std::exception&) {
                throw UsageError("--select k=<int>: bad integer");
            }
            if (*target_k < 1) throw UsageError("--select k must be >= 1");
        }
        p = gve::girvan_newman(g, target_k);
    } else if (algo == "greedy") {
        p = gve::greedy_modularity(g);
    } else if (algo == "lpa") {
        p = gve::label_propagation(g, seed);
    } else if (algo == "kl") {
        p = gve::kernighan_lin(g, seed);
    } else {
        throw UsageError("--algo must be one of louvain, gn, greedy, lpa, kl");
    }

    std::ostringstream pf;
    gve::write_partition(pf, g, p);
    gve::write_file(out_path, pf.str());

    json out;
    out["algorithm"] = algo;
    out["modularity"] = gve::modularity(g, p);
    out["k"] = p.k;
    if (!truth_path.empty()) {
        std::istringstream ts(gve::read_file(truth_path));
        gve::Partition truth = gve::read_partition(ts, g);
        json s = score_against_truth(p, truth);
        out["ars"] = s["ars"];
        out["nmi"] = s["nmi"];
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_eval(const std::string& graph_path, const std::string& emb_path,
             const std::string& loss) {
    parse_loss(loss);  // validate
    gve::Graph g = load_graph(graph_path);
    gve::EmbeddingSet E = gve::embedding_from_tsv(gve::read_file(emb_path), g);
    gve::DistanceMatrix D = gve::apsp(g);

    json out;
    out["rmse"] = g.n >= 2 ? gve::rmse(E, D) : 0.0;
    out["rmrse"] = g.n >= 2 ? gve::rmrse(E, D) : 0.0;
    out["kappa"] = E.kappa;
    out["m"] = E.m;
    out["loss_kind"] = loss;
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_draw(const std::string& graph_path, const std::string& emb_path,
             const std::string& communities_path, const std::string& out_path,
             double width, double height, double margin, double radius) {
    gve::Graph g = load_graph(graph_path);
    gve::EmbeddingSet E = gve::embedding_from_tsv(gve::read_file(emb_path), g);
    if (E.m != 2) throw UsageError("draw requires a 2-dimensional embedding (got m=" +
                                   std::to_string(E.m) + ")");

    std::optional<gve::Partition> communities;
    if (!communities_path.empty()) {
        std::istringstream cs(gve::read_file(communities_path));
        communities = gve::read_partition(cs, g);
    }

    gve::DrawStyle style;
    style.width = width;
    style.height = height;
    style.margin = margin;
    style.node_radius = radius;
    std::string svg = gve::draw_svg(g, E, communities ? &*communities : nullptr, style);
    gve::write_file(out_path, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph vertex embeddings: stress-minimizing embeddings, "
                 "community detection and drawing"};
    app.require_subcommand(1);

    // embed
    std::string e_graph, e_out, e_loss = "abs", e_kappa = "auto", e_method = "direct";
    std::string e_model_out;
    int e_m = 2, e_iters = 2000;
    uint64_t e_seed = 42;
    double e_lr = 0.0;
    std::vector<int> e_hidden;
    CLI::App* embed = app.add_subcommand("embed", "fit vertex embeddings");
    embed->add_option("--graph", e_graph, "edge list file")->required();
    embed->add_option("--out", e_out, "output embedding TSV")->required();
    embed->add_option("--m", e_m, "embedding dimension")->check(CLI::PositiveNumber);
    embed->add_option("--loss", e_loss, "abs or rel");
    embed->add_option("--kappa", e_kappa, "auto or fixed value in [0.05, 2]");
    embed->add_option("--method", e_method, "direct or neural");
    embed->add_option("--iters", e_iters, "optimizer iterations")->check(CLI::PositiveNumber);
    embed->add_option("--seed", e_seed, "random seed");
    embed->add_option("--lr", e_lr, "learning rate (default 0.05 direct, 0.01 neural)");
    embed->add_option("--hidden", e_hidden, "hidden layer sizes (neural)")->delimiter(',');
    embed->add_option("--model-out", e_model_out, "save trained model JSON (neural)");

    // communities
    std::string c_graph, c_emb, c_algos = "mean_shift,affinity,agglo,dbscan";
    std::string c_truth, c_out;
    CLI::App* comm = app.add_subcommand("communities", "cluster an embedding into communities");
    comm->add_option("--graph", c_graph, "edge list file")->required();
    comm->add_option("--embedding", c_emb, "embedding TSV")->required();
    comm->add_option("--algos", c_algos, "comma list of mean_shift,affinity,agglo,dbscan");
    comm->add_option("--truth", c_truth, "ground-truth labels file");
    comm->add_option("--out", c_out, "output partition file")->required();

    // baselines
    std::string b_graph, b_algo, b_truth, b_select = "modularity", b_out;
    uint64_t b_seed = 42;
    CLI::App* base = app.add_subcommand("baselines", "classical community detection");
    base->add_option("--graph", b_graph, "edge list file")->required();
    base->add_option("--algo", b_algo, "louvain, gn, greedy, lpa or kl")->required();
    base->add_option("--seed", b_seed, "random seed");
    base->add_option("--truth", b_truth, "ground-truth labels file");
    base->add_option("--select", b_select, "gn stopping rule: modularity or k=<int>");
    base->add_option("--out", b_out, "output partition file")->required();

    // eval
    std::string v_graph, v_emb, v_loss = "abs";
    CLI::App* eval = app.add_subcommand("eval", "fit metrics of an embedding");
    eval->add_option("--graph", v_graph, "edge list file")->required();
    eval->add_option("--embedding", v_emb, "embedding TSV")->required();
    eval->add_option("--loss", v_loss, "abs or rel (echoed in the output)");

    // draw
    std::string d_graph, d_emb, d_comm, d_out;
    double d_width = 800, d_height = 800, d_margin = 40, d_radius = 5;
    CLI::App* draw = app.add_subcommand("draw", "render a 2-D embedding as SVG");
    draw->add_option("--graph", d_graph, "edge list file")->required();
    draw->add_option("--embedding", d_emb, "embedding TSV (m=2)")->required();
    draw->add_option("--communities", d_comm, "partition file for node colors");
    draw->add_option("--out", d_out, "output SVG file")->required();
    draw->add_option("--width", d_width, "viewport width");
    draw->add_option("--height", d_height, "viewport height");
    draw->add_option("--margin", d_margin, "viewport margin");
    draw->add_option("--radius", d_radius, "node radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (embed->parsed())
            return cmd_embed(e_graph, e_out, e_m, e_loss, e_kappa, e_method, e_iters,
                             e_seed, e_lr, e_hidden, e_model_out);
        if (comm->parsed())
            return cmd_communities(c_graph, c_emb, c_algos, c_truth, c_out);
        if (base->parsed())
            return cmd_baselines(b_graph, b_algo, b_seed, b_truth, b_select, b_out);
        if (eval->parsed()) return cmd_eval(v_graph, v_emb, v_loss);
        if (draw->parsed())
            return cmd_draw(d_graph, d_emb, d_comm, d_out, d_width, d_height,
                            d_margin, d_radius);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
