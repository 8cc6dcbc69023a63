#include "gve/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gve {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

namespace {

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

void write_embedding_tsv(std::ostream& out, const Graph& g, const EmbeddingSet& E) {
    out << "# kappa=" << fmt9(E.kappa) << "\n";
    out << "node";
    for (int k = 0; k < E.m; ++k) out << "\tx" << k;
    out << "\n";
    for (int i = 0; i < g.n; ++i) {
        out << g.node_names[i];
        for (int k = 0; k < E.m; ++k) out << "\t" << fmt9(E.at(i, k));
        out << "\n";
    }
}

std::string embedding_to_tsv(const Graph& g, const EmbeddingSet& E) {
    std::ostringstream ss;
    write_embedding_tsv(ss, g, E);
    return ss.str();
}

EmbeddingSet read_embedding_tsv(std::istream& in, const Graph& g) {
    EmbeddingSet E;
    E.n = g.n;
    E.m = -1;
    std::string line;
    int lineno = 0;
    std::vector<bool> seen(g.n, false);
    bool have_kappa = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            size_t pos = line.find("kappa=");
            if (pos != std::string::npos && !have_kappa) {
                E.kappa = std::stod(line.substr(pos + 6));
                have_kappa = true;
            }
            continue;
        }
        std::istringstream ss(line);
        std::string id;
        ss >> id;
        if (id == "node") continue;  // header

        std::vector<double> coords;
        double x;
        while (ss >> x) coords.push_back(x);
        if (E.m < 0) {
            E.m = static_cast<int>(coords.size());
            if (E.m < 1) throw std::runtime_error("embedding line " + std::to_string(lineno) +
                                                  ": no coordinates");
            E.e.assign(static_cast<size_t>(g.n) * E.m, 0.0);
        }
        if (static_cast<int>(coords.size()) != E.m)
            throw std::runtime_error("embedding line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(E.m) + " coordinates");
        auto it = g.node_index.find(id);
        if (it == g.node_index.end())
            throw std::runtime_error("embedding line " + std::to_string(lineno) +
                                     ": unknown node '" + id + "'");
        if (seen[it->second])
            throw std::runtime_error("embedding line " + std::to_string(lineno) +
                                     ": duplicate node '" + id + "'");
        seen[it->second] = true;
        for (int k = 0; k < E.m; ++k) E.e[static_cast<size_t>(it->second) * E.m + k] = coords[k];
    }
    for (int i = 0; i < g.n; ++i)
        if (!seen[i])
            throw std::runtime_error("embedding is missing node '" + g.node_names[i] + "'");
    if (E.m < 0) {
        if (g.n > 0) throw std::runtime_error("embedding file has no data rows");
        E.m = 0;
    }
    return E;
}

EmbeddingSet embedding_from_tsv(const std::string& text, const Graph& g) {
    std::istringstream ss(text);
    return read_embedding_tsv(ss, g);
}

void write_partition(std::ostream& out, const Graph& g, const Partition& p) {
    for (int i = 0; i < g.n; ++i)
        out << g.node_names[i] << " " << p.labels[i] << "\n";
}

Partition read_partition(std::istream& in, const Graph& g) {
    std::vector<int> raw(g.n, -1);
    std::vector<bool> seen(g.n, false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string id;
        long label;
        if (!(ss >> id >> label))
            throw std::runtime_error("labels line " + std::to_string(lineno) +
                                     ": expected 'node_id label'");
        auto it = g.node_index.find(id);
        if (it == g.node_index.end())
            throw std::runtime_error("labels line " + std::to_string(lineno) +
                                     ": unknown node '" + id + "'");
        if (seen[it->second])
            throw std::runtime_error("labels line " + std::to_string(lineno) +
                                     ": duplicate node '" + id + "'");
        seen[it->second] = true;
        raw[it->second] = static_cast<int>(label);
    }
    for (int i = 0; i < g.n; ++i)
        if (!seen[i])
            throw std::runtime_error("labels are missing node '" + g.node_names[i] + "'");
    return make_partition(raw);
}

}  // namespace gve
