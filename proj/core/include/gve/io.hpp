#pragma once

#include <iosfwd>
#include <string>

#include "gve/embedding.hpp"
#include "gve/graph.hpp"
#include "gve/metrics.hpp"

namespace gve {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// TSV embedding format: first line "# kappa=<value>", then a header row
// "node<TAB>x0..x{m-1}" and one row per vertex in node_names order with
// 9 significant digits.
void write_embedding_tsv(std::ostream& out, const Graph& g, const EmbeddingSet& E);
std::string embedding_to_tsv(const Graph& g, const EmbeddingSet& E);

// Reads an embedding back, aligning rows to the graph's vertex indices by
// node id. Throws when a vertex is missing or an unknown id appears.
EmbeddingSet read_embedding_tsv(std::istream& in, const Graph& g);
EmbeddingSet embedding_from_tsv(const std::string& text, const Graph& g);

// Community files: lines "node_id label".
void write_partition(std::ostream& out, const Graph& g, const Partition& p);
Partition read_partition(std::istream& in, const Graph& g);

}  // namespace gve
