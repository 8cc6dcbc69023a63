#pragma once

#include <string>

#include "gve/embedding.hpp"
#include "gve/graph.hpp"
#include "gve/metrics.hpp"

namespace gve {

struct DrawStyle {
    double width = 800.0;
    double height = 800.0;
    double margin = 40.0;
    double node_radius = 5.0;
};

// Renders a 2-D embedding as SVG 1.1 text: edges first, then one circle per
// vertex, optionally colored by community through a fixed 12-color palette.
// The embedding is fitted into the viewport with a uniform scale so the
// aspect ratio of the layout is preserved. Output is byte-identical for
// identical inputs. Requires E.m == 2.
std::string draw_svg(const Graph& g, const EmbeddingSet& E,
                     const Partition* communities = nullptr,
                     const DrawStyle& style = {});

}  // namespace gve
