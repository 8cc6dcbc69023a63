#include "gve/drawing.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gve {

namespace {

const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string draw_svg(const Graph& g, const EmbeddingSet& E,
                     const Partition* communities, const DrawStyle& style) {
    if (E.m != 2) throw std::invalid_argument("draw_svg: embedding dimension must be 2");
    if (E.n != g.n) throw std::invalid_argument("draw_svg: embedding/graph size mismatch");
    if (communities && static_cast<int>(communities->labels.size()) != g.n)
        throw std::invalid_argument("draw_svg: partition/graph size mismatch");

    // uniform scale fit into [margin, width-margin] x [margin, height-margin]
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    if (g.n > 0) {
        min_x = max_x = E.at(0, 0);
        min_y = max_y = E.at(0, 1);
        for (int i = 1; i < g.n; ++i) {
            min_x = std::min(min_x, E.at(i, 0));
            max_x = std::max(max_x, E.at(i, 0));
            min_y = std::min(min_y, E.at(i, 1));
            max_y = std::max(max_y, E.at(i, 1));
        }
    }
    double span_x = max_x - min_x;
    double span_y = max_y - min_y;
    double avail_x = style.width - 2.0 * style.margin;
    double avail_y = style.height - 2.0 * style.margin;
    double scale = 1.0;
    if (span_x > 0.0 || span_y > 0.0)
        scale = std::min(span_x > 0.0 ? avail_x / span_x : std::numeric_limits<double>::infinity(),
                         span_y > 0.0 ? avail_y / span_y : std::numeric_limits<double>::infinity());
    double off_x = style.margin + 0.5 * (avail_x - span_x * scale) - min_x * scale;
    double off_y = style.margin + 0.5 * (avail_y - span_y * scale) - min_y * scale;

    auto px = [&](int i) { return E.at(i, 0) * scale + off_x; };
    auto py = [&](int i) { return E.at(i, 1) * scale + off_y; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(style.width) +
           "\" height=\"" + fmt(style.height) + "\" viewBox=\"0 0 " + fmt(style.width) +
           " " + fmt(style.height) + "\">\n";

    for (const Edge& e : g.edges) {
        svg += "  <line x1=\"" + fmt(px(e.u)) + "\" y1=\"" + fmt(py(e.u)) +
               "\" x2=\"" + fmt(px(e.v)) + "\" y2=\"" + fmt(py(e.v)) +
               "\" stroke=\"#808080\" stroke-opacity=\"0.5\" stroke-width=\"1\"/>\n";
    }
    for (int i = 0; i < g.n; ++i) {
        const char* fill = communities ? kPalette[communities->labels[i] % 12] : kPalette[0];
        svg += "  <circle cx=\"" + fmt(px(i)) + "\" cy=\"" + fmt(py(i)) + "\" r=\"" +
               fmt(style.node_radius) + "\" fill=\"" + std::string(fill) + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace gve
