#pragma once

#include <map>
#include <string>
#include <vector>

#include "modk/graph.hpp"

namespace modk {

// Edge coloring with colors in 1..color_count. A coloring is valid for
// modulus k when, in every color class, every vertex of nonzero class degree
// has degree = 1 (mod k). Total unless flagged partial (star-forest
// colorings are partial by design).
struct EdgeColoring {
    int k = 2;
    int color_count = 0;
    std::map<Edge, int> assignment;
    bool partial = false;

    int color_of(const Edge& e) const {
        auto it = assignment.find(e);
        if (it == assignment.end())
            throw input_error("edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "} is uncolored");
        return it->second;
    }

    // Distinct colors actually used.
    int colors_used() const {
        std::vector<char> seen(static_cast<std::size_t>(color_count) + 1, 0);
        int used = 0;
        for (const auto& [e, c] : assignment)
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                ++used;
            }
        return used;
    }
};

struct ColoringViolation {
    int vertex = 0;
    int color = 0;
    int degree = 0;

    friend bool operator==(const ColoringViolation&, const ColoringViolation&) = default;
};

struct ValidityReport {
    bool valid = false;
    std::vector<ColoringViolation> violations; // sorted by (vertex, color)
};

// Checks the mod-k validity condition for a total coloring of G. Partial
// colorings, missing edges, unknown edges and out-of-range colors are input
// errors; only residue failures are report content.
inline ValidityReport verify_coloring(const Graph& g, const EdgeColoring& col) {
    if (col.partial)
        throw input_error("verify_coloring: partial coloring");
    if (col.assignment.size() != g.edge_count())
        throw input_error("verify_coloring: coloring does not cover the edge set "
                          "exactly (" +
                          std::to_string(col.assignment.size()) + " assigned, " +
                          std::to_string(g.edge_count()) + " edges)");
    if (col.k < 2)
        throw input_error("verify_coloring: modulus k must be at least 2");
    for (const auto& [e, c] : col.assignment) {
        if (!g.has_edge(e))
            throw input_error("verify_coloring: assignment for non-edge {" +
                              std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        if (c < 1 || c > col.color_count)
            throw input_error("verify_coloring: color " + std::to_string(c) +
                              " outside 1.." + std::to_string(col.color_count));
    }

    // degree_by_color[v] built lazily as a flat map; graphs are desk scale.
    std::vector<std::map<int, int>> degree_by_color(
        static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [e, c] : col.assignment) {
        ++degree_by_color[static_cast<std::size_t>(e.u)][c];
        ++degree_by_color[static_cast<std::size_t>(e.v)][c];
    }

    ValidityReport report;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const auto& [c, d] : degree_by_color[static_cast<std::size_t>(v)])
            if (d % col.k != 1)
                report.violations.push_back({v, c, d});
    report.valid = report.violations.empty();
    return report;
}

} // namespace modk
