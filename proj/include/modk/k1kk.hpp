#pragma once

#include <vector>

#include "modk/edge_coloring.hpp"
#include "modk/graph.hpp"

namespace modk {

// The complete 3-partite graph K_{1,k,k}: apex u = 0, sides A = {1..k} and
// B = {k+1..2k}. For k = 2 this is the 4-wheel. Its mod-k chromatic index is
// k+2, witnessed by the coloring below; no k+1 colors suffice.
inline Graph k1kk_graph(int k) {
    if (k < 2)
        throw input_error("k1kk_graph: k must be at least 2");
    std::vector<Edge> edges;
    const auto a = [](int i) { return i; };         // 1..k
    const auto b = [k](int j) { return k + j; };    // 1..k
    for (int i = 1; i <= k; ++i) {
        edges.push_back(make_edge(0, a(i)));
        edges.push_back(make_edge(0, b(i)));
        for (int j = 1; j <= k; ++j)
            edges.push_back(make_edge(a(i), b(j)));
    }
    return Graph(2 * k + 1, std::move(edges));
}

// (k+2)-coloring of K_{1,k,k}: start from the proper (k+1)-edge-coloring of
// K_{k+1,k+1} given by color(a_i, b_j) = ((i+j) mod (k+1)) + 1, drop a_{k+1}
// and b_{k+1}, color the k+1 edges u-a_1..u-a_k, u-b_1 with color k+2, and
// give u-b_j (j >= 2) the color that b_j lost with a_{k+1}, namely j+1.
// Classes 1..k+1 are matchings; class k+2 is a star with k+1 rays.
inline EdgeColoring k1kk_coloring(int k) {
    if (k < 2)
        throw input_error("k1kk_coloring: k must be at least 2");
    EdgeColoring col;
    col.k = k;
    col.color_count = k + 2;
    const auto a = [](int i) { return i; };
    const auto b = [k](int j) { return k + j; };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            col.assignment[make_edge(a(i), b(j))] = (i + j) % (k + 1) + 1;
    for (int i = 1; i <= k; ++i)
        col.assignment[make_edge(0, a(i))] = k + 2;
    col.assignment[make_edge(0, b(1))] = k + 2;
    for (int j = 2; j <= k; ++j)
        col.assignment[make_edge(0, b(j))] = j + 1; // missing color at b_j
    return col;
}

} // namespace modk
