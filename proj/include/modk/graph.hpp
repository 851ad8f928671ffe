#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "modk/errors.hpp"

namespace modk {

// Undirected edge, stored normalized with u < v. Edge identity throughout
// the library is this normalized pair; colorings key on it.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) {
    if (a == b)
        throw input_error("self-loop {" + std::to_string(a) + "," +
                          std::to_string(b) + "} is not allowed");
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// "mutation" (edge removal, vertex deletion) produces new graphs, so graphs
// can be shared freely across concurrent trial workers.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0)
            throw input_error("vertex count must be non-negative");
    }

    Graph(int n, std::vector<Edge> edges) : Graph(n) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (const Edge& e : edges) {
            check_vertex(e.u);
            check_vertex(e.v);
            if (e.u == e.v)
                throw input_error("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                throw input_error("edge not normalized");
        }
        edges_ = std::move(edges);
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [a, b] : pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw input_error("edge endpoint out of range 0.." +
                                  std::to_string(n - 1));
            edges.push_back(make_edge(a, b));
        }
        return Graph(n, std::move(edges));
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted, duplicate-free.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    bool has_edge(int a, int b) const {
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
            return false;
        const auto& nb = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) +
                              " out of range 0.." + std::to_string(n_ - 1));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    return Graph::from_pairs(n, pairs);
}

// Degree classes V_1..V_k: v lands in V_i iff deg(v) = i (mod k).
//
// Index convention, relied on everywhere downstream: classes are 1-based and
// residue 0 is stored as class k. In particular isolated vertices (degree 0)
// live in V_k. Use cls(i) with i in 1..k; class_of(v) returns that index.
struct DegreeClassPartition {
    int k = 2;
    std::vector<std::vector<int>> classes; // classes[i-1] = V_i, sorted
    std::vector<int> class_index;          // per-vertex class in 1..k

    const std::vector<int>& cls(int i) const {
        if (i < 1 || i > k)
            throw input_error("class index must be in 1..k");
        return classes[static_cast<std::size_t>(i - 1)];
    }

    int size(int i) const { return static_cast<int>(cls(i).size()); }

    int class_of(int v) const { return class_index.at(static_cast<std::size_t>(v)); }

    std::vector<int> sizes() const {
        std::vector<int> s;
        s.reserve(classes.size());
        for (const auto& c : classes)
            s.push_back(static_cast<int>(c.size()));
        return s;
    }
};

inline int residue_class(int degree, int k) {
    const int r = degree % k;
    return r == 0 ? k : r;
}

inline DegreeClassPartition degree_classes(const Graph& g, int k) {
    if (k < 2)
        throw input_error("modulus k must be at least 2");
    DegreeClassPartition part;
    part.k = k;
    part.classes.assign(static_cast<std::size_t>(k), {});
    part.class_index.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int i = residue_class(g.degree(v), k);
        part.classes[static_cast<std::size_t>(i - 1)].push_back(v);
        part.class_index[static_cast<std::size_t>(v)] = i;
    }
    return part;
}

inline Graph remove_edges(const Graph& g, const std::vector<Edge>& removed) {
    for (const Edge& e : removed)
        if (!g.has_edge(e))
            throw input_error("remove_edges: edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "} not present");
    std::vector<Edge> gone(removed);
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    std::set_difference(g.edges().begin(), g.edges().end(), gone.begin(),
                        gone.end(), std::back_inserter(kept));
    return Graph(g.vertex_count(), std::move(kept));
}

inline Graph add_edges(const Graph& g, const std::vector<Edge>& added) {
    std::vector<Edge> all = g.edges();
    for (const Edge& e : added) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        all.push_back(make_edge(e.u, e.v));
    }
    return Graph(g.vertex_count(), std::move(all));
}

// Deletes vertex u; vertices above u shift down by one.
inline Graph remove_vertex(const Graph& g, int u) {
    g.check_vertex(u);
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    auto relabel = [u](int v) { return v < u ? v : v - 1; };
    for (const Edge& e : g.edges())
        if (e.u != u && e.v != u)
            kept.push_back(make_edge(relabel(e.u), relabel(e.v)));
    return Graph(g.vertex_count() - 1, std::move(kept));
}

namespace detail {

inline std::vector<char> membership_mask(const Graph& g, const std::vector<int>& s,
                                         const char* who) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) {
        g.check_vertex(v);
        if (in[static_cast<std::size_t>(v)])
            throw input_error(std::string(who) + ": duplicate vertex " +
                              std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

} // namespace detail

// Connectivity of the induced subgraph G[S]. Empty S is an input error: the
// caller decides what the vacuous case means.
inline bool is_connected(const Graph& g, const std::vector<int>& s) {
    if (s.empty())
        throw input_error("is_connected: empty vertex set");
    const auto in = detail::membership_mask(g, s, "is_connected");
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    q.push(s.front());
    seen[static_cast<std::size_t>(s.front())] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == s.size();
}

// True iff every vertex outside S has a neighbor in S.
inline bool is_dominating(const Graph& g, const std::vector<int>& s) {
    const auto in = detail::membership_mask(g, s, "is_dominating");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<std::size_t>(v)])
            continue;
        bool covered = false;
        for (int w : g.neighbors(v)) {
            if (in[static_cast<std::size_t>(w)]) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

} // namespace modk
