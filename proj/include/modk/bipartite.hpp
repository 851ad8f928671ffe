#pragma once

#include <algorithm>
#include <vector>

#include "modk/graph.hpp"

namespace modk {

// Bipartite graph between two disjoint host-vertex sets, materialized as a
// copy with dense side-local indices plus the relabeling back to the host
// graph. Matching code runs on the local indices.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    // Synthetic instance on local ids; host ids coincide with local ones.
    static BipartiteGraph from_local_edges(int left_n, int right_n,
                                           const std::vector<std::pair<int, int>>& edges) {
        std::vector<int> left(static_cast<std::size_t>(left_n));
        std::vector<int> right(static_cast<std::size_t>(right_n));
        for (int i = 0; i < left_n; ++i)
            left[static_cast<std::size_t>(i)] = i;
        for (int j = 0; j < right_n; ++j)
            right[static_cast<std::size_t>(j)] = left_n + j;
        BipartiteGraph b;
        b.init(std::move(left), std::move(right));
        for (auto [u, w] : edges) {
            if (u < 0 || u >= left_n || w < 0 || w >= right_n)
                throw input_error("bipartite edge endpoint out of range");
            b.adj_left_[static_cast<std::size_t>(u)].push_back(w);
        }
        b.finish();
        return b;
    }

    int left_size() const { return static_cast<int>(left_.size()); }
    int right_size() const { return static_cast<int>(right_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<int>& left_hosts() const { return left_; }
    const std::vector<int>& right_hosts() const { return right_; }

    int host_left(int li) const { return left_.at(static_cast<std::size_t>(li)); }
    int host_right(int ri) const { return right_.at(static_cast<std::size_t>(ri)); }

    int left_index(int host) const {
        auto it = std::lower_bound(left_.begin(), left_.end(), host);
        return (it != left_.end() && *it == host)
                   ? static_cast<int>(it - left_.begin())
                   : -1;
    }

    int right_index(int host) const {
        auto it = std::lower_bound(right_.begin(), right_.end(), host);
        return (it != right_.end() && *it == host)
                   ? static_cast<int>(it - right_.begin())
                   : -1;
    }

    // Right-local neighbor indices of a left-local vertex, sorted.
    const std::vector<int>& adj_left(int li) const {
        return adj_left_.at(static_cast<std::size_t>(li));
    }

    const std::vector<int>& adj_right(int ri) const {
        return adj_right_.at(static_cast<std::size_t>(ri));
    }

    int degree_left(int li) const { return static_cast<int>(adj_left(li).size()); }
    int degree_right(int ri) const { return static_cast<int>(adj_right(ri).size()); }

    // Minimum degree over both sides; 0 for an empty side paired with a
    // nonempty one is handled by the vacuous-minimum convention below.
    int min_degree() const {
        int d = left_.empty() && right_.empty() ? 0 : INT_MAX_LOCAL;
        for (int i = 0; i < left_size(); ++i)
            d = std::min(d, degree_left(i));
        for (int j = 0; j < right_size(); ++j)
            d = std::min(d, degree_right(j));
        return d == INT_MAX_LOCAL ? 0 : d;
    }

    friend BipartiteGraph induced_bipartite(const Graph& g,
                                            const std::vector<int>& u_side,
                                            const std::vector<int>& w_side);

private:
    static constexpr int INT_MAX_LOCAL = 1 << 30;

    void init(std::vector<int> left, std::vector<int> right) {
        left_ = std::move(left);
        right_ = std::move(right);
        adj_left_.assign(left_.size(), {});
        adj_right_.assign(right_.size(), {});
    }

    void finish() {
        edge_count_ = 0;
        for (int li = 0; li < left_size(); ++li) {
            auto& nb = adj_left_[static_cast<std::size_t>(li)];
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            edge_count_ += nb.size();
            for (int ri : nb)
                adj_right_[static_cast<std::size_t>(ri)].push_back(li);
        }
        for (auto& nb : adj_right_)
            std::sort(nb.begin(), nb.end());
    }

    std::vector<int> left_;  // host ids, sorted
    std::vector<int> right_; // host ids, sorted
    std::vector<std::vector<int>> adj_left_;
    std::vector<std::vector<int>> adj_right_;
    std::size_t edge_count_ = 0;
};

// The bipartite subgraph of G induced between disjoint vertex sets U and W:
// exactly the edges with one endpoint in each. Degrees are relative to the
// view.
inline BipartiteGraph induced_bipartite(const Graph& g, const std::vector<int>& u_side,
                                        const std::vector<int>& w_side) {
    auto in_u = detail::membership_mask(g, u_side, "induced_bipartite");
    auto in_w = detail::membership_mask(g, w_side, "induced_bipartite");
    for (int v : u_side)
        if (in_w[static_cast<std::size_t>(v)])
            throw input_error("induced_bipartite: sides overlap at vertex " +
                              std::to_string(v));

    BipartiteGraph b;
    std::vector<int> left(u_side), right(w_side);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    b.init(std::move(left), std::move(right));
    for (int li = 0; li < b.left_size(); ++li)
        for (int nb : g.neighbors(b.host_left(li)))
            if (in_w[static_cast<std::size_t>(nb)])
                b.adj_left_[static_cast<std::size_t>(li)].push_back(b.right_index(nb));
    b.finish();
    return b;
}

} // namespace modk
