#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "modk/bipartite.hpp"
#include "modk/graph.hpp"
#include "modk/rng.hpp"

namespace modk {

struct Matching {
    std::vector<int> left_to_right; // local; -1 = unmatched
    std::vector<int> right_to_left;
    int size = 0;
    // Deficient set S of left-local vertices with |N(S)| < |S|, present
    // whenever size < min(|L|,|R|). Extracted from the final alternating
    // reachability cut.
    std::optional<std::vector<int>> hall_witness;
};

namespace detail {

// Kuhn's augmenting-path step over an explicit adjacency (right-local lists
// per left vertex). Deterministic: vertices and neighbors in index order.
inline bool try_augment(int li, const std::vector<std::vector<int>>& adj,
                        std::vector<int>& match_l, std::vector<int>& match_r,
                        std::vector<char>& visited_r) {
    for (int ri : adj[static_cast<std::size_t>(li)]) {
        if (visited_r[static_cast<std::size_t>(ri)])
            continue;
        visited_r[static_cast<std::size_t>(ri)] = 1;
        if (match_r[static_cast<std::size_t>(ri)] == -1 ||
            try_augment(match_r[static_cast<std::size_t>(ri)], adj, match_l, match_r,
                        visited_r)) {
            match_l[static_cast<std::size_t>(li)] = ri;
            match_r[static_cast<std::size_t>(ri)] = li;
            return true;
        }
    }
    return false;
}

inline Matching max_matching_adj(const std::vector<std::vector<int>>& adj,
                                 int left_n, int right_n) {
    Matching m;
    m.left_to_right.assign(static_cast<std::size_t>(left_n), -1);
    m.right_to_left.assign(static_cast<std::size_t>(right_n), -1);
    for (int li = 0; li < left_n; ++li) {
        std::vector<char> visited_r(static_cast<std::size_t>(right_n), 0);
        if (try_augment(li, adj, m.left_to_right, m.right_to_left, visited_r))
            ++m.size;
    }
    if (m.size < std::min(left_n, right_n)) {
        // Alternating BFS from every unmatched left vertex: S = reachable left
        // vertices, N(S) = reachable right vertices (all matched, partners in
        // S), so |N(S)| <= |S| - #unmatched roots < |S|.
        std::vector<char> in_s(static_cast<std::size_t>(left_n), 0);
        std::vector<char> in_t(static_cast<std::size_t>(right_n), 0);
        std::vector<int> stack;
        for (int li = 0; li < left_n; ++li)
            if (m.left_to_right[static_cast<std::size_t>(li)] == -1 &&
                !in_s[static_cast<std::size_t>(li)]) {
                in_s[static_cast<std::size_t>(li)] = 1;
                stack.push_back(li);
                while (!stack.empty()) {
                    const int cur = stack.back();
                    stack.pop_back();
                    for (int ri : adj[static_cast<std::size_t>(cur)]) {
                        if (in_t[static_cast<std::size_t>(ri)])
                            continue;
                        in_t[static_cast<std::size_t>(ri)] = 1;
                        const int back = m.right_to_left[static_cast<std::size_t>(ri)];
                        if (back != -1 && !in_s[static_cast<std::size_t>(back)]) {
                            in_s[static_cast<std::size_t>(back)] = 1;
                            stack.push_back(back);
                        }
                    }
                }
            }
        std::vector<int> witness;
        for (int li = 0; li < left_n; ++li)
            if (in_s[static_cast<std::size_t>(li)])
                witness.push_back(li);
        m.hall_witness = std::move(witness);
    }
    return m;
}

} // namespace detail

// Maximum-cardinality matching by augmenting-path search, with a deficiency
// witness when the smaller side cannot be saturated.
inline Matching max_matching(const BipartiteGraph& b) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(b.left_size()));
    for (int li = 0; li < b.left_size(); ++li)
        adj[static_cast<std::size_t>(li)] = b.adj_left(li);
    return detail::max_matching_adj(adj, b.left_size(), b.right_size());
}

// r edge-disjoint perfect matchings covering U and W, i.e. an r-regular
// spanning subgraph of the instance, obtained by repeatedly extracting a
// perfect matching and deleting its edges.
struct FactorResult {
    bool success = false;
    int r = 0;
    std::vector<std::vector<Edge>> matchings; // host-id edges, one list per round
    // On failure: 1-based round that had no perfect matching, plus the Hall
    // witness (host ids of left vertices).
    int failed_iteration = -1;
    std::vector<int> hall_witness_hosts;
};

inline FactorResult extract_r_factor(const BipartiteGraph& b, int r) {
    if (r < 0)
        throw input_error("extract_r_factor: negative factor degree");
    if (b.left_size() != b.right_size())
        throw input_error("extract_r_factor: sides must have equal size");
    if (b.left_size() < 1)
        throw input_error("extract_r_factor: empty instance");

    const int n = b.left_size();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int li = 0; li < n; ++li)
        adj[static_cast<std::size_t>(li)] = b.adj_left(li);

    FactorResult result;
    result.r = r;
    for (int round = 1; round <= r; ++round) {
        Matching m = detail::max_matching_adj(adj, n, n);
        if (m.size < n) {
            result.failed_iteration = round;
            for (int li : *m.hall_witness)
                result.hall_witness_hosts.push_back(b.host_left(li));
            return result;
        }
        std::vector<Edge> matched;
        matched.reserve(static_cast<std::size_t>(n));
        for (int li = 0; li < n; ++li) {
            const int ri = m.left_to_right[static_cast<std::size_t>(li)];
            matched.push_back(make_edge(b.host_left(li), b.host_right(ri)));
            auto& nb = adj[static_cast<std::size_t>(li)];
            nb.erase(std::find(nb.begin(), nb.end(), ri));
        }
        std::sort(matched.begin(), matched.end());
        result.matchings.push_back(std::move(matched));
    }
    result.success = true;
    return result;
}

// Randomized balanced split of S into equal halves. S is paired in sorted
// order (the pairing is fixed so runs are reproducible); each attempt flips
// one fair coin per pair and the best attempt by induced bipartite minimum
// degree is kept, stopping early once the 2*delta/5 target is met. The
// target is a gate flag, not a hard failure: downstream factor extraction
// decides success.
struct SplitResult {
    std::vector<int> u_side; // sorted host ids
    std::vector<int> w_side;
    int achieved_min_degree = 0;
    int attempts = 0;
    int target = 0; // ceil(2 * delta(G[S]) / 5)
    bool target_met = false;
};

inline SplitResult balanced_split(const Graph& g, const std::vector<int>& s,
                                  int retries, std::uint64_t seed) {
    if (s.size() < 2 || s.size() % 2 != 0)
        throw input_error("balanced_split: |S| must be even and at least 2");
    if (retries < 1)
        throw input_error("balanced_split: retries must be positive");
    auto in_s = detail::membership_mask(g, s, "balanced_split");

    std::vector<int> ordered(s);
    std::sort(ordered.begin(), ordered.end());
    const std::size_t pairs = ordered.size() / 2;

    // delta(G[S])
    int delta = g.vertex_count();
    for (int v : ordered) {
        int d = 0;
        for (int nb : g.neighbors(v))
            d += in_s[static_cast<std::size_t>(nb)];
        delta = std::min(delta, d);
    }

    SplitResult best;
    best.target = (2 * delta + 4) / 5;
    best.achieved_min_degree = -1;

    Rng rng(seed);
    std::vector<char> side(ordered.size()); // 1 = U
    for (int attempt = 1; attempt <= retries; ++attempt) {
        for (std::size_t i = 0; i < pairs; ++i) {
            const bool first_to_u = rng.coin();
            side[2 * i] = first_to_u;
            side[2 * i + 1] = !first_to_u;
        }
        std::vector<char> in_u(static_cast<std::size_t>(g.vertex_count()), 0);
        for (std::size_t i = 0; i < ordered.size(); ++i)
            if (side[i])
                in_u[static_cast<std::size_t>(ordered[i])] = 1;
        int min_cross = g.vertex_count();
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            const int v = ordered[i];
            int cross = 0;
            for (int nb : g.neighbors(v))
                if (in_s[static_cast<std::size_t>(nb)] &&
                    in_u[static_cast<std::size_t>(nb)] != side[i])
                    ++cross;
            min_cross = std::min(min_cross, cross);
        }
        if (min_cross > best.achieved_min_degree) {
            best.achieved_min_degree = min_cross;
            best.u_side.clear();
            best.w_side.clear();
            for (std::size_t i = 0; i < ordered.size(); ++i)
                (side[i] ? best.u_side : best.w_side).push_back(ordered[i]);
            best.attempts = attempt;
        }
        if (best.achieved_min_degree >= best.target) {
            best.attempts = attempt;
            break;
        }
        best.attempts = attempt;
    }
    best.target_met = best.achieved_min_degree >= best.target;
    return best;
}

} // namespace modk
