#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "modk/graph.hpp"
#include "modk/rng.hpp"

namespace modk {

// Bijumbledness checks: |e(U,W) - p|U||W|| <= alpha*sqrt(|U||W|) over
// disjoint U, W. The weak variant restricts to |U| <= |W| <= p*n*|U|; the
// strong variant quantifies over all disjoint pairs. The single-set
// consequence |e(G[U]) - p*C(|U|,2)| <= alpha*|U| is checked alongside.
//
// Exhaustive mode (n <= 16) scans every pair and is definitive; sampled mode
// draws seeded random pairs plus all singleton-vs-neighborhood pairs and
// only reports evidence, never a definitive pass.

enum class BijumbledMode { exhaustive, sampled };
enum class BijumbledVariant { weak, strong };

// For graphs of density ~p the reference slack is alpha = A*sqrt(p*n) with
// A = e^2 * sqrt(6).
inline double bijumbled_reference_A() {
    return std::exp(2.0) * std::sqrt(6.0);
}

inline double bijumbled_reference_alpha(double p, int n) {
    return bijumbled_reference_A() * std::sqrt(p * static_cast<double>(n));
}

struct PairStat {
    std::vector<int> u_set;
    std::vector<int> w_set; // empty for single-set stats
    double edge_count = 0.0;
    double expected = 0.0;
    double deviation = 0.0; // |edge_count - expected|
    double slack = 0.0;     // allowed deviation at this pair
    double excess = 0.0;    // deviation - slack; positive = bound violated
};

struct BijumbledReport {
    double p = 0.0;
    double alpha = 0.0;
    BijumbledMode mode = BijumbledMode::sampled;
    BijumbledVariant variant = BijumbledVariant::weak;
    bool pass = false; // no checked pair (cross or single-set) exceeds its bound
    std::uint64_t pairs_checked = 0;
    std::uint64_t single_sets_checked = 0;
    PairStat worst_pair;   // maximal excess among cross pairs
    PairStat worst_single; // maximal excess among single-set checks
    // Edge-existence corollary: disjoint pairs with min side >= threshold and
    // e(U,W) = 0, flagged among the checked pairs (never part of `pass`).
    int existence_threshold = 0;
    std::uint64_t zero_edge_pairs = 0;
    PairStat zero_edge_example;
};

namespace detail {

struct BitAdjacency {
    int n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> rows; // n rows of `words` words

    explicit BitAdjacency(const Graph& g)
        : n(g.vertex_count()),
          words(static_cast<std::size_t>((g.vertex_count() + 63) / 64)),
          rows(static_cast<std::size_t>(g.vertex_count()) * words, 0) {
        for (const Edge& e : g.edges()) {
            set(e.u, e.v);
            set(e.v, e.u);
        }
    }

    void set(int r, int c) {
        rows[static_cast<std::size_t>(r) * words + static_cast<std::size_t>(c) / 64] |=
            std::uint64_t{1} << (c % 64);
    }

    std::uint64_t count_row_in(int r, const std::vector<std::uint64_t>& mask) const {
        std::uint64_t total = 0;
        const std::uint64_t* row = rows.data() + static_cast<std::size_t>(r) * words;
        for (std::size_t w = 0; w < words; ++w)
            total += static_cast<std::uint64_t>(std::popcount(row[w] & mask[w]));
        return total;
    }
};

inline std::vector<std::uint64_t> to_mask(const std::vector<int>& set, std::size_t words) {
    std::vector<std::uint64_t> mask(words, 0);
    for (int v : set)
        mask[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    return mask;
}

inline double cross_edges(const BitAdjacency& adj, const std::vector<int>& u_set,
                          const std::vector<std::uint64_t>& w_mask) {
    std::uint64_t e = 0;
    for (int u : u_set)
        e += adj.count_row_in(u, w_mask);
    return static_cast<double>(e);
}

inline void consider(PairStat& worst, bool& any, const PairStat& cand) {
    if (!any || cand.excess > worst.excess) {
        worst = cand;
        any = true;
    }
}

} // namespace detail

inline BijumbledReport check_bijumbled(const Graph& g, double p, double alpha,
                                       BijumbledMode mode,
                                       std::uint64_t sample_count, std::uint64_t seed,
                                       BijumbledVariant variant = BijumbledVariant::weak) {
    if (p < 0.0 || p > 1.0)
        throw input_error("check_bijumbled: p must lie in [0,1]");
    if (alpha < 0.0)
        throw input_error("check_bijumbled: alpha must be non-negative");
    const int n = g.vertex_count();
    if (mode == BijumbledMode::exhaustive && n > 16)
        throw input_error("check_bijumbled: exhaustive mode is limited to n <= 16");

    BijumbledReport report;
    report.p = p;
    report.alpha = alpha;
    report.mode = mode;
    report.variant = variant;
    report.existence_threshold =
        p > 0.0 ? static_cast<int>(std::floor(alpha / p)) + 1 : 0;

    detail::BitAdjacency adj(g);
    bool any_pair = false, any_single = false, any_zero = false;

    const double pn = p * static_cast<double>(n);
    auto in_weak_scope = [&](std::size_t su, std::size_t sw) {
        const auto lo = std::min(su, sw);
        const auto hi = std::max(su, sw);
        return static_cast<double>(hi) <= pn * static_cast<double>(lo);
    };

    auto record_pair = [&](const std::vector<int>& u_set, const std::vector<int>& w_set,
                           double e) {
        PairStat st;
        st.u_set = u_set;
        st.w_set = w_set;
        st.edge_count = e;
        st.expected = p * static_cast<double>(u_set.size()) *
                      static_cast<double>(w_set.size());
        st.deviation = std::abs(e - st.expected);
        st.slack = alpha * std::sqrt(static_cast<double>(u_set.size()) *
                                     static_cast<double>(w_set.size()));
        st.excess = st.deviation - st.slack;
        detail::consider(report.worst_pair, any_pair, st);
        ++report.pairs_checked;
        if (report.existence_threshold > 0 && e == 0.0 &&
            std::min(u_set.size(), w_set.size()) >=
                static_cast<std::size_t>(report.existence_threshold)) {
            ++report.zero_edge_pairs;
            if (!any_zero) {
                report.zero_edge_example = st;
                any_zero = true;
            }
        }
    };

    auto record_single = [&](const std::vector<int>& u_set, double inner_edges) {
        PairStat st;
        st.u_set = u_set;
        st.edge_count = inner_edges;
        const double su = static_cast<double>(u_set.size());
        st.expected = p * su * (su - 1.0) / 2.0;
        st.deviation = std::abs(inner_edges - st.expected);
        st.slack = alpha * su;
        st.excess = st.deviation - st.slack;
        detail::consider(report.worst_single, any_single, st);
        ++report.single_sets_checked;
    };

    if (mode == BijumbledMode::exhaustive) {
        const std::uint32_t full = n >= 32 ? 0xFFFFFFFFu : ((1u << n) - 1);
        std::vector<int> deg_in_u(static_cast<std::size_t>(n));
        auto unpack = [&](std::uint32_t mask) {
            std::vector<int> out;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v))
                    out.push_back(v);
            return out;
        };
        for (std::uint32_t u_mask = 1; u_mask <= full; ++u_mask) {
            const auto u_set = unpack(u_mask);
            // single-set bound for this U
            double inner = 0.0;
            for (int v : u_set)
                for (int w : g.neighbors(v))
                    if (w > v && (u_mask & (1u << w)))
                        inner += 1.0;
            record_single(u_set, inner);

            for (int v = 0; v < n; ++v) {
                int d = 0;
                for (int w : g.neighbors(v))
                    if (u_mask & (1u << w))
                        ++d;
                deg_in_u[static_cast<std::size_t>(v)] = d;
            }
            const std::uint32_t comp = full & ~u_mask;
            // enumerate W over subsets of the complement; each unordered pair
            // once via u_mask < w_mask
            std::vector<int> comp_vertices = unpack(comp);
            // recursive subset walk carrying |W| and e(U,W)
            struct Frame {
                std::size_t idx;
                std::uint32_t w_mask;
                int w_size;
                int e;
            };
            std::vector<Frame> stack{{0, 0, 0, 0}};
            while (!stack.empty()) {
                Frame f = stack.back();
                stack.pop_back();
                if (f.idx == comp_vertices.size()) {
                    if (f.w_size == 0 || u_mask > f.w_mask)
                        continue;
                    const std::size_t su = u_set.size();
                    const std::size_t sw = static_cast<std::size_t>(f.w_size);
                    if (variant == BijumbledVariant::weak && !in_weak_scope(su, sw))
                        continue;
                    record_pair(u_set, unpack(f.w_mask), static_cast<double>(f.e));
                    continue;
                }
                const int v = comp_vertices[f.idx];
                stack.push_back({f.idx + 1, f.w_mask, f.w_size, f.e});
                stack.push_back({f.idx + 1, f.w_mask | (1u << v), f.w_size + 1,
                                 f.e + deg_in_u[static_cast<std::size_t>(v)]});
            }
        }
    } else {
        // all singleton-vs-neighborhood pairs first
        for (int v = 0; v < n; ++v) {
            const auto& nb = g.neighbors(v);
            if (nb.empty())
                continue;
            if (variant == BijumbledVariant::weak && !in_weak_scope(1, nb.size()))
                continue;
            record_pair({v}, nb, static_cast<double>(nb.size()));
        }
        Rng rng(seed);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            perm[static_cast<std::size_t>(v)] = v;
        std::uint64_t drawn = 0;
        std::uint64_t guard = 0;
        const std::uint64_t guard_limit = sample_count * 20 + 1000;
        while (drawn < sample_count && n >= 2 && guard < guard_limit) {
            ++guard;
            const int su = 1 + rng.int_below(n - 1);
            int w_lo = 1, w_hi = n - su;
            if (variant == BijumbledVariant::weak) {
                w_lo = su;
                w_hi = std::min(w_hi, static_cast<int>(pn * static_cast<double>(su)));
            }
            if (w_lo > w_hi)
                continue;
            const int sw = w_lo + rng.int_below(w_hi - w_lo + 1);
            // partial Fisher-Yates: first su+sw entries become U and W
            for (int i = 0; i < su + sw; ++i) {
                const int j = i + rng.int_below(n - i);
                std::swap(perm[static_cast<std::size_t>(i)],
                          perm[static_cast<std::size_t>(j)]);
            }
            std::vector<int> u_set(perm.begin(), perm.begin() + su);
            std::vector<int> w_set(perm.begin() + su, perm.begin() + su + sw);
            std::sort(u_set.begin(), u_set.end());
            std::sort(w_set.begin(), w_set.end());
            const auto w_mask = detail::to_mask(w_set, adj.words);
            record_pair(u_set, w_set, detail::cross_edges(adj, u_set, w_mask));
            // single-set consequence, sampled on the same draws
            double inner = 0.0;
            for (int v : u_set)
                for (int w : g.neighbors(v))
                    if (w > v && std::binary_search(u_set.begin(), u_set.end(), w))
                        inner += 1.0;
            record_single(u_set, inner);
            ++drawn;
        }
    }

    const bool pairs_ok = !any_pair || report.worst_pair.excess <= 0.0;
    const bool singles_ok = !any_single || report.worst_single.excess <= 0.0;
    report.pass = pairs_ok && singles_ok;
    return report;
}

} // namespace modk
