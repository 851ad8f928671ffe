#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "modk/certificates.hpp"
#include "modk/edge_coloring.hpp"
#include "modk/graph.hpp"

namespace modk {

// Ground-truth chi'_k on small graphs by pruned backtracking over edges.
//
// Pruning is twofold and purely local:
//  - color symmetry breaking: the j-th edge may use at most one more than
//    the largest color used on earlier edges;
//  - residue deficits: a vertex v whose color-c degree d is nonzero and
//    != 1 (mod k) still needs (1 - d) mod k more c-edges; if the deficits
//    summed over colors exceed v's uncolored incident edges, backtrack.
//
// Budget exhaustion is a distinct outcome, never conflated with infeasible.

struct SearchBudget {
    int max_colors = 0;                 // 0 = automatic (edge count)
    std::uint64_t node_limit = 100'000'000;
    double time_limit_seconds = 0.0;    // 0 = no wall-clock cap
};

enum class DecideStatus { feasible, infeasible, budget_exceeded };

inline const char* to_string(DecideStatus s) {
    switch (s) {
    case DecideStatus::feasible: return "feasible";
    case DecideStatus::infeasible: return "infeasible";
    case DecideStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

struct DecideResult {
    DecideStatus status = DecideStatus::infeasible;
    EdgeColoring witness; // populated when feasible
    std::uint64_t nodes = 0;
};

namespace detail {

class DecideSearch {
public:
    DecideSearch(const Graph& g, int k, int c, const SearchBudget& budget)
        : g_(g), k_(k), c_(c), budget_(budget),
          start_(std::chrono::steady_clock::now()) {
        order_ = g.edges();
        std::stable_sort(order_.begin(), order_.end(), [&g](const Edge& a, const Edge& b) {
            return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
        });
        const auto n = static_cast<std::size_t>(g.vertex_count());
        color_deg_.assign(n * static_cast<std::size_t>(c + 1), 0);
        deficit_.assign(n, 0);
        remaining_.assign(n, 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            remaining_[static_cast<std::size_t>(v)] = g.degree(v);
        chosen_.assign(order_.size(), 0);
    }

    DecideResult run() {
        DecideResult result;
        const int verdict = dfs(0, 0);
        result.nodes = nodes_;
        if (verdict == 1) {
            result.status = DecideStatus::feasible;
            result.witness.k = k_;
            result.witness.color_count = c_;
            for (std::size_t j = 0; j < order_.size(); ++j)
                result.witness.assignment[order_[j]] = chosen_[j];
        } else if (verdict == 0) {
            result.status = DecideStatus::infeasible;
        } else {
            result.status = DecideStatus::budget_exceeded;
        }
        return result;
    }

private:
    // edges still to color at v must cover its residue deficits
    int need(int d) const { return d == 0 ? 0 : ((1 - d) % k_ + k_) % k_; }

    bool apply(int v, int color, int delta) {
        auto& cd = color_deg_[static_cast<std::size_t>(v) * (c_ + 1) +
                              static_cast<std::size_t>(color)];
        deficit_[static_cast<std::size_t>(v)] -= need(cd);
        cd += delta;
        deficit_[static_cast<std::size_t>(v)] += need(cd);
        remaining_[static_cast<std::size_t>(v)] -= delta;
        return deficit_[static_cast<std::size_t>(v)] <=
               remaining_[static_cast<std::size_t>(v)];
    }

    bool out_of_budget() {
        if (budget_.node_limit > 0 && nodes_ >= budget_.node_limit)
            return true;
        if (budget_.time_limit_seconds > 0.0 && (nodes_ & 0xFFF) == 0) {
            const auto elapsed = std::chrono::duration<double>(
                std::chrono::steady_clock::now() - start_);
            if (elapsed.count() > budget_.time_limit_seconds)
                return true;
        }
        return false;
    }

    // 1 feasible, 0 infeasible, -1 budget exceeded
    int dfs(std::size_t idx, int max_used) {
        if (idx == order_.size())
            return 1;
        const Edge e = order_[idx];
        const int limit = std::min(c_, max_used + 1);
        for (int color = 1; color <= limit; ++color) {
            ++nodes_;
            if (out_of_budget())
                return -1;
            const bool ok_u = apply(e.u, color, +1);
            const bool ok_v = apply(e.v, color, +1);
            if (ok_u && ok_v) {
                chosen_[idx] = color;
                const int sub = dfs(idx + 1, std::max(max_used, color));
                if (sub != 0)
                    return sub;
            }
            apply(e.u, color, -1);
            apply(e.v, color, -1);
        }
        return 0;
    }

    const Graph& g_;
    int k_, c_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Edge> order_;
    std::vector<int> color_deg_;
    std::vector<int> deficit_;
    std::vector<int> remaining_;
    std::vector<int> chosen_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

inline DecideResult decide_coloring(const Graph& g, int k, int c,
                                    const SearchBudget& budget = {}) {
    if (k < 2)
        throw input_error("decide_coloring: k must be at least 2");
    if (c < 1)
        throw input_error("decide_coloring: c must be at least 1");
    if (g.edge_count() == 0) {
        DecideResult result;
        result.status = DecideStatus::feasible;
        result.witness.k = k;
        result.witness.color_count = c;
        return result;
    }
    detail::DecideSearch search(g, k, c, budget);
    return search.run();
}

struct ChiResult {
    bool resolved = false;
    int chi = 0;              // valid when resolved
    EdgeColoring witness;     // valid when resolved
    int lower_bound = 0;      // proven in all outcomes
    int upper_bound = -1;     // -1 = none known
    std::uint64_t nodes = 0;
    std::vector<LowerBoundCertificate> certificates;
};

// Smallest feasible c, scanning upward from the best certificate bound. One
// color per singleton edge class is always valid, so the scan terminates at
// the edge count unless a tighter max_colors cap is given.
inline ChiResult chi_k_exact(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (g.edge_count() == 0)
        throw input_error("chi_k_exact: graph must have at least one edge");
    ChiResult result;
    result.certificates = find_certificates(g, k);
    result.lower_bound = certificate_lower_bound(g, result.certificates);
    const int max_c = budget.max_colors > 0 ? budget.max_colors
                                            : static_cast<int>(g.edge_count());
    for (int c = result.lower_bound; c <= max_c; ++c) {
        const DecideResult step = decide_coloring(g, k, c, budget);
        result.nodes += step.nodes;
        if (step.status == DecideStatus::feasible) {
            result.resolved = true;
            result.chi = c;
            result.witness = step.witness;
            result.lower_bound = c;
            result.upper_bound = c;
            return result;
        }
        if (step.status == DecideStatus::budget_exceeded) {
            result.lower_bound = c; // everything below c is proven infeasible
            return result;
        }
        result.lower_bound = c + 1;
    }
    return result; // max_colors cap hit: chi > max_c, bracketed by lower_bound
}

} // namespace modk
