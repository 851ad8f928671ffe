#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "modk/edge_coloring.hpp"
#include "modk/graph.hpp"
#include "modk/matching.hpp"
#include "modk/rng.hpp"
#include "modk/star_forest.hpp"

namespace modk {

// Constructive mod-k coloring. The three parity cases share one pipeline:
//
//   1. pick a star forest F so that every class size n_i(G - E(F)), i >= 2,
//      becomes even (how F is chosen depends on the parity of k),
//   2. split each class V_i(G') into balanced halves and extract an
//      (i-1)-factor B_i between them, coloring its matchings with 2..i,
//   3. color the stars with 2..i per star, and the mod-k remainder
//      G'' = G' - E(B) with color 1.
//
// k even, n odd instead deletes a vertex u, colors G - u as above, and
// spends one extra color on most of u's edges.
//
// Every proof step that the construction relies on is recomputed and checked
// at runtime; a failed check is reported as a staged failure, never a crash.

enum class EngineCase { even_even, even_odd, odd };

inline const char* to_string(EngineCase c) {
    switch (c) {
    case EngineCase::even_even: return "even_even";
    case EngineCase::even_odd: return "even_odd";
    case EngineCase::odd: return "odd";
    }
    return "?";
}

struct StageLogEntry {
    std::string stage;
    bool ok = false;
    std::string detail;
};

struct ClassSplit {
    int class_index = 0;
    SplitResult split;
};

struct ClassFactor {
    int class_index = 0;
    FactorResult factor;
};

struct ConstructionTrace {
    EngineCase case_tag = EngineCase::even_even;
    StarForest forest;
    std::vector<ClassSplit> splits;
    std::vector<ClassFactor> factors;
    int removed_vertex = -1;
    std::vector<StageLogEntry> stage_log;
};

struct EngineFailure {
    std::string stage; // star_selection | parity | split | factor | precondition_u | verify
    std::string reason;
};

struct ColoringResult {
    bool success = false;
    EdgeColoring coloring;
    int colors_used = 0;
    ConstructionTrace trace;
    EngineFailure failure;
};

inline bool is_mod_k_graph(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d > 0 && d % k != 1)
            return false;
    }
    return true;
}

// Relabels used colors to 1..m preserving their relative order, so color 1
// stays color 1 whenever it is used.
inline void compact_colors(EdgeColoring& col) {
    std::set<int> used;
    for (const auto& [e, c] : col.assignment)
        used.insert(c);
    std::map<int, int> remap;
    int next = 1;
    for (int c : used)
        remap[c] = next++;
    for (auto& [e, c] : col.assignment)
        c = remap[c];
    col.color_count = next - 1;
}

namespace detail {

inline ColoringResult engine_fail(ColoringResult&& result, const std::string& stage,
                                  const std::string& reason) {
    result.success = false;
    result.failure = {stage, reason};
    result.trace.stage_log.push_back({stage, false, reason});
    return std::move(result);
}

inline void engine_log(ColoringResult& result, const std::string& stage,
                       const std::string& detail) {
    result.trace.stage_log.push_back({stage, true, detail});
}

// Shared body of the k-color cases (k even & n even, and k odd). Returns a
// raw coloring: color 1 on the mod-k remainder, 2..i on B_i and the stars.
// Postconditions checked here and required by case_even_odd: the coloring is
// valid, uses colors within 1..k, and every edge incident to V_1(G) has
// color 1.
inline ColoringResult mod_k_body(const Graph& g, int k, std::uint64_t seed,
                                 EngineCase tag) {
    ColoringResult result;
    result.trace.case_tag = tag;

    if (g.edge_count() == 0) {
        result.success = true;
        result.coloring.k = k;
        engine_log(result, "verify", "edgeless graph; empty coloring");
        return result;
    }

    const auto part = degree_classes(g, k);

    ParityPlan plan;
    for (int i = 3; i <= k; ++i)
        if (part.size(i) % 2 == 1)
            plan.repair_classes.push_back(i);
    if (tag == EngineCase::odd) {
        long long leaves_taken = 0;
        for (int i : plan.repair_classes)
            leaves_taken += i - 1;
        const bool n2_odd_after =
            ((part.size(2) - leaves_taken) % 2 + 2) % 2 == 1;
        if (n2_odd_after)
            plan.fix = plan.repair_classes.empty() ? ParityFix::twin_stars
                                                   : ParityFix::extend_one;
    }

    StarForestResult stars = select_star_forest(g, k, plan);
    if (!stars.success)
        return engine_fail(std::move(result), "star_selection", stars.reason);
    result.trace.forest = stars.forest;
    engine_log(result, "star_selection",
               std::to_string(stars.forest.stars.size()) + " stars");

    const Graph g_prime = remove_edges(g, stars.forest.edges());
    const auto part_prime = degree_classes(g_prime, k);
    for (int i = 2; i <= k; ++i)
        if (part_prime.size(i) % 2 != 0)
            return engine_fail(std::move(result), "parity",
                               "n_" + std::to_string(i) +
                                   "(G') = " + std::to_string(part_prime.size(i)) +
                                   " is odd");
    engine_log(result, "parity", "all n_i(G'), i >= 2, even");

    EdgeColoring col;
    col.k = k;
    col.color_count = k;
    std::vector<Edge> factor_edges;

    for (int i = 2; i <= k; ++i) {
        if (part_prime.size(i) == 0)
            continue; // vacuous factor
        const auto& cls = part_prime.cls(i);
        SplitResult split =
            balanced_split(g_prime, cls, 100, derive_seed(seed, "split", i));
        result.trace.splits.push_back({i, split});
        engine_log(result, "split",
                   "class " + std::to_string(i) + ": min cross degree " +
                       std::to_string(split.achieved_min_degree) + " (target " +
                       std::to_string(split.target) +
                       (split.target_met ? ", met)" : ", missed)"));

        const BipartiteGraph bip =
            induced_bipartite(g_prime, split.u_side, split.w_side);
        FactorResult factor = extract_r_factor(bip, i - 1);
        result.trace.factors.push_back({i, factor});
        if (!factor.success) {
            const auto& witness = result.trace.factors.back().factor.hall_witness_hosts;
            return engine_fail(std::move(result), "factor",
                               "class " + std::to_string(i) + ": no perfect matching at round " +
                                   std::to_string(factor.failed_iteration) +
                                   " (Hall witness size " +
                                   std::to_string(witness.size()) + ")");
        }
        for (int j = 0; j < static_cast<int>(factor.matchings.size()); ++j)
            for (const Edge& e : factor.matchings[static_cast<std::size_t>(j)]) {
                col.assignment[e] = 2 + j;
                factor_edges.push_back(e);
            }
        engine_log(result, "factor",
                   "class " + std::to_string(i) + ": " + std::to_string(i - 1) +
                       " matchings of size " + std::to_string(cls.size() / 2));
    }

    const Graph g_dprime = remove_edges(g_prime, factor_edges);
    if (!is_mod_k_graph(g_dprime, k))
        return engine_fail(std::move(result), "verify",
                           "residual graph is not a mod-k graph");
    for (const Edge& e : g_dprime.edges())
        col.assignment[e] = 1;

    const EdgeColoring star_col = color_star_forest(stars.forest, k);
    for (const auto& [e, c] : star_col.assignment)
        col.assignment[e] = c;

    const ValidityReport report = verify_coloring(g, col);
    if (!report.valid)
        return engine_fail(std::move(result), "verify",
                           std::to_string(report.violations.size()) +
                               " residue violations");
    for (int v : part.cls(1))
        for (int nb : g.neighbors(v))
            if (col.color_of(make_edge(v, nb)) != 1)
                return engine_fail(std::move(result), "verify",
                                   "V_1 vertex " + std::to_string(v) +
                                       " touches a color != 1");
    engine_log(result, "verify", "coloring valid; V_1 edges monochromatic");

    result.success = true;
    result.coloring = std::move(col);
    result.colors_used = result.coloring.colors_used();
    return result;
}

inline ColoringResult finalize(ColoringResult&& result) {
    if (result.success) {
        compact_colors(result.coloring);
        result.colors_used = result.coloring.colors_used();
    }
    return std::move(result);
}

} // namespace detail

// k even, n even: k colors. Guarantees on success that every vertex of V_1(G)
// is incident only to edges of color 1 (case_even_odd depends on this).
inline ColoringResult case_even_even(const Graph& g, int k, std::uint64_t seed = 0) {
    if (k < 2 || k % 2 != 0)
        throw input_error("case_even_even: k must be even and at least 2");
    if (g.vertex_count() % 2 != 0)
        throw input_error("case_even_even: vertex count must be even");
    return detail::finalize(detail::mod_k_body(g, k, seed, EngineCase::even_even));
}

// k odd: k colors, any n. Same pipeline, with the n_2 parity repaired by an
// extended star or the twin stars when needed.
inline ColoringResult case_odd(const Graph& g, int k, std::uint64_t seed = 0) {
    if (k < 3 || k % 2 == 0)
        throw input_error("case_odd: k must be odd and at least 3");
    return detail::finalize(detail::mod_k_body(g, k, seed, EngineCase::odd));
}

// k even, n odd: k+1 colors. Deletes the first vertex u (in id order) with
// at least k-1 neighbors in V_1(G-u), colors G-u with the even/even case,
// gives colors 2..d to d-1 edges from u into V_1(G-u) where d = deg(u)
// (mod k), and a fresh color k+1 to the remaining edges at u.
inline ColoringResult case_even_odd(const Graph& g, int k, std::uint64_t seed = 0) {
    if (k < 2 || k % 2 != 0)
        throw input_error("case_even_odd: k must be even and at least 2");
    if (g.vertex_count() % 2 != 1)
        throw input_error("case_even_odd: vertex count must be odd");

    ColoringResult result;
    result.trace.case_tag = EngineCase::even_odd;

    if (g.edge_count() == 0) {
        result.success = true;
        result.coloring.k = k;
        detail::engine_log(result, "verify", "edgeless graph; empty coloring");
        return result;
    }

    int chosen = -1;
    std::vector<int> v1_neighbors; // host ids of N(u) in V_1(G-u)
    for (int u = 0; u < g.vertex_count() && chosen == -1; ++u) {
        const Graph h = remove_vertex(g, u);
        const auto part_h = degree_classes(h, k);
        std::vector<int> hits;
        for (int nb : g.neighbors(u)) {
            const int h_id = nb < u ? nb : nb - 1;
            if (part_h.class_of(h_id) == 1)
                hits.push_back(nb);
        }
        if (static_cast<int>(hits.size()) >= k - 1) {
            chosen = u;
            v1_neighbors = std::move(hits);
        }
    }
    if (chosen == -1)
        return detail::engine_fail(std::move(result), "precondition_u",
                                   "no vertex with >= k-1 neighbors in V_1(G-u)");
    result.trace.removed_vertex = chosen;
    detail::engine_log(result, "precondition_u",
                       "u = " + std::to_string(chosen) + " with " +
                           std::to_string(v1_neighbors.size()) +
                           " neighbors in V_1(G-u)");

    const Graph h = remove_vertex(g, chosen);
    ColoringResult inner = detail::mod_k_body(h, k, derive_seed(seed, "inner"),
                                              EngineCase::even_even);
    result.trace.splits = inner.trace.splits;
    result.trace.factors = inner.trace.factors;
    result.trace.forest = inner.trace.forest;
    for (const auto& entry : inner.trace.stage_log)
        result.trace.stage_log.push_back(entry);
    if (!inner.success) {
        result.failure = inner.failure;
        result.success = false;
        return result;
    }

    EdgeColoring col;
    col.k = k;
    col.color_count = k + 1;
    auto unshift = [chosen](int x) { return x < chosen ? x : x + 1; };
    for (const auto& [e, c] : inner.coloring.assignment)
        col.assignment[make_edge(unshift(e.u), unshift(e.v))] = c;

    const int d = residue_class(g.degree(chosen), k);
    std::vector<char> absorbed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int j = 0; j < d - 1; ++j) {
        const int nb = v1_neighbors[static_cast<std::size_t>(j)];
        col.assignment[make_edge(chosen, nb)] = 2 + j;
        absorbed[static_cast<std::size_t>(nb)] = 1;
    }
    int fresh = 0;
    for (int nb : g.neighbors(chosen))
        if (!absorbed[static_cast<std::size_t>(nb)]) {
            col.assignment[make_edge(chosen, nb)] = k + 1;
            ++fresh;
        }
    detail::engine_log(result, "verify",
                       "deg(u) = " + std::to_string(g.degree(chosen)) + ", d = " +
                           std::to_string(d) + ", " + std::to_string(fresh) +
                           " edges on the fresh color");

    const ValidityReport report = verify_coloring(g, col);
    if (!report.valid)
        return detail::engine_fail(std::move(result), "verify",
                                   std::to_string(report.violations.size()) +
                                       " residue violations");
    result.success = true;
    result.coloring = std::move(col);
    result.colors_used = result.coloring.colors_used();
    return detail::finalize(std::move(result));
}

// Dispatch by the parity of k and n.
inline ColoringResult construct_coloring(const Graph& g, int k, std::uint64_t seed = 0) {
    if (k < 2)
        throw input_error("construct_coloring: k must be at least 2");
    if (k % 2 == 1)
        return case_odd(g, k, seed);
    if (g.vertex_count() % 2 == 0)
        return case_even_even(g, k, seed);
    return case_even_odd(g, k, seed);
}

// Forests: chi'_k equals the largest r in 1..k that matches d(v) (mod k) for
// some non-isolated vertex v. Edgeless forests need no colors at all; by
// convention the value reported is 1.
inline int forest_chi_value(const Graph& g, int k) {
    if (k < 2)
        throw input_error("forest_chi_value: k must be at least 2");
    // acyclicity via union-find
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        parent[static_cast<std::size_t>(v)] = v;
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        const int a = find(e.u), b = find(e.v);
        if (a == b)
            throw input_error("forest_chi_value: graph contains a cycle");
        parent[static_cast<std::size_t>(a)] = b;
    }
    if (g.edge_count() == 0)
        return 1;
    int best = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            best = std::max(best, residue_class(g.degree(v), k));
    return best;
}

} // namespace modk
