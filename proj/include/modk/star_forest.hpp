#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "modk/edge_coloring.hpp"
#include "modk/graph.hpp"

namespace modk {

// Parity-repair stars: S_i is centered in V_i with rays into V_2. The plain
// variant has i-1 rays, the extended variant k+i-1; the two ray counts have
// opposite parities (k odd), which is what the n_2 fix exploits.
enum class StarVariant { plain, extended };

struct Star {
    int center = -1;
    std::vector<int> leaves;
    int class_index = 0;
    StarVariant variant = StarVariant::plain;

    int ray_count() const { return static_cast<int>(leaves.size()); }

    int expected_rays(int k) const {
        return variant == StarVariant::plain ? class_index - 1
                                             : k + class_index - 1;
    }
};

struct StarForest {
    std::vector<Star> stars;

    bool empty() const { return stars.empty(); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (const Star& s : stars)
            for (int leaf : s.leaves)
                out.push_back(make_edge(s.center, leaf));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (const Star& s : stars) {
            out.push_back(s.center);
            out.insert(out.end(), s.leaves.begin(), s.leaves.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// How the n_2 parity of G - E(F) is to be repaired, on top of the classes in
// I = repair_classes (subset of 3..k) whose sizes are odd.
enum class ParityFix {
    none,
    extend_one, // replace one S_i (smallest i in I) by the extended S_i'
    twin_stars  // I empty: two stars in V_3 with 2 and k+2 rays
};

struct ParityPlan {
    std::vector<int> repair_classes;
    ParityFix fix = ParityFix::none;
};

struct StarForestResult {
    bool success = false;
    StarForest forest;
    std::string reason; // set on failure
};

// Greedy star selection. Requirements are processed in descending class
// order (within a class, larger star first); for each requirement every
// unused center of the class is tried, preferring centers with more unused
// V_2 neighbors, before declaring failure. Leaves are the first free V_2
// neighbors in id order.
inline StarForestResult select_star_forest(const Graph& g, int k,
                                           const ParityPlan& plan) {
    if (k < 2)
        throw input_error("select_star_forest: k must be at least 2");
    std::vector<int> repair(plan.repair_classes);
    std::sort(repair.begin(), repair.end());
    if (std::adjacent_find(repair.begin(), repair.end()) != repair.end())
        throw input_error("select_star_forest: duplicate repair class");
    for (int i : repair)
        if (i < 3 || i > k)
            throw input_error("select_star_forest: repair class " +
                              std::to_string(i) + " outside 3..k");
    if (plan.fix == ParityFix::extend_one && repair.empty())
        throw input_error("select_star_forest: extend_one requires a repair class");
    if (plan.fix == ParityFix::twin_stars && !repair.empty())
        throw input_error("select_star_forest: twin_stars applies only when no "
                          "class needs repair");

    struct Requirement {
        int class_index;
        int rays;
        StarVariant variant;
    };
    std::vector<Requirement> requirements;
    const int extended_class =
        plan.fix == ParityFix::extend_one ? repair.front() : 0;
    for (auto it = repair.rbegin(); it != repair.rend(); ++it) {
        const int i = *it;
        if (i == extended_class)
            requirements.push_back({i, k + i - 1, StarVariant::extended});
        else
            requirements.push_back({i, i - 1, StarVariant::plain});
    }
    if (plan.fix == ParityFix::twin_stars) {
        if (k < 3)
            throw input_error("select_star_forest: twin_stars requires k >= 3");
        requirements.push_back({3, k + 2, StarVariant::extended});
        requirements.push_back({3, 2, StarVariant::plain});
    }

    const auto part = degree_classes(g, k);
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);

    StarForestResult result;
    for (const Requirement& req : requirements) {
        auto free_v2_neighbors = [&](int center) {
            std::vector<int> out;
            for (int nb : g.neighbors(center))
                if (!used[static_cast<std::size_t>(nb)] && part.class_of(nb) == 2)
                    out.push_back(nb);
            return out; // sorted: neighbor lists are sorted
        };
        std::vector<int> candidates;
        for (int c : part.cls(req.class_index))
            if (!used[static_cast<std::size_t>(c)])
                candidates.push_back(c);
        std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return free_v2_neighbors(a).size() > free_v2_neighbors(b).size();
        });
        bool placed = false;
        for (int center : candidates) {
            const auto avail = free_v2_neighbors(center);
            if (static_cast<int>(avail.size()) < req.rays)
                continue;
            Star star;
            star.center = center;
            star.class_index = req.class_index;
            star.variant = req.variant;
            star.leaves.assign(avail.begin(), avail.begin() + req.rays);
            used[static_cast<std::size_t>(center)] = 1;
            for (int leaf : star.leaves)
                used[static_cast<std::size_t>(leaf)] = 1;
            result.forest.stars.push_back(std::move(star));
            placed = true;
            break;
        }
        if (!placed) {
            result.reason = "no center in V_" + std::to_string(req.class_index) +
                            " with " + std::to_string(req.rays) +
                            " free V_2 neighbors";
            return result;
        }
    }
    result.success = true;
    return result;
}

// Colors the forest with colors 2..k: a plain S_i gets distinct colors 2..i
// on its rays; an extended S_i' gets distinct colors 2..i-1 on i-2 rays and
// color i on the remaining k+1, so its center has color-i degree k+1 = 1
// (mod k). Returns a partial coloring on E(F).
inline EdgeColoring color_star_forest(const StarForest& forest, int k) {
    if (k < 2)
        throw input_error("color_star_forest: k must be at least 2");
    EdgeColoring col;
    col.k = k;
    col.partial = true;
    std::set<int> seen;
    for (const Star& s : forest.stars) {
        if (s.class_index < 3 || s.class_index > k)
            throw input_error("color_star_forest: star class outside 3..k");
        if (s.ray_count() != s.expected_rays(k))
            throw input_error("color_star_forest: star has " +
                              std::to_string(s.ray_count()) + " rays, expected " +
                              std::to_string(s.expected_rays(k)));
        if (!seen.insert(s.center).second)
            throw input_error("color_star_forest: stars are not vertex-disjoint");
        for (int leaf : s.leaves)
            if (!seen.insert(leaf).second)
                throw input_error("color_star_forest: stars are not vertex-disjoint");

        std::vector<int> leaves(s.leaves);
        std::sort(leaves.begin(), leaves.end());
        const int i = s.class_index;
        if (s.variant == StarVariant::plain) {
            for (int j = 0; j < static_cast<int>(leaves.size()); ++j)
                col.assignment[make_edge(s.center, leaves[static_cast<std::size_t>(j)])] =
                    2 + j;
        } else {
            for (int j = 0; j < i - 2; ++j)
                col.assignment[make_edge(s.center, leaves[static_cast<std::size_t>(j)])] =
                    2 + j;
            for (std::size_t j = static_cast<std::size_t>(i - 2); j < leaves.size(); ++j)
                col.assignment[make_edge(s.center, leaves[j])] = i;
        }
        col.color_count = std::max(col.color_count, i);
    }
    return col;
}

} // namespace modk
