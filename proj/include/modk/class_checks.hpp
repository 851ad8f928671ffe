#pragma once

#include <vector>

#include "modk/graph.hpp"

namespace modk {

// Per-class balance check: n/2k <= n_i <= 3n/2k, compared in exact integer
// arithmetic (2k*n_i against n and 3n).
struct ClassBalanceReport {
    int k = 2;
    std::vector<int> sizes;
    std::vector<bool> ok;
    bool all_ok = false;
};

inline ClassBalanceReport check_degree_class_balance(const Graph& g, int k) {
    const auto part = degree_classes(g, k);
    ClassBalanceReport report;
    report.k = k;
    report.sizes = part.sizes();
    report.ok.reserve(static_cast<std::size_t>(k));
    report.all_ok = true;
    const long long n = g.vertex_count();
    for (int i = 1; i <= k; ++i) {
        const long long ni = part.size(i);
        const bool good = 2LL * k * ni >= n && 2LL * k * ni <= 3LL * n;
        report.ok.push_back(good);
        report.all_ok = report.all_ok && good;
    }
    return report;
}

// Every vertex needs at least p*n/3k neighbors in every degree class.
struct ClassMinDegreeReport {
    bool ok = false;
    double threshold = 0.0;
    int worst_vertex = -1;
    int worst_class = -1;
    int worst_count = 0;
};

inline ClassMinDegreeReport check_class_min_degree(const Graph& g, int k, double p) {
    if (p <= 0.0 || p > 1.0)
        throw input_error("check_class_min_degree: p must lie in (0,1]");
    const auto part = degree_classes(g, k);
    ClassMinDegreeReport report;
    report.threshold = p * static_cast<double>(g.vertex_count()) /
                       (3.0 * static_cast<double>(k));
    std::vector<int> counts(static_cast<std::size_t>(k));
    bool have_worst = false;
    report.ok = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int nb : g.neighbors(v))
            ++counts[static_cast<std::size_t>(part.class_of(nb) - 1)];
        for (int i = 1; i <= k; ++i) {
            const int c = counts[static_cast<std::size_t>(i - 1)];
            if (static_cast<double>(c) < report.threshold)
                report.ok = false;
            if (!have_worst || c < report.worst_count) {
                report.worst_vertex = v;
                report.worst_class = i;
                report.worst_count = c;
                have_worst = true;
            }
        }
    }
    return report;
}

} // namespace modk
