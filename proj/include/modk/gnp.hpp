#pragma once

#include <cstdint>
#include <vector>

#include "modk/graph.hpp"
#include "modk/rng.hpp"

namespace modk {

struct GnpParams {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// G(n,p): each of the C(n,2) vertex pairs is included independently with
// probability p, driven by one deterministic stream, pairs enumerated in
// lexicographic order. A pure function of (n, p, seed).
inline Graph sample_gnp(const GnpParams& params) {
    if (params.n < 0)
        throw input_error("sample_gnp: negative vertex count");
    if (params.p < 0.0 || params.p > 1.0)
        throw input_error("sample_gnp: p must lie in [0,1]");
    Rng rng(params.seed);
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (rng.bernoulli(params.p))
                edges.push_back(Edge{u, v});
    return Graph(params.n, std::move(edges));
}

inline Graph sample_gnp(int n, double p, std::uint64_t seed) {
    return sample_gnp(GnpParams{n, p, seed});
}

} // namespace modk
