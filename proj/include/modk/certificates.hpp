#pragma once

#include <set>
#include <string>
#include <vector>

#include "modk/graph.hpp"

namespace modk {

// Polynomial-time-verifiable lower bounds on chi'_k:
//
//  (a) zero_residue_vertex: a vertex of nonzero degree = 0 (mod k) forces at
//      least k colors (its color degrees are all = 1 (mod k) and fewer than
//      k of them cannot sum to 0 (mod k)).
//  (b) parity_odd_n: k even, n odd, V_1 nonempty, G[V_1] connected and V_1
//      dominating force k+1 colors: with k colors the V_1 edges would form a
//      spanning mod-k subgraph with all degrees odd on an odd vertex count.
//  (c) bad_cycle: a cycle of length l >= 3 with l-1 vertices of degree
//      exactly k+1 and one vertex of degree at most k forces k+1 colors.
//
// Kinds (a) and (b) are found exhaustively by deterministic scans. Kind (c)
// is searched over short cycles only (bounded enumeration, default length 8);
// absence of a bad_cycle certificate is not evidence of absence.

enum class CertificateKind { zero_residue_vertex, parity_odd_n, bad_cycle };

inline const char* to_string(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::zero_residue_vertex: return "zero_residue_vertex";
    case CertificateKind::parity_odd_n: return "parity_odd_n";
    case CertificateKind::bad_cycle: return "bad_cycle";
    }
    return "?";
}

struct LowerBoundCertificate {
    CertificateKind kind = CertificateKind::zero_residue_vertex;
    int bound = 0;
    int witness_vertex = -1;   // kind (a)
    bool g1_connected = false; // kind (b)
    bool v1_dominating = false;
    std::vector<int> cycle; // kind (c), in cycle order starting at the low vertex
};

namespace detail {

inline void bad_cycle_dfs(const Graph& g, int k, int start, int max_len,
                          std::vector<int>& path, std::vector<char>& on_path,
                          std::set<std::vector<int>>& seen,
                          std::vector<LowerBoundCertificate>& out) {
    const int cur = path.back();
    for (int nb : g.neighbors(cur)) {
        if (nb == start && path.size() >= 3) {
            std::vector<int> canon(path);
            std::sort(canon.begin(), canon.end());
            if (seen.insert(canon).second) {
                LowerBoundCertificate cert;
                cert.kind = CertificateKind::bad_cycle;
                cert.bound = k + 1;
                cert.cycle = path;
                out.push_back(std::move(cert));
            }
        }
        if (on_path[static_cast<std::size_t>(nb)] || g.degree(nb) != k + 1)
            continue;
        if (static_cast<int>(path.size()) >= max_len)
            continue;
        path.push_back(nb);
        on_path[static_cast<std::size_t>(nb)] = 1;
        bad_cycle_dfs(g, k, start, max_len, path, on_path, seen, out);
        on_path[static_cast<std::size_t>(nb)] = 0;
        path.pop_back();
    }
}

} // namespace detail

inline std::vector<LowerBoundCertificate> find_certificates(const Graph& g, int k,
                                                            int max_cycle_len = 8) {
    if (k < 2)
        throw input_error("find_certificates: k must be at least 2");
    std::vector<LowerBoundCertificate> certs;

    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0 && g.degree(v) % k == 0) {
            LowerBoundCertificate cert;
            cert.kind = CertificateKind::zero_residue_vertex;
            cert.bound = k;
            cert.witness_vertex = v;
            certs.push_back(std::move(cert));
        }

    if (k % 2 == 0 && g.vertex_count() % 2 == 1) {
        const auto part = degree_classes(g, k);
        const auto& v1 = part.cls(1);
        if (!v1.empty() && is_connected(g, v1) && is_dominating(g, v1)) {
            LowerBoundCertificate cert;
            cert.kind = CertificateKind::parity_odd_n;
            cert.bound = k + 1;
            cert.g1_connected = true;
            cert.v1_dominating = true;
            certs.push_back(std::move(cert));
        }
    }

    std::set<std::vector<int>> seen;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (g.degree(s) < 2 || g.degree(s) > k)
            continue;
        std::vector<int> path{s};
        std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
        on_path[static_cast<std::size_t>(s)] = 1;
        detail::bad_cycle_dfs(g, k, s, max_cycle_len, path, on_path, seen, certs);
    }
    return certs;
}

// Effective lower bound: 0 for edgeless graphs, else at least 1, improved by
// the best certificate.
inline int certificate_lower_bound(const Graph& g,
                                   const std::vector<LowerBoundCertificate>& certs) {
    if (g.edge_count() == 0)
        return 0;
    int lb = 1;
    for (const auto& cert : certs)
        lb = std::max(lb, cert.bound);
    return lb;
}

// Max bound; ties broken toward the earlier kind in the enum (so parity_odd_n
// beats bad_cycle at equal bound). Null when empty.
inline const LowerBoundCertificate*
best_certificate(const std::vector<LowerBoundCertificate>& certs) {
    const LowerBoundCertificate* best = nullptr;
    for (const auto& cert : certs)
        if (!best || cert.bound > best->bound ||
            (cert.bound == best->bound &&
             static_cast<int>(cert.kind) < static_cast<int>(best->kind)))
            best = &cert;
    return best;
}

} // namespace modk
