#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "modk/graph.hpp"

namespace modk {

// Edge-list text format, the interchange format of every CLI subcommand:
//
//   # optional comments, also allowed after values
//   n m
//   u v        (m lines, 0-based)
//
// Blank lines are skipped; '#' starts a comment anywhere on a line.
inline Graph read_edge_list(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
    }
    auto next_int = [&tokens, pos = std::size_t{0}](const char* what) mutable {
        if (pos >= tokens.size())
            throw io_error(std::string("edge list truncated: expected ") + what);
        try {
            std::size_t used = 0;
            const int value = std::stoi(tokens[pos], &used);
            if (used != tokens[pos].size())
                throw std::invalid_argument("");
            ++pos;
            return value;
        } catch (const std::exception&) {
            throw io_error("edge list: '" + tokens[pos] + "' is not an integer");
        }
    };
    const int n = next_int("vertex count");
    const int m = next_int("edge count");
    if (n < 0 || m < 0)
        throw io_error("edge list: negative counts");
    if (tokens.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw io_error("edge list: expected " + std::to_string(m) +
                       " edges, found " +
                       std::to_string((tokens.size() - 2) / 2) + " value pairs");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int u = next_int("edge endpoint");
        const int v = next_int("edge endpoint");
        pairs.emplace_back(u, v);
    }
    return Graph::from_pairs(n, pairs);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

inline void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    write_edge_list(g, out);
    if (!out)
        throw io_error("failed writing '" + path + "'");
}

} // namespace modk
