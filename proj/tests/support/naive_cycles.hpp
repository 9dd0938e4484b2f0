#ifndef DTG_TESTS_NAIVE_CYCLES_HPP
#define DTG_TESTS_NAIVE_CYCLES_HPP

// Test-only oracle: materialize G(beta, t) by testing every pair with
// adjacent(), then look for simple cycles by depth-first enumeration.
// Shares nothing with the BFS search besides adjacent() itself.

#include <cstdint>
#include <optional>
#include <vector>

#include "dtg/typegraph.hpp"

namespace dtg::oracle {

struct DenseGraph {
    std::vector<Vertex> vertices;
    std::vector<std::vector<char>> adj;
};

inline DenseGraph materialize(const GraphSpec& g) {
    DenseGraph d;
    d.vertices = iterate_vertices(g.width(), g.beta()).collect();
    const std::size_t nv = d.vertices.size();
    d.adj.assign(nv, std::vector<char>(nv, 0));
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) d.adj[i][j] = adjacent(g, d.vertices[i], d.vertices[j]);
    return d;
}

namespace detail {

// Simple path from root through vertices > root; true if it closes into a
// cycle of exactly `length` edges.
inline bool extend(const DenseGraph& d, std::size_t root, std::size_t cur, std::size_t depth, std::size_t length,
                   std::vector<char>& on_path) {
    if (depth == length - 1) return d.adj[cur][root] != 0;
    for (std::size_t nxt = root + 1; nxt < d.vertices.size(); ++nxt) {
        if (!d.adj[cur][nxt] || on_path[nxt]) continue;
        on_path[nxt] = 1;
        const bool ok = extend(d, root, nxt, depth + 1, length, on_path);
        on_path[nxt] = 0;
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

inline bool has_simple_cycle(const DenseGraph& d, std::size_t length) {
    std::vector<char> on_path(d.vertices.size(), 0);
    for (std::size_t root = 0; root < d.vertices.size(); ++root) {
        on_path[root] = 1;
        const bool ok = detail::extend(d, root, root, 0, length, on_path);
        on_path[root] = 0;
        if (ok) return true;
    }
    return false;
}

/// Shortest odd simple-cycle length <= max_length, or nullopt.
inline std::optional<std::size_t> naive_odd_girth(const GraphSpec& g, std::size_t max_length) {
    const DenseGraph d = materialize(g);
    for (std::size_t len = 3; len <= max_length; len += 2)
        if (has_simple_cycle(d, len)) return len;
    return std::nullopt;
}

}  // namespace dtg::oracle

#endif  // DTG_TESTS_NAIVE_CYCLES_HPP
