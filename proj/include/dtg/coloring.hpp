#ifndef DTG_COLORING_HPP
#define DTG_COLORING_HPP

// Finite proxies for the chromatic behaviour of G(beta, t).
//
// For every infinite cardinal kappa, G(kappa, t) has chromatic number kappa.
// No finite computation can confirm that; what this module offers instead is
// finite evidence: first-fit upper bounds, exact chromatic numbers of tiny
// instances, and the monotonicity of chi(G(beta, t)) in beta.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtg/error.hpp"
#include "dtg/typegraph.hpp"
#include "dtg/vertexspace.hpp"

namespace dtg {

enum class ColoringMethod { greedy, exact };

inline const char* to_string(ColoringMethod m) noexcept { return m == ColoringMethod::greedy ? "greedy" : "exact"; }

struct ColoringResult {
    std::uint32_t num_colors = 0;
    std::vector<std::uint32_t> assignment;  // indexed by colex rank (or by position for induced subgraphs)
    ColoringMethod method = ColoringMethod::greedy;
};

inline constexpr std::uint64_t kExactVertexCap = 64;

/// First-fit colouring in colex order.
inline ColoringResult greedy_color(const GraphSpec& g, std::uint64_t budget = kDefaultBudget) {
    ColoringResult res;
    res.method = ColoringMethod::greedy;
    if (g.width() > g.beta()) return res;
    require_budget(g, budget, "greedy_color");
    const ColexIndex index(g.beta(), g.width());
    res.assignment.assign(index.size(), 0);
    std::vector<Ordinal> a(g.width());
    std::vector<char> used;
    for (Rank r = 0; r < index.size(); ++r) {
        index.unrank(r, a);
        used.assign(res.num_colors + 1, 0);
        for_each_neighbor(g, a, Direction::both, [&](std::span<const Ordinal> b) {
            const Rank rb = index.rank(b);
            if (rb < r) used[res.assignment[rb]] = 1;
        });
        std::uint32_t c = 0;
        while (used[c]) ++c;
        res.assignment[r] = c;
        res.num_colors = std::max(res.num_colors, c + 1);
    }
    return res;
}

/// Adjacency of a graph with at most 64 vertices as bitmasks.
class SmallGraph {
public:
    explicit SmallGraph(std::size_t order) : adj_(order, 0) {
        if (order > 64) throw ParameterError("SmallGraph: more than 64 vertices");
    }

    std::size_t order() const noexcept { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v) {
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    bool has_edge(std::size_t u, std::size_t v) const noexcept { return (adj_[u] >> v) & 1U; }
    std::uint64_t row(std::size_t v) const noexcept { return adj_[v]; }
    int degree(std::size_t v) const noexcept { return std::popcount(adj_[v]); }

private:
    std::vector<std::uint64_t> adj_;
};

inline SmallGraph induced_subgraph(const GraphSpec& g, std::span<const Vertex> vs) {
    SmallGraph h(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(g, vs[i], vs[j])) h.add_edge(i, j);
    return h;
}

namespace detail {

// Backtracking k-colouring over vertices sorted by descending degree. A
// vertex may open at most one new colour, which removes colour permutations.
class ExactColorer {
public:
    explicit ExactColorer(const SmallGraph& h) : h_(h), order_(h.order()), color_(h.order(), kUncolored) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return h_.degree(a) > h_.degree(b); });
    }

    bool try_colors(std::uint32_t k) {
        std::fill(color_.begin(), color_.end(), kUncolored);
        return assign(0, 0, k);
    }

    const std::vector<std::uint32_t>& colors() const noexcept { return color_; }

private:
    static constexpr std::uint32_t kUncolored = ~std::uint32_t{0};

    bool assign(std::size_t pos, std::uint32_t used, std::uint32_t k) {
        if (pos == order_.size()) return true;
        const std::size_t v = order_[pos];
        const std::uint32_t limit = std::min(k, used + 1);
        for (std::uint32_t c = 0; c < limit; ++c) {
            bool clash = false;
            for (std::uint64_t nb = h_.row(v); nb && !clash; nb &= nb - 1) {
                clash = color_[static_cast<std::size_t>(std::countr_zero(nb))] == c;
            }
            if (clash) continue;
            color_[v] = c;
            if (assign(pos + 1, std::max(used, c + 1), k)) return true;
        }
        color_[v] = kUncolored;
        return false;
    }

    const SmallGraph& h_;
    std::vector<std::size_t> order_;
    std::vector<std::uint32_t> color_;
};

}  // namespace detail

/// Minimum proper colouring of a small graph, or nullopt when more than
/// max_colors colours are needed. Optimality: every k below the answer was
/// refuted by exhaustive search.
inline std::optional<ColoringResult> exact_chromatic(const SmallGraph& h, std::uint32_t max_colors) {
    ColoringResult res;
    res.method = ColoringMethod::exact;
    if (h.order() == 0) return res;
    detail::ExactColorer solver(h);
    for (std::uint32_t k = 1; k <= max_colors; ++k) {
        if (solver.try_colors(k)) {
            res.num_colors = k;
            res.assignment = solver.colors();
            return res;
        }
    }
    return std::nullopt;
}

inline std::optional<ColoringResult> exact_chromatic(const GraphSpec& g, std::uint32_t max_colors,
                                                     std::uint64_t cap = kExactVertexCap) {
    if (cap > 64) throw ParameterError("exact_chromatic: cap cannot exceed 64 vertices");
    if (g.width() > g.beta()) return ColoringResult{0, {}, ColoringMethod::exact};
    const std::uint64_t count = require_budget(g, cap, "exact_chromatic");
    SmallGraph h(count);
    for_each_edge(g, [&, index = ColexIndex(g.beta(), g.width())](std::span<const Ordinal> a,
                                                                   std::span<const Ordinal> b) {
        h.add_edge(index.rank(a), index.rank(b));
    });
    return exact_chromatic(h, max_colors);
}

/// True when no edge of g is monochromatic and colours are exactly 0..k-1.
/// Checked against adjacent() independently of how the colouring was found.
inline bool is_proper(const GraphSpec& g, const ColoringResult& c) {
    if (g.width() > g.beta()) return c.num_colors == 0;
    const ColexIndex index(g.beta(), g.width());
    if (c.assignment.size() != index.size()) return false;
    std::vector<char> seen(c.num_colors, 0);
    for (auto col : c.assignment) {
        if (col >= c.num_colors) return false;
        seen[col] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    for (Rank r = 0; r < index.size(); ++r) {
        const Vertex a = unrank(r, g.width(), g.beta());
        for (Rank q = r + 1; q < index.size(); ++q) {
            const Vertex b = unrank(q, g.width(), g.beta());
            if (c.assignment[r] == c.assignment[q] && adjacent(g, a, b)) return false;
        }
    }
    return true;
}

inline bool is_proper(const SmallGraph& h, const ColoringResult& c) {
    if (c.assignment.size() != h.order()) return false;
    for (std::size_t u = 0; u < h.order(); ++u) {
        if (c.assignment[u] >= c.num_colors) return false;
        for (std::size_t v = u + 1; v < h.order(); ++v)
            if (h.has_edge(u, v) && c.assignment[u] == c.assignment[v]) return false;
    }
    return true;
}

}  // namespace dtg

#endif  // DTG_COLORING_HPP
