#ifndef DTG_TYPEGRAPH_HPP
#define DTG_TYPEGRAPH_HPP

// The implicit graph G(beta, t). Vertices are n-subsets of {0, ..., beta-1};
// a and b are adjacent when they are disjoint and interleave as t or as its
// dual. Nothing here materializes an adjacency structure.

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dtg/error.hpp"
#include "dtg/typecore.hpp"
#include "dtg/vertex.hpp"
#include "dtg/vertexspace.hpp"

namespace dtg {

/// `up` neighbours b have tp(a, b) = t, `down` neighbours have tp(a, b) = dual(t).
enum class Direction { up, down, both };

inline const char* to_string(Direction d) noexcept {
    switch (d) {
        case Direction::up: return "up";
        case Direction::down: return "down";
        default: return "both";
    }
}

class GraphSpec {
public:
    GraphSpec(std::uint64_t beta, TypePattern t) : beta_(beta), t_(std::move(t)), dual_(t_.dual()) {
        if (beta_ < 1) throw ParameterError("GraphSpec: beta must be >= 1");
        if (beta_ > std::numeric_limits<Ordinal>::max()) throw ParameterError("GraphSpec: beta too large");
    }

    std::uint64_t beta() const noexcept { return beta_; }
    std::size_t width() const noexcept { return t_.width(); }
    const TypePattern& type() const noexcept { return t_; }
    const TypePattern& dual_type() const noexcept { return dual_; }

    /// Same type, different beta.
    GraphSpec with_beta(std::uint64_t beta) const { return GraphSpec(beta, t_); }

    void check_vertex(const Vertex& v) const {
        if (v.width() != width()) {
            throw ParameterError("vertex " + to_string(v) + " has width " + std::to_string(v.width()) +
                                 ", graph width is " + std::to_string(width()));
        }
        if (v.max() >= beta_) {
            throw ParameterError("vertex " + to_string(v) + " has an element >= beta = " +
                                 std::to_string(beta_));
        }
    }

private:
    std::uint64_t beta_;
    TypePattern t_;
    TypePattern dual_;
};

namespace detail {

inline bool adjacent_unchecked(const GraphSpec& g, std::span<const Ordinal> a,
                               std::span<const Ordinal> b) noexcept {
    return interleaves_as(a, b, g.type().bits()) || interleaves_as(a, b, g.dual_type().bits());
}

// Per-b-element bounds induced by a and an interleaving pattern in which
// a occupies the zeros. b(j) must lie in [lo[j], hi[j]] and b is increasing;
// elements sharing a gap are packed, so hi[j] already reserves room for the
// later elements of the same gap.
struct GapPlan {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;
    std::vector<std::uint32_t> gap;
    bool feasible = true;

    GapPlan(std::span<const Ordinal> a, const std::vector<std::uint8_t>& pattern, std::uint64_t beta) {
        const std::size_t n = a.size();
        lo.reserve(n);
        hi.reserve(n);
        gap.reserve(n);
        std::uint32_t zeros = 0;
        for (auto bit : pattern) {
            if (bit == 0) {
                ++zeros;
                continue;
            }
            gap.push_back(zeros);
            lo.push_back(zeros == 0 ? 0 : std::int64_t{a[zeros - 1]} + 1);
            hi.push_back(zeros == n ? static_cast<std::int64_t>(beta) - 1 : std::int64_t{a[zeros]} - 1);
        }
        for (std::size_t j = n; j-- > 0;) {
            if (j + 1 < n && gap[j + 1] == gap[j]) hi[j] = std::min(hi[j], hi[j + 1] - 1);
            if (lo[j] > hi[j]) feasible = false;
        }
        // Packing from the left can also overrun when a gap is too narrow.
        std::int64_t prev = -1;
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t start = (j > 0 && gap[j - 1] == gap[j]) ? prev + 1 : lo[j];
            if (start > hi[j]) feasible = false;
            prev = start;
        }
    }

    // (gap size, count) pairs in order.
    std::vector<std::pair<std::int64_t, std::size_t>> gap_demands() const {
        std::vector<std::pair<std::int64_t, std::size_t>> out;
        for (std::size_t j = 0; j < gap.size(); ++j) {
            if (j == 0 || gap[j] != gap[j - 1]) {
                std::size_t c = 0;
                while (j + c < gap.size() && gap[j + c] == gap[j]) ++c;
                std::int64_t top = hi[j + c - 1];  // hi of the last element is the raw gap end
                out.emplace_back(top - lo[j] + 1, c);
            }
        }
        return out;
    }
};

// Enumerates increasing sequences respecting a GapPlan, lexicographically.
class GapOdometer {
public:
    explicit GapOdometer(const GapPlan& plan) : plan_(plan), cur_(plan.lo.size()) {
        done_ = !plan.feasible;
        if (done_) return;
        for (std::size_t j = 0; j < cur_.size(); ++j) reset(j);
    }

    bool done() const noexcept { return done_; }
    std::span<const Ordinal> value() const noexcept { return cur_; }

    void advance() noexcept {
        for (std::size_t j = cur_.size(); j-- > 0;) {
            if (std::int64_t{cur_[j]} < plan_.hi[j]) {
                ++cur_[j];
                for (std::size_t k = j + 1; k < cur_.size(); ++k) reset(k);
                return;
            }
        }
        done_ = true;
    }

private:
    void reset(std::size_t j) noexcept {
        cur_[j] = (j > 0 && plan_.gap[j - 1] == plan_.gap[j]) ? cur_[j - 1] + 1
                                                               : static_cast<Ordinal>(plan_.lo[j]);
    }

    const GapPlan& plan_;
    std::vector<Ordinal> cur_;
    bool done_ = false;
};

template <class Visitor>
bool visit_pattern(const GraphSpec& g, std::span<const Ordinal> a, const std::vector<std::uint8_t>& pattern,
                   Visitor& visit) {
    GapPlan plan(a, pattern, g.beta());
    for (GapOdometer odo(plan); !odo.done(); odo.advance()) {
        if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, std::span<const Ordinal>>, bool>) {
            if (!visit(odo.value())) return false;
        } else {
            visit(odo.value());
        }
    }
    return true;
}

}  // namespace detail

/// Calls visit(span<const Ordinal>) for every neighbour of a in the given
/// direction: up neighbours first, each in lexicographic order. A visitor
/// returning bool stops the walk on false. Returns false if stopped early.
template <class Visitor>
bool for_each_neighbor(const GraphSpec& g, std::span<const Ordinal> a, Direction dir, Visitor&& visit) {
    if (dir != Direction::down && !detail::visit_pattern(g, a, g.type().bits(), visit)) return false;
    if (dir != Direction::up && !detail::visit_pattern(g, a, g.dual_type().bits(), visit)) return false;
    return true;
}

inline bool adjacent(const GraphSpec& g, const Vertex& a, const Vertex& b) {
    g.check_vertex(a);
    g.check_vertex(b);
    return detail::adjacent_unchecked(g, a.elems(), b.elems());
}

inline std::vector<Vertex> neighbors(const GraphSpec& g, const Vertex& a, Direction dir = Direction::both) {
    g.check_vertex(a);
    std::vector<Vertex> out;
    for_each_neighbor(g, a.elems(), dir, [&](std::span<const Ordinal> b) { out.push_back(Vertex::from_sorted(b)); });
    return out;
}

/// Number of neighbours, as a floating count (exact while below 2^64).
inline long double neighbor_count(const GraphSpec& g, const Vertex& a, Direction dir = Direction::both) {
    g.check_vertex(a);
    auto count = [&](const std::vector<std::uint8_t>& pattern) {
        detail::GapPlan plan(a.elems(), pattern, g.beta());
        if (!plan.feasible) return 0.0L;
        long double total = 1.0L;
        for (auto [size, c] : plan.gap_demands()) {
            for (std::size_t i = 1; i <= c; ++i) total = total * static_cast<long double>(size - static_cast<std::int64_t>(c) + static_cast<std::int64_t>(i)) / static_cast<long double>(i);
        }
        return total;
    };
    long double total = 0.0L;
    if (dir != Direction::down) total += count(g.type().bits());
    if (dir != Direction::up) total += count(g.dual_type().bits());
    return total;
}

/// Unbiased integer in [0, bound) from a 64-bit engine, independent of the
/// standard library's distribution implementation.
template <class Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform random neighbour of a in the given direction, or nullopt when a
/// has none within beta. Draws per gap independently, which is uniform over
/// the product of gap choices.
template <class Engine>
std::optional<Vertex> sample_neighbor(const GraphSpec& g, const Vertex& a, Engine& rng,
                                      Direction dir = Direction::both) {
    const long double up = dir == Direction::down ? 0.0L : neighbor_count(g, a, Direction::up);
    const long double down = dir == Direction::up ? 0.0L : neighbor_count(g, a, Direction::down);
    if (up + down == 0.0L) return std::nullopt;
    // 53-bit uniform in [0, 1).
    const long double coin = static_cast<long double>(rng() >> 11) * 0x1.0p-53L;
    const auto& pattern = coin * (up + down) < up ? g.type().bits() : g.dual_type().bits();

    detail::GapPlan plan(a.elems(), pattern, g.beta());
    std::vector<Ordinal> b;
    b.reserve(a.width());
    std::size_t j = 0;
    for (auto [size, c] : plan.gap_demands()) {
        const std::int64_t base = plan.lo[j];
        // Floyd's sampling of c distinct offsets from [0, size).
        std::vector<std::int64_t> pick;
        for (std::int64_t r = size - static_cast<std::int64_t>(c); r < size; ++r) {
            auto x = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(r) + 1));
            if (std::find(pick.begin(), pick.end(), x) != pick.end()) x = r;
            pick.push_back(x);
        }
        std::sort(pick.begin(), pick.end());
        for (auto x : pick) b.push_back(static_cast<Ordinal>(base + x));
        j += c;
    }
    return Vertex::from_sorted(b);
}

/// Visits every edge once as (a, b) with rank(a) < rank(b), grouped by a in
/// increasing rank.
template <class Visitor>
void for_each_edge(const GraphSpec& g, Visitor&& visit) {
    const std::size_t n = g.width();
    if (n > g.beta()) return;
    ColexIndex index(g.beta(), n);
    std::vector<Ordinal> a(n);
    for (Rank r = 0; r < index.size(); ++r) {
        index.unrank(r, a);
        for_each_neighbor(g, a, Direction::both, [&](std::span<const Ordinal> b) {
            if (index.rank(b) > r) visit(std::span<const Ordinal>(a), b);
        });
    }
}

inline std::vector<std::pair<Vertex, Vertex>> edges(const GraphSpec& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for_each_edge(g, [&](std::span<const Ordinal> a, std::span<const Ordinal> b) {
        out.emplace_back(Vertex::from_sorted(a), Vertex::from_sorted(b));
    });
    return out;
}

inline std::uint64_t edge_count(const GraphSpec& g) {
    std::uint64_t count = 0;
    for_each_edge(g, [&](auto, auto) { ++count; });
    return count;
}

enum class ExportFormat { dimacs, jsonl };

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Throws BudgetError unless C(beta, n) <= budget.
inline std::uint64_t require_budget(const GraphSpec& g, std::uint64_t budget, const std::string& what) {
    std::uint64_t count = 0;
    if (!detail::try_binomial(g.beta(), g.width(), count)) {
        throw BudgetError(what + ": C(" + std::to_string(g.beta()) + ", " + std::to_string(g.width()) +
                              ") vertices overflows 64 bits; budget is " + std::to_string(budget),
                          0, budget);
    }
    if (count > budget) {
        throw BudgetError(what + ": C(" + std::to_string(g.beta()) + ", " + std::to_string(g.width()) +
                              ") = " + std::to_string(count) + " vertices exceeds budget " +
                              std::to_string(budget),
                          count, budget);
    }
    return count;
}

/// DIMACS: "p edge V E" then "e u v" with 1-based colex ranks.
/// JSONL: one {"a":[...],"b":[...]} object per edge.
inline void export_graph(const GraphSpec& g, ExportFormat format, std::ostream& out,
                         std::uint64_t budget = kDefaultBudget) {
    const std::uint64_t nv = g.width() > g.beta() ? 0 : require_budget(g, budget, "export");
    auto write_array = [&](std::span<const Ordinal> v) {
        out << '[';
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << ']';
    };
    if (format == ExportFormat::dimacs) {
        out << "p edge " << nv << ' ' << edge_count(g) << '\n';
        ColexIndex index(g.beta(), g.width());
        for_each_edge(g, [&](std::span<const Ordinal> a, std::span<const Ordinal> b) {
            out << "e " << index.rank(a) + 1 << ' ' << index.rank(b) + 1 << '\n';
        });
    } else {
        for_each_edge(g, [&](std::span<const Ordinal> a, std::span<const Ordinal> b) {
            out << "{\"a\":";
            write_array(a);
            out << ",\"b\":";
            write_array(b);
            out << "}\n";
        });
    }
}

}  // namespace dtg

#endif  // DTG_TYPEGRAPH_HPP
