#ifndef DTG_ODDCYCLE_HPP
#define DTG_ODDCYCLE_HPP

// Short odd cycles in G(beta, t^n_s).
//
//   * path profiles: up/down step bookkeeping along a path and the running
//     difference f(j) = u_j - d_j;
//   * executable forms of the discrepancy bound and the sandwich inequality
//     a_k(i - u(s+1) + ds) < a_0(i) < a_k(i - us + d(s+1)), i = max(f)(s+1);
//   * the explicit (2s+3)-cycle and an independent validator for it;
//   * an exhaustive shortest-odd-cycle search.
//
// Search method. For a start vertex v, BFS over the vertices of rank >= rank(v)
// to depth R. An edge joining two vertices on the same level d closes an odd
// walk of length 2d+1 through v (equivalently, v's copy of the other parity is
// reached in the bipartite double cover). A shortest odd cycle C is isometric,
// so BFS from the lowest-ranked vertex of C sees such an edge at level
// (|C|-1)/2; conversely a shortest odd closed walk is always a simple cycle.
// Lengths are tried in increasing order, so the first hit is a shortest odd
// cycle, and scanning starts in colex order makes the witness deterministic.
//
// Collapse. A cycle of length c uses at most c*n ordinals and types depend
// only on relative order, so G(beta, t) has one iff G(min(beta, c*n), t) does.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "dtg/error.hpp"
#include "dtg/typecore.hpp"
#include "dtg/typegraph.hpp"
#include "dtg/vertex.hpp"
#include "dtg/vertexspace.hpp"

namespace dtg {

enum class Step { up, down };

inline const char* to_string(Step s) noexcept { return s == Step::up ? "up" : "down"; }

/// A consecutive pair of a path is not an edge of the graph.
struct NonAdjacentError : ParameterError {
    std::size_t index;  // pair (index, index + 1)
    NonAdjacentError(std::size_t i, const std::string& msg) : ParameterError(msg), index(i) {}
};

struct PathProfile {
    std::vector<Step> steps;
    std::vector<std::int64_t> prefix_up;    // u_j, j = 0..k
    std::vector<std::int64_t> prefix_down;  // d_j
    std::vector<std::int64_t> f;            // u_j - d_j
    std::int64_t f_max = 0;
    std::int64_t f_min = 0;

    std::size_t length() const noexcept { return steps.size(); }
    std::int64_t ups() const noexcept { return prefix_up.back(); }
    std::int64_t downs() const noexcept { return prefix_down.back(); }
};

inline PathProfile profile_from_steps(std::span<const Step> steps) {
    PathProfile p;
    p.steps.assign(steps.begin(), steps.end());
    p.prefix_up.assign(1, 0);
    p.prefix_down.assign(1, 0);
    p.f.assign(1, 0);
    for (Step st : steps) {
        p.prefix_up.push_back(p.prefix_up.back() + (st == Step::up));
        p.prefix_down.push_back(p.prefix_down.back() + (st == Step::down));
        p.f.push_back(p.prefix_up.back() - p.prefix_down.back());
    }
    p.f_max = *std::max_element(p.f.begin(), p.f.end());
    p.f_min = *std::min_element(p.f.begin(), p.f.end());
    return p;
}

/// Labels each step of the path as up (type t) or down (dual type).
inline PathProfile path_profile(const GraphSpec& g, std::span<const Vertex> path) {
    if (path.empty()) throw ParameterError("path_profile: path has no vertices");
    for (const auto& v : path) g.check_vertex(v);
    std::vector<Step> steps;
    steps.reserve(path.size() - 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto a = path[i].elems();
        const auto b = path[i + 1].elems();
        if (detail::interleaves_as(a, b, g.type().bits())) {
            steps.push_back(Step::up);
        } else if (detail::interleaves_as(a, b, g.dual_type().bits())) {
            steps.push_back(Step::down);
        } else {
            throw NonAdjacentError(i, "path_profile: vertices " + std::to_string(i) + " and " +
                                          std::to_string(i + 1) + " (" + to_string(path[i]) + ", " +
                                          to_string(path[i + 1]) + ") are not adjacent");
        }
    }
    return profile_from_steps(steps);
}

struct DiscrepancyReport {
    bool holds = true;
    std::int64_t spread = 0;  // max(f) - min(f)
    std::int64_t bound = 0;   // |domain| - 1
};

/// max(f) - min(f) <= |f| - 1 for f(0) = 0 with unit steps. Throws
/// ParameterError naming the first index that breaks the hypotheses.
inline DiscrepancyReport check_discrepancy(std::span<const std::int64_t> f) {
    if (f.empty()) throw ParameterError("check_discrepancy: f is empty");
    if (f[0] != 0) throw ParameterError("check_discrepancy: f(0) = " + std::to_string(f[0]) + ", expected 0");
    for (std::size_t i = 1; i < f.size(); ++i) {
        const auto diff = f[i] - f[i - 1];
        if (diff != 1 && diff != -1) {
            throw ParameterError("check_discrepancy: |f(" + std::to_string(i) + ") - f(" + std::to_string(i - 1) +
                                 ")| != 1");
        }
    }
    DiscrepancyReport r;
    r.spread = *std::max_element(f.begin(), f.end()) - *std::min_element(f.begin(), f.end());
    r.bound = static_cast<std::int64_t>(f.size()) - 1;
    r.holds = r.spread <= r.bound;
    return r;
}

/// True when s/(s+1) < d/u < (s+1)/s, the only branch compatible with a
/// closed walk satisfying the sandwich inequality.
inline bool ratio_in_closing_band(std::int64_t ups, std::int64_t downs, std::int64_t s) noexcept {
    if (ups <= 0) return false;
    return s * ups < downs * (s + 1) && downs * s < ups * (s + 1);
}

inline bool in_theorem_range(std::uint64_t s, std::uint64_t n) noexcept { return n > 2 * s * s + 3 * s + 1; }

struct SandwichReport {
    std::int64_t s = 0, n = 0, k = 0;
    std::int64_t ups = 0, downs = 0, f_max = 0, f_min = 0;
    std::int64_t i = 0;            // M(s+1)
    std::int64_t lower_index = 0;  // i - u(s+1) + ds
    std::int64_t upper_index = 0;  // i - us + d(s+1)
    bool indices_valid = false;    // 0 <= lower < upper < n and i < n
    bool discrepancy_holds = false;
    std::int64_t lower_value = -1, middle_value = -1, upper_value = -1;
    bool passed = false;
    std::string failure;
    PathProfile profile;

    // i = M(s+1) does not always keep the induction's indices in range: after
    // a down step followed by an up step the lower index is -1. Choosing
    // i = max_j ((s+1) u_j - s d_j) keeps every step of the induction valid
    // whenever n > 2s^2+3s+1. Reported alongside, never substituted.
    std::int64_t corrected_i = 0;
    std::int64_t corrected_lower_index = 0;
    std::int64_t corrected_upper_index = 0;
    bool corrected_passed = false;
    // Smallest i < n for which the bounding inequality holds, if any.
    std::optional<std::int64_t> some_i;
};

namespace detail {

// Index bounds and the strict inequality for a given i.
inline bool sandwich_at(std::span<const Vertex> path, std::int64_t s, std::int64_t n, std::int64_t ups,
                        std::int64_t downs, std::int64_t i) {
    const std::int64_t lo = i - ups * (s + 1) + downs * s;
    const std::int64_t hi = i - ups * s + downs * (s + 1);
    if (i < 0 || i >= n || lo < 0 || lo >= hi || hi >= n) return false;
    const Vertex& last = path.back();
    const Vertex& first = path.front();
    return last[static_cast<std::size_t>(lo)] < first[static_cast<std::size_t>(i)] &&
           first[static_cast<std::size_t>(i)] < last[static_cast<std::size_t>(hi)];
}

}  // namespace detail

/// Evaluates the bounding inequality on a path of G(beta, t^n_s). Hypothesis
/// violations throw ParameterError; an inequality failure is returned with
/// passed = false.
inline SandwichReport check_sandwich(const GraphSpec& g, std::size_t s, std::span<const Vertex> path) {
    const std::size_t n = g.width();
    if (s < 1 || s >= n || g.type() != canonical_type(n, s)) {
        throw ParameterError("check_sandwich: graph type is not t^n_s for s = " + std::to_string(s));
    }
    if (!in_theorem_range(s, n)) {
        throw ParameterError("check_sandwich: n = " + std::to_string(n) + " must exceed 2s^2+3s+1 = " +
                             std::to_string(2 * s * s + 3 * s + 1));
    }
    if (path.size() < 2 || path.size() - 1 > 2 * s + 1) {
        throw ParameterError("check_sandwich: path length must lie in [1, 2s+1]");
    }
    SandwichReport r;
    r.profile = path_profile(g, path);
    const auto S = static_cast<std::int64_t>(s);
    r.s = S;
    r.n = static_cast<std::int64_t>(n);
    r.k = static_cast<std::int64_t>(r.profile.length());
    r.ups = r.profile.ups();
    r.downs = r.profile.downs();
    r.f_max = r.profile.f_max;
    r.f_min = r.profile.f_min;
    r.discrepancy_holds = check_discrepancy(r.profile.f).holds;
    r.i = r.f_max * (S + 1);
    r.lower_index = r.i - r.ups * (S + 1) + r.downs * S;
    r.upper_index = r.i - r.ups * S + r.downs * (S + 1);
    r.indices_valid = r.i < r.n && 0 <= r.lower_index && r.lower_index < r.upper_index && r.upper_index < r.n;
    for (std::size_t j = 0; j < r.profile.f.size(); ++j) {
        r.corrected_i = std::max(r.corrected_i, (S + 1) * r.profile.prefix_up[j] - S * r.profile.prefix_down[j]);
    }
    r.corrected_lower_index = r.corrected_i - r.ups * (S + 1) + r.downs * S;
    r.corrected_upper_index = r.corrected_i - r.ups * S + r.downs * (S + 1);
    r.corrected_passed = detail::sandwich_at(path, S, r.n, r.ups, r.downs, r.corrected_i);
    for (std::int64_t i = 0; i < r.n && !r.some_i; ++i) {
        if (detail::sandwich_at(path, S, r.n, r.ups, r.downs, i)) r.some_i = i;
    }

    if (!r.discrepancy_holds) {
        r.failure = "discrepancy bound violated";
        return r;
    }
    if (!r.indices_valid) {
        r.failure = "index bounds violated: i=" + std::to_string(r.i) + " lower=" + std::to_string(r.lower_index) +
                    " upper=" + std::to_string(r.upper_index) + " n=" + std::to_string(r.n);
        return r;
    }
    const Vertex& first = path.front();
    const Vertex& last = path.back();
    r.lower_value = last[static_cast<std::size_t>(r.lower_index)];
    r.middle_value = first[static_cast<std::size_t>(r.i)];
    r.upper_value = last[static_cast<std::size_t>(r.upper_index)];
    r.passed = r.lower_value < r.middle_value && r.middle_value < r.upper_value;
    if (!r.passed) {
        r.failure = "inequality violated: " + std::to_string(r.lower_value) + " < " + std::to_string(r.middle_value) +
                    " < " + std::to_string(r.upper_value) + " is false";
    }
    return r;
}

/// Closed path a_0, ..., a_m = a_0 with the step label of each edge.
struct Cycle {
    std::vector<Vertex> vertices;
    std::vector<Step> steps;

    std::size_t length() const noexcept { return steps.size(); }
};

struct CycleWitness {
    std::size_t s = 0, n = 0, m = 0;
    Cycle cycle;

    std::uint64_t largest_element() const {
        Ordinal top = 0;
        for (const auto& v : cycle.vertices) top = std::max(top, v.max());
        return top;
    }
};

inline std::uint64_t witness_largest_element(std::uint64_t s, std::uint64_t n) {
    return (n - 1) * (2 * s + 3) + (2 * s + 1) * (2 * s + 2);
}

/// The (2s+3)-cycle in G(beta, t^n_s) for beta > (n-1)(2s+3) + (2s+1)(2s+2):
/// a_0(i) = im, a_{2j-1}(i) = (i+s+j)m - (2j-1), a_{2j}(i) = (i+j)m - 2j
/// with m = 2s+3 and 0 < j <= s+1. Steps alternate up/down, ending with two
/// downs.
inline CycleWitness construct_witness(std::size_t s, std::size_t n) {
    if (s < 1 || s >= n) {
        throw ParameterError("construct_witness: need 0 < s < n (got s=" + std::to_string(s) +
                             ", n=" + std::to_string(n) + ")");
    }
    if (witness_largest_element(s, n) > std::numeric_limits<Ordinal>::max()) {
        throw ParameterError("construct_witness: elements exceed the ordinal range");
    }
    CycleWitness w;
    w.s = s;
    w.n = n;
    w.m = 2 * s + 3;
    const auto m = static_cast<Ordinal>(w.m);
    auto make = [&](auto&& elem) {
        std::vector<Ordinal> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<Ordinal>(elem(static_cast<Ordinal>(i)));
        return Vertex(std::move(e));
    };
    auto& vs = w.cycle.vertices;
    vs.push_back(make([&](Ordinal i) { return i * m; }));
    for (Ordinal j = 1; j <= s + 1; ++j) {
        vs.push_back(make([&](Ordinal i) { return (i + static_cast<Ordinal>(s) + j) * m - (2 * j - 1); }));
        vs.push_back(make([&](Ordinal i) { return (i + j) * m - 2 * j; }));
    }
    // vs now holds a_0 .. a_{2s+2}; close the cycle.
    vs.push_back(vs.front());
    for (std::size_t j = 0; j <= s; ++j) {
        w.cycle.steps.push_back(Step::up);
        w.cycle.steps.push_back(Step::down);
    }
    w.cycle.steps.push_back(Step::down);
    return w;
}

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct WitnessReport {
    std::vector<Check> checks;
    bool passed = false;
    std::uint64_t largest_element = 0;
    std::uint64_t expected_largest = 0;
    std::uint64_t min_beta = 0;
};

/// Re-derives every claimed property of a witness from its vertices alone.
inline WitnessReport validate_witness(const CycleWitness& w) {
    WitnessReport r;
    const auto& vs = w.cycle.vertices;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        r.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    add("length", w.m == 2 * w.s + 3 && vs.size() == w.m + 1 && w.cycle.steps.size() == w.m,
        "m=" + std::to_string(w.m) + ", vertices=" + std::to_string(vs.size()) +
            ", steps=" + std::to_string(w.cycle.steps.size()));
    add("odd", w.m % 2 == 1, "m=" + std::to_string(w.m));
    const bool closed = !vs.empty() && vs.front() == vs.back();
    add("closure", closed, closed ? "" : "first and last vertices differ");

    bool widths = std::all_of(vs.begin(), vs.end(), [&](const Vertex& v) { return v.width() == w.n; });
    add("width", widths, "n=" + std::to_string(w.n));

    std::optional<TypePattern> t;
    if (w.s >= 1 && w.s < w.n) t = canonical_type(w.n, w.s);
    for (std::size_t i = 0; i + 1 < vs.size() && i < w.cycle.steps.size(); ++i) {
        std::string name = "edge " + std::to_string(i) + "-" + std::to_string(i + 1);
        if (!t || !widths) {
            add(name, false, "no canonical type for these parameters");
            continue;
        }
        const auto got = type_of(vs[i], vs[i + 1]);
        const TypePattern& want = w.cycle.steps[i] == Step::up ? *t : t->dual();
        const bool ok = got && *got == want;
        add(name, ok, "expected " + want.str() + ", got " + (got ? got->str() : std::string("not disjoint")));
    }

    // A simple cycle: the m vertices before closure are pairwise distinct.
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < vs.size(); ++j) distinct = distinct && vs[i] != vs[j];
    add("distinct", distinct);

    r.largest_element = w.largest_element();
    r.expected_largest = witness_largest_element(w.s, w.n);
    add("largest element", r.largest_element == r.expected_largest,
        "got " + std::to_string(r.largest_element) + ", formula gives " + std::to_string(r.expected_largest));

    // The cycle lives in G(largest + 1, t) and not in any smaller beta.
    r.min_beta = r.largest_element + 1;
    bool fits = std::all_of(vs.begin(), vs.end(), [&](const Vertex& v) { return v.max() < r.min_beta; });
    bool tight = std::any_of(vs.begin(), vs.end(), [&](const Vertex& v) { return v.max() + 1 == r.min_beta; });
    add("minimal beta", fits && tight, "beta=" + std::to_string(r.min_beta));

    r.passed = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; });
    return r;
}

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

/// One exhaustive pass at a fixed cycle-length cap.
struct LengthScan {
    std::uint64_t max_length = 0;  // odd cap c for this pass
    std::uint64_t beta = 0;        // collapsed beta = min(beta, c * n)
    std::uint64_t search_size = 0; // vertices scanned as BFS starts
    std::uint64_t starts_scanned = 0;
    bool found = false;
    std::uint64_t found_length = 0;
    double seconds = 0.0;
};

namespace detail {

// BFS ball of radius R over ranks >= root, stopping at the first same-level edge.
class OddWalkProbe {
public:
    OddWalkProbe(const GraphSpec& g, const ColexIndex& index) : g_(g), index_(index), n_(g.width()) {
        if (index.size() <= kDenseLimit) {
            stamp_.assign(index.size(), 0);
            slot_.assign(index.size(), 0);
        }
    }

    // Returns the cycle length (2d+1) found through `root`, or 0.
    std::uint64_t probe(Rank root, std::uint64_t radius) {
        reset();
        std::vector<Ordinal> start(n_);
        index_.unrank(root, start);
        add(root, start, kNone, 0);
        std::size_t level_begin = 0;
        for (std::uint64_t d = 0; d <= radius && level_begin < nodes_.size(); ++d) {
            const std::size_t level_end = nodes_.size();
            for (std::size_t x = level_begin; x < level_end; ++x) {
                const std::vector<Ordinal> xs(elems(x).begin(), elems(x).end());
                // An edge inside the last level is an up-step from one of its ends.
                const Direction dir = d == radius ? Direction::up : Direction::both;
                bool hit = !for_each_neighbor(g_, xs, dir, [&](std::span<const Ordinal> y) {
                    const Rank ry = index_.rank(y);
                    if (ry < root) return true;
                    const std::size_t other = lookup(ry);
                    if (other == kNone) {
                        if (d < radius) add(ry, y, x, d + 1);
                        return true;
                    }
                    if (nodes_[other].level == d && other != x) {
                        hit_a_ = x;
                        hit_b_ = other;
                        return false;
                    }
                    return true;
                });
                if (hit) return 2 * d + 1;
            }
            level_begin = level_end;
        }
        return 0;
    }

    // Valid after a successful probe: root -> ... -> a, b -> ... -> root.
    Cycle last_cycle() const {
        std::vector<std::size_t> left, right;
        for (std::size_t x = hit_a_; x != kNone; x = nodes_[x].parent) left.push_back(x);
        for (std::size_t x = hit_b_; x != kNone; x = nodes_[x].parent) right.push_back(x);
        std::reverse(left.begin(), left.end());
        Cycle c;
        for (auto x : left) c.vertices.push_back(Vertex::from_sorted(elems(x)));
        for (auto x : right) c.vertices.push_back(Vertex::from_sorted(elems(x)));
        for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
            c.steps.push_back(interleaves_as(c.vertices[i].elems(), c.vertices[i + 1].elems(), g_.type().bits())
                                  ? Step::up
                                  : Step::down);
        }
        return c;
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    // Above this many vertices the visited set falls back to a hash map.
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 25;

    struct Node {
        std::size_t parent;
        std::uint64_t level;
    };

    void reset() {
        nodes_.clear();
        flat_.clear();
        seen_.clear();
        if (!stamp_.empty() && ++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }

    std::size_t lookup(Rank r) const {
        if (!stamp_.empty()) return stamp_[r] == epoch_ ? slot_[r] : kNone;
        const auto it = seen_.find(r);
        return it == seen_.end() ? kNone : it->second;
    }

    void add(Rank r, std::span<const Ordinal> e, std::size_t parent, std::uint64_t level) {
        if (!stamp_.empty()) {
            stamp_[r] = epoch_;
            slot_[r] = static_cast<std::uint32_t>(nodes_.size());
        } else {
            seen_.emplace(r, nodes_.size());
        }
        nodes_.push_back({parent, level});
        flat_.insert(flat_.end(), e.begin(), e.end());
    }

    std::span<const Ordinal> elems(std::size_t x) const { return {flat_.data() + x * n_, n_}; }

    const GraphSpec& g_;
    const ColexIndex& index_;
    std::size_t n_;
    std::vector<Node> nodes_;
    std::vector<Ordinal> flat_;
    std::unordered_map<Rank, std::size_t> seen_;
    std::vector<std::uint32_t> stamp_, slot_;
    std::uint32_t epoch_ = 0;
    std::size_t hit_a_ = kNone, hit_b_ = kNone;
};

}  // namespace detail

/// Scans every start vertex of g (already collapsed) for an odd closed walk
/// of length <= max_length. Returns the cycle through the lowest-ranked start.
inline std::optional<Cycle> scan_odd_cycles(const GraphSpec& g, std::uint64_t max_length, const SearchOptions& opt,
                                            LengthScan& scan) {
    const auto t0 = std::chrono::steady_clock::now();
    scan.max_length = max_length;
    scan.beta = g.beta();
    scan.search_size = g.width() > g.beta() ? 0 : require_budget(g, opt.budget, "odd cycle search");
    scan.found = false;
    if (scan.search_size == 0) return std::nullopt;

    const ColexIndex index(g.beta(), g.width());
    const std::uint64_t radius = (max_length - 1) / 2;
    const Rank total = index.size();

    std::atomic<Rank> best{total};
    std::atomic<std::uint64_t> scanned{0};
    auto worker = [&](unsigned id, unsigned stride) {
        detail::OddWalkProbe probe(g, index);
        constexpr Rank kBlock = 256;
        std::uint64_t local = 0;
        for (Rank block = Rank{id} * kBlock; block < total; block += Rank{stride} * kBlock) {
            for (Rank r = block; r < std::min(total, block + kBlock); ++r) {
                if (r >= best.load(std::memory_order_relaxed)) break;
                ++local;
                if (probe.probe(r, radius) != 0) {
                    Rank cur = best.load();
                    while (r < cur && !best.compare_exchange_weak(cur, r)) {}
                    break;
                }
            }
        }
        scanned += local;
    };
    const unsigned threads = std::max(1U, opt.threads);
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i, threads);
        for (auto& th : pool) th.join();
    }

    std::optional<Cycle> out;
    if (best.load() < total) {
        detail::OddWalkProbe probe(g, index);
        scan.found_length = probe.probe(best.load(), radius);
        scan.found = true;
        out = probe.last_cycle();
    }
    // With several workers the count depends on scheduling; report the
    // deterministic single-thread value.
    scan.starts_scanned = out ? best.load() + 1 : total;
    (void)scanned;
    scan.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

struct OddCycleSearch {
    std::optional<Cycle> cycle;
    std::vector<LengthScan> scans;
};

/// Shortest odd cycle of length <= max_length, trying 3, 5, ... on the
/// collapsed graphs G(min(beta, c*n), t). Throws BudgetError if a collapsed
/// graph exceeds the budget before a cycle is found.
inline OddCycleSearch find_shortest_odd_cycle(const GraphSpec& g, std::uint64_t max_length,
                                              const SearchOptions& opt = {}) {
    if (max_length < 3 || max_length % 2 == 0) {
        throw ParameterError("shortest_odd_cycle: maxLen must be odd and >= 3 (got " + std::to_string(max_length) + ")");
    }
    OddCycleSearch out;
    for (std::uint64_t c = 3; c <= max_length; c += 2) {
        const GraphSpec collapsed = g.with_beta(std::min<std::uint64_t>(g.beta(), c * g.width()));
        LengthScan scan;
        out.cycle = scan_odd_cycles(collapsed, c, opt, scan);
        out.scans.push_back(scan);
        if (out.cycle) break;
    }
    return out;
}

inline std::optional<Cycle> shortest_odd_cycle(const GraphSpec& g, std::uint64_t max_length,
                                               const SearchOptions& opt = {}) {
    return find_shortest_odd_cycle(g, max_length, opt).cycle;
}

struct TheoremReport {
    std::uint64_t s = 0, n = 0, max_length = 0;
    bool in_theorem_range = false;
    std::vector<LengthScan> scans;
    std::optional<Cycle> cycle;
    bool complete = false;        // every odd c <= max_length was scanned
    std::string truncated_reason; // budget message when incomplete
    bool closing_band_hit = false;// a short cycle whose d/u lies in the closing band
    bool falsified = false;       // short odd cycle inside the theorem range
};

/// Exhaustive check that G(beta, t^n_s) has no odd cycle of length <= max_length
/// (default 2s+1) for every beta, via the collapsed graphs G(c*n, t^n_s).
inline TheoremReport verify_theorem(std::uint64_t s, std::uint64_t n, std::uint64_t max_length = 0,
                                    const SearchOptions& opt = {}) {
    TheoremReport r;
    r.s = s;
    r.n = n;
    r.max_length = max_length == 0 ? 2 * s + 1 : max_length;
    if (r.max_length < 3 || r.max_length % 2 == 0) {
        throw ParameterError("verify_theorem: maxLen must be odd and >= 3");
    }
    const GraphSpec base(1, canonical_type(n, s));
    r.in_theorem_range = in_theorem_range(s, n);
    r.complete = true;
    for (std::uint64_t c = 3; c <= r.max_length; c += 2) {
        LengthScan scan;
        try {
            r.cycle = scan_odd_cycles(base.with_beta(c * n), c, opt, scan);
        } catch (const BudgetError& e) {
            r.complete = false;
            r.truncated_reason = e.what();
            break;
        }
        r.scans.push_back(scan);
        if (r.cycle) break;
    }
    if (r.cycle) {
        const auto p = profile_from_steps(r.cycle->steps);
        r.closing_band_hit = r.cycle->length() <= 2 * s + 1 &&
                             ratio_in_closing_band(p.ups(), p.downs(), static_cast<std::int64_t>(s));
        r.falsified = r.in_theorem_range && r.cycle->length() <= 2 * s + 1;
    }
    return r;
}

struct MinNRow {
    std::uint64_t n = 0;
    bool in_theorem_range = false;
    bool complete = false;
    bool has_odd_cycle = false;
    std::uint64_t cycle_length = 0;
    std::uint64_t search_size = 0;  // vertices in the largest scanned graph
    std::string note;
};

struct MinNTable {
    std::uint64_t s = 0, max_length = 0;
    std::vector<MinNRow> rows;
    std::optional<std::uint64_t> least_n_without_cycle;
    bool truncated = false;
    bool falsified = false;
};

/// verify_theorem over a range of n. least_n_without_cycle is the smallest
/// fully scanned n in range that has no odd cycle <= max_length.
inline MinNTable search_min_n(std::uint64_t s, std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t max_length = 0,
                              const SearchOptions& opt = {}) {
    if (n_lo <= s || n_lo > n_hi) {
        throw ParameterError("search_min_n: need s < n_lo <= n_hi");
    }
    MinNTable table;
    table.s = s;
    table.max_length = max_length == 0 ? 2 * s + 1 : max_length;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const auto rep = verify_theorem(s, n, table.max_length, opt);
        MinNRow row;
        row.n = n;
        row.in_theorem_range = rep.in_theorem_range;
        row.has_odd_cycle = rep.cycle.has_value();
        row.cycle_length = rep.cycle ? rep.cycle->length() : 0;
        row.complete = rep.complete || row.has_odd_cycle;
        row.search_size = rep.scans.empty() ? 0 : rep.scans.back().search_size;
        row.note = rep.truncated_reason;
        table.falsified = table.falsified || rep.falsified;
        if (!row.complete) table.truncated = true;
        if (row.complete && !row.has_odd_cycle && !table.least_n_without_cycle) table.least_n_without_cycle = n;
        table.rows.push_back(row);
    }
    return table;
}

/// Random walk of k steps from `start`, each step uniform over the current
/// vertex's neighbours. nullopt on a dead end.
template <class Engine>
std::optional<std::vector<Vertex>> random_walk(const GraphSpec& g, const Vertex& start, std::size_t k, Engine& rng) {
    std::vector<Vertex> path{start};
    for (std::size_t i = 0; i < k; ++i) {
        auto next = sample_neighbor(g, path.back(), rng);
        if (!next) return std::nullopt;
        path.push_back(std::move(*next));
    }
    return path;
}

template <class Engine>
Vertex random_vertex(std::size_t n, std::uint64_t beta, Engine& rng) {
    // Floyd's algorithm for a uniform n-subset.
    std::vector<Ordinal> pick;
    for (std::uint64_t r = beta - n; r < beta; ++r) {
        auto x = static_cast<Ordinal>(uniform_below(rng, r + 1));
        if (std::find(pick.begin(), pick.end(), x) != pick.end()) x = static_cast<Ordinal>(r);
        pick.push_back(x);
    }
    std::sort(pick.begin(), pick.end());
    return Vertex::from_sorted(pick);
}

/// Default beta for sandwich walks: (2s+2) n (2s+3), roomy enough that walks
/// of length <= 2s+1 rarely dead-end.
inline std::uint64_t default_walk_beta(std::uint64_t s, std::uint64_t n) { return (2 * s + 2) * n * (2 * s + 3); }

struct SandwichTrialSummary {
    std::uint64_t s = 0, n = 0, beta = 0, seed = 0;
    std::uint64_t walks_per_length = 0;
    std::vector<std::uint64_t> passed_by_length;  // index k-1
    std::uint64_t resampled = 0;                  // dead-end walks discarded
    std::uint64_t total = 0, passed = 0;
    std::uint64_t index_failures = 0;       // subset of failures: bounds broken at i = M(s+1)
    std::uint64_t corrected_passed = 0;     // passes at the corrected i
    std::uint64_t some_index_passed = 0;          // some i < n satisfies the inequality
    std::optional<SandwichReport> first_failure;
    std::optional<std::vector<Vertex>> first_failure_path;
};

/// walks_per_length seeded random walks for every k in [1, 2s+1], each run
/// through check_sandwich.
inline SandwichTrialSummary run_sandwich_trials(std::uint64_t s, std::uint64_t n, std::uint64_t beta,
                                                std::uint64_t walks_per_length, std::uint64_t seed) {
    const GraphSpec g(beta, canonical_type(n, s));
    if (beta < n) throw ParameterError("run_sandwich_trials: beta < n");
    std::mt19937_64 rng(seed);
    SandwichTrialSummary sum;
    sum.s = s;
    sum.n = n;
    sum.beta = beta;
    sum.seed = seed;
    sum.walks_per_length = walks_per_length;
    sum.passed_by_length.assign(2 * s + 1, 0);
    for (std::uint64_t k = 1; k <= 2 * s + 1; ++k) {
        for (std::uint64_t w = 0; w < walks_per_length; ++w) {
            std::optional<std::vector<Vertex>> path;
            while (!(path = random_walk(g, random_vertex(n, beta, rng), k, rng))) ++sum.resampled;
            const auto rep = check_sandwich(g, s, *path);
            ++sum.total;
            sum.corrected_passed += rep.corrected_passed;
            sum.some_index_passed += rep.some_i.has_value();
            if (!rep.passed && rep.discrepancy_holds && !rep.indices_valid) ++sum.index_failures;
            if (rep.passed) {
                ++sum.passed;
                ++sum.passed_by_length[k - 1];
            } else if (!sum.first_failure) {
                sum.first_failure = rep;
                sum.first_failure_path = *path;
            }
        }
    }
    return sum;
}

}  // namespace dtg

#endif  // DTG_ODDCYCLE_HPP
