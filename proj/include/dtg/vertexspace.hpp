#ifndef DTG_VERTEXSPACE_HPP
#define DTG_VERTEXSPACE_HPP

// Vertices of G(beta, t) are the n-subsets of {0, ..., beta-1}. They are
// indexed by colexicographic rank through the combinatorial number system,
//
//     rank(v) = sum_i C(v(i), i + 1),
//
// which does not depend on beta: growing beta only appends new ranks.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dtg/error.hpp"
#include "dtg/vertex.hpp"

namespace dtg {

using Rank = std::uint64_t;

namespace detail {

inline bool checked_add(std::uint64_t a, std::uint64_t b, std::uint64_t& out) noexcept {
    return !__builtin_add_overflow(a, b, &out);
}

// Exact C(n, k), or false if it does not fit in 64 bits.
inline bool try_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t& out) noexcept {
    if (k > n) {
        out = 0;
        return true;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i stays integral at every step.
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return false;
    }
    out = static_cast<std::uint64_t>(acc);
    return true;
}

}  // namespace detail

/// C(n, k) with overflow checking; throws BudgetError past 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t out = 0;
    if (!detail::try_binomial(n, k, out)) {
        throw BudgetError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                              ") does not fit in 64 bits",
                          0, std::numeric_limits<std::uint64_t>::max());
    }
    return out;
}

/// Number of vertices of G(beta, t) for t of width n.
inline std::uint64_t vertex_count(std::uint64_t beta, std::uint64_t n) { return binomial(beta, n); }

inline Rank rank(std::span<const Ordinal> elems) {
    Rank r = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!detail::checked_add(r, binomial(elems[i], i + 1), r)) {
            throw BudgetError("colex rank does not fit in 64 bits", 0,
                              std::numeric_limits<std::uint64_t>::max());
        }
    }
    return r;
}

inline Rank rank(const Vertex& v, std::size_t n) {
    if (v.width() != n) {
        throw ParameterError("rank: vertex width " + std::to_string(v.width()) + " != " +
                             std::to_string(n));
    }
    return rank(v.elems());
}

inline Vertex unrank(Rank r, std::size_t n, std::uint64_t beta) {
    if (n == 0) throw ParameterError("unrank: width must be positive");
    const std::uint64_t total = binomial(beta, n);
    if (r >= total) {
        throw ParameterError("unrank: rank " + std::to_string(r) + " out of range [0, " +
                             std::to_string(total) + ")");
    }
    std::vector<Ordinal> elems(n);
    std::uint64_t hi = beta;  // exclusive upper bound for the current element
    for (std::size_t i = n; i-- > 0;) {
        // Largest c < hi with C(c, i+1) <= r.
        std::uint64_t lo = i, top = hi - 1;
        while (lo < top) {
            std::uint64_t mid = lo + (top - lo + 1) / 2;
            if (binomial(mid, i + 1) <= r) lo = mid; else top = mid - 1;
        }
        elems[i] = static_cast<Ordinal>(lo);
        r -= binomial(lo, i + 1);
        hi = lo;
    }
    return Vertex::from_sorted(elems);
}

/// Precomputed C(m, j) for m <= beta, j <= n. Used by the search kernels where
/// rank() sits on the hot path.
class ColexIndex {
public:
    ColexIndex(std::uint64_t beta, std::size_t n) : beta_(beta), n_(n), table_((beta + 1) * (n + 1)) {
        count_ = binomial(beta, n);
        for (std::uint64_t m = 0; m <= beta; ++m) {
            for (std::size_t j = 0; j <= n; ++j) {
                std::uint64_t c = 0;
                // Entries past C(beta, n) are never summed beyond count_; saturate them.
                if (!detail::try_binomial(m, j, c)) c = std::numeric_limits<std::uint64_t>::max();
                table_[m * (n + 1) + j] = c;
            }
        }
    }

    std::uint64_t beta() const noexcept { return beta_; }
    std::size_t width() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return count_; }

    Rank rank(std::span<const Ordinal> elems) const noexcept {
        Rank r = 0;
        for (std::size_t i = 0; i < elems.size(); ++i) r += table_[elems[i] * (n_ + 1) + i + 1];
        return r;
    }

    void unrank(Rank r, std::span<Ordinal> out) const noexcept {
        std::uint64_t hi = beta_;
        for (std::size_t i = n_; i-- > 0;) {
            std::uint64_t c = hi - 1;
            while (table_[c * (n_ + 1) + i + 1] > r) --c;
            out[i] = static_cast<Ordinal>(c);
            r -= table_[c * (n_ + 1) + i + 1];
            hi = c;
        }
    }

private:
    std::uint64_t beta_;
    std::size_t n_;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> table_;
};

/// All n-subsets of {0, ..., beta-1} in increasing colex rank. Empty if n > beta.
class VertexRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = const Vertex&;

        iterator() = default;
        iterator(std::size_t n, std::uint64_t beta) : beta_(beta) {
            std::vector<Ordinal> e(n);
            std::iota(e.begin(), e.end(), Ordinal{0});
            cur_ = Vertex::from_sorted(e);
            scratch_ = std::move(e);
            done_ = n > beta;
        }

        reference operator*() const noexcept { return cur_; }
        pointer operator->() const noexcept { return &cur_; }

        iterator& operator++() {
            const std::size_t n = scratch_.size();
            std::size_t i = 0;
            for (; i < n; ++i) {
                const std::uint64_t limit = (i + 1 < n) ? scratch_[i + 1] : beta_;
                if (scratch_[i] + 1 < limit) break;
            }
            if (i == n) {
                done_ = true;
                return *this;
            }
            ++scratch_[i];
            for (std::size_t j = 0; j < i; ++j) scratch_[j] = static_cast<Ordinal>(j);
            cur_ = Vertex::from_sorted(scratch_);
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

    private:
        std::uint64_t beta_ = 0;
        std::vector<Ordinal> scratch_;
        Vertex cur_;
        bool done_ = true;
    };

    VertexRange(std::size_t n, std::uint64_t beta) : n_(n), beta_(beta) {
        if (n == 0) throw ParameterError("iterate_vertices: width must be positive");
    }

    iterator begin() const { return iterator(n_, beta_); }
    std::default_sentinel_t end() const noexcept { return {}; }

    std::vector<Vertex> collect() const {
        std::vector<Vertex> out;
        for (auto it = begin(); it != end(); ++it) out.push_back(*it);
        return out;
    }

private:
    std::size_t n_;
    std::uint64_t beta_;
};

inline VertexRange iterate_vertices(std::size_t n, std::uint64_t beta) { return VertexRange(n, beta); }

/// Relabels the union of all elements onto an initial segment {0, ..., m-1},
/// preserving order. Pairwise types are unchanged.
inline std::vector<Vertex> order_collapse(std::span<const Vertex> vs) {
    std::vector<Ordinal> all;
    for (const auto& v : vs) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<Vertex> out;
    out.reserve(vs.size());
    std::vector<Ordinal> e;
    for (const auto& v : vs) {
        e.clear();
        for (Ordinal x : v) {
            e.push_back(static_cast<Ordinal>(std::lower_bound(all.begin(), all.end(), x) - all.begin()));
        }
        out.push_back(Vertex::from_sorted(e));
    }
    return out;
}

}  // namespace dtg

#endif  // DTG_VERTEXSPACE_HPP
