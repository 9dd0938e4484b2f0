#ifndef DTG_VERTEX_HPP
#define DTG_VERTEX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dtg/error.hpp"

namespace dtg {

using Ordinal = std::uint32_t;

/// An n-element set of naturals stored as a strictly increasing sequence,
/// so that v(i) is the i-th smallest element.
class Vertex {
public:
    Vertex() = default;

    explicit Vertex(std::vector<Ordinal> elems) : elems_(std::move(elems)) {
        for (std::size_t i = 1; i < elems_.size(); ++i) {
            if (elems_[i - 1] >= elems_[i]) {
                throw ParameterError("vertex elements must be strictly increasing (index " +
                                     std::to_string(i) + ")");
            }
        }
    }

    Vertex(std::initializer_list<Ordinal> elems) : Vertex(std::vector<Ordinal>(elems)) {}

    /// Caller guarantees strict increase.
    static Vertex from_sorted(std::span<const Ordinal> elems) {
        Vertex v;
        v.elems_.assign(elems.begin(), elems.end());
        return v;
    }

    std::size_t width() const noexcept { return elems_.size(); }
    Ordinal operator[](std::size_t i) const noexcept { return elems_[i]; }
    Ordinal at(std::size_t i) const { return elems_.at(i); }
    Ordinal max() const noexcept { return elems_.empty() ? 0 : elems_.back(); }

    std::span<const Ordinal> elems() const noexcept { return elems_; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    bool disjoint_from(const Vertex& other) const noexcept {
        auto i = elems_.begin();
        auto j = other.elems_.begin();
        while (i != elems_.end() && j != other.elems_.end()) {
            if (*i == *j) return false;
            if (*i < *j) ++i; else ++j;
        }
        return true;
    }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;

private:
    std::vector<Ordinal> elems_;
};

inline std::string to_string(const Vertex& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.width(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << to_string(v); }

}  // namespace dtg

#endif  // DTG_VERTEX_HPP
