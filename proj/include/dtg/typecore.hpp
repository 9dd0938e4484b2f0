#ifndef DTG_TYPECORE_HPP
#define DTG_TYPECORE_HPP

// Disjoint types: balanced binary words describing how two disjoint n-sets
// interleave. Bit i is 0 when the i-th smallest element of a ∪ b lies in a,
// and 1 when it lies in b.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dtg/error.hpp"
#include "dtg/vertex.hpp"

namespace dtg {

class TypePattern {
public:
    /// Validating constructor; throws TypeParseError.
    static TypePattern parse(std::string_view text) {
        if (text.empty()) {
            throw TypeParseError(TypeParseError::Kind::Empty, "type string is empty");
        }
        std::size_t ones = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c != '0' && c != '1') {
                throw TypeParseError(TypeParseError::Kind::IllegalCharacter,
                                     "illegal character '" + std::string(1, c) + "' at position " +
                                         std::to_string(i) + " in type string");
            }
            ones += (c == '1');
        }
        if (text.size() % 2 != 0) {
            throw TypeParseError(TypeParseError::Kind::OddLength,
                                 "type string has odd length " + std::to_string(text.size()));
        }
        if (2 * ones != text.size()) {
            throw TypeParseError(TypeParseError::Kind::Unbalanced,
                                 "type string has " + std::to_string(text.size() - ones) +
                                     " zeros and " + std::to_string(ones) + " ones");
        }
        TypePattern t;
        t.bits_.reserve(text.size());
        for (char c : text) t.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
        return t;
    }

    std::size_t width() const noexcept { return bits_.size() / 2; }
    std::size_t length() const noexcept { return bits_.size(); }
    int operator[](std::size_t i) const noexcept { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
        return s;
    }

    TypePattern dual() const {
        TypePattern t = *this;
        for (auto& b : t.bits_) b ^= 1U;
        return t;
    }

    friend bool operator==(const TypePattern&, const TypePattern&) = default;

private:
    TypePattern() = default;
    std::vector<std::uint8_t> bits_;
};

inline std::ostream& operator<<(std::ostream& os, const TypePattern& t) { return os << t.str(); }

inline TypePattern parse_type(std::string_view text) { return TypePattern::parse(text); }

inline TypePattern dual(const TypePattern& t) { return t.dual(); }

/// t^n_s: s zeros, n-s copies of "01", then s ones.
inline TypePattern canonical_type(std::size_t n, std::size_t s) {
    if (s < 1 || s >= n) {
        throw ParameterError("canonical type needs 1 <= s < n (got n=" + std::to_string(n) +
                             ", s=" + std::to_string(s) + ")");
    }
    std::string word(2 * n, '1');
    for (std::size_t i = 0; i < 2 * n - s; ++i) {
        if (i < s || (i - s) % 2 == 0) word[i] = '0';
    }
    return TypePattern::parse(word);
}

namespace detail {

// Merge a and b (same width, caller-checked) and compare the interleaving
// against `bits`. Returns false on any shared element.
inline bool interleaves_as(std::span<const Ordinal> a, std::span<const Ordinal> b,
                           const std::vector<std::uint8_t>& bits) noexcept {
    std::size_t i = 0, j = 0, pos = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            if (bits[pos++] != 0) return false;
            ++i;
        } else {
            if (bits[pos++] != 1) return false;
            ++j;
        }
    }
    while (i < a.size()) {
        if (bits[pos++] != 0) return false;
        ++i;
    }
    while (j < b.size()) {
        if (bits[pos++] != 1) return false;
        ++j;
    }
    return true;
}

}  // namespace detail

/// Type of a disjoint pair, or nullopt when a and b share an element.
inline std::optional<TypePattern> type_of(const Vertex& a, const Vertex& b) {
    if (a.width() != b.width()) {
        throw ParameterError("type_of: width mismatch (" + std::to_string(a.width()) + " vs " +
                             std::to_string(b.width()) + ")");
    }
    if (a.width() == 0) {
        throw ParameterError("type_of: vertices must have positive width");
    }
    std::string word;
    word.reserve(2 * a.width());
    std::size_t i = 0, j = 0;
    while (i < a.width() || j < b.width()) {
        if (j == b.width() || (i < a.width() && a[i] < b[j])) {
            word += '0';
            ++i;
        } else if (i == a.width() || b[j] < a[i]) {
            word += '1';
            ++j;
        } else {
            return std::nullopt;
        }
    }
    return TypePattern::parse(word);
}

}  // namespace dtg

#endif  // DTG_TYPECORE_HPP
