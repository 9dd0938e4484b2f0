#ifndef DTG_ERROR_HPP
#define DTG_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dtg {

/// Raised when an argument violates an operation's precondition.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed binary type strings. The kind tells the caller which rule broke.
struct TypeParseError : ParameterError {
    enum class Kind { OddLength, Unbalanced, IllegalCharacter, Empty };

    Kind kind;
    TypeParseError(Kind k, const std::string& msg) : ParameterError(msg), kind(k) {}
};

/// Raised when a search or dump would exceed the configured vertex budget,
/// or when an exact count does not fit in 64 bits.
struct BudgetError : std::runtime_error {
    std::uint64_t requested;  // 0 when the count itself overflowed
    std::uint64_t budget;

    BudgetError(const std::string& msg, std::uint64_t req, std::uint64_t cap)
        : std::runtime_error(msg), requested(req), budget(cap) {}
};

/// A finding that contradicts the odd-girth theorem. Never expected.
struct FalsificationError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dtg

#endif  // DTG_ERROR_HPP
