#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dtg/typecore.hpp"

using namespace dtg;

namespace {

// Membership-based oracle: label each element of the sorted union by the set
// it came from.
std::optional<std::string> type_by_membership(const Vertex& a, const Vertex& b) {
    std::set<Ordinal> sa(a.begin(), a.end()), sb(b.begin(), b.end()), all;
    all.insert(sa.begin(), sa.end());
    all.insert(sb.begin(), sb.end());
    if (all.size() != sa.size() + sb.size()) return std::nullopt;
    std::string out;
    for (Ordinal x : all) out += sb.count(x) ? '1' : '0';
    return out;
}

Vertex random_subset(std::mt19937_64& rng, std::size_t n, Ordinal universe) {
    std::vector<Ordinal> pool(universe);
    std::iota(pool.begin(), pool.end(), 0U);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    std::sort(pool.begin(), pool.end());
    return Vertex(pool);
}

}  // namespace

TEST(ParseType, AcceptsCanonicalExample) {
    auto t = parse_type("0001010111");
    EXPECT_EQ(t.width(), 5U);
    EXPECT_EQ(t.str(), "0001010111");
}

TEST(ParseType, SmallestPattern) { EXPECT_EQ(parse_type("01").width(), 1U); }

TEST(ParseType, ErrorsAreDistinct) {
    auto kind_of = [](std::string_view s) {
        try {
            parse_type(s);
        } catch (const TypeParseError& e) {
            return e.kind;
        }
        ADD_FAILURE() << "no error for " << s;
        return TypeParseError::Kind::Empty;
    };
    EXPECT_EQ(kind_of("001"), TypeParseError::Kind::OddLength);
    EXPECT_EQ(kind_of("0001"), TypeParseError::Kind::Unbalanced);
    EXPECT_EQ(kind_of("0a10"), TypeParseError::Kind::IllegalCharacter);
    EXPECT_EQ(kind_of(""), TypeParseError::Kind::Empty);
    EXPECT_THROW(parse_type("001"), ParameterError);
}

TEST(CanonicalType, Examples) {
    EXPECT_EQ(canonical_type(5, 2).str(), "0001010111");
    EXPECT_EQ(canonical_type(2, 1).str(), "0011");
    EXPECT_EQ(canonical_type(3, 1).str(), "001011");
}

TEST(CanonicalType, RejectsBadParameters) {
    EXPECT_THROW(canonical_type(3, 3), ParameterError);
    EXPECT_THROW(canonical_type(3, 0), ParameterError);
    EXPECT_THROW(canonical_type(2, 5), ParameterError);
}

TEST(CanonicalType, StructureAndRoundTrip) {
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t s = 1; s < n; ++s) {
            const auto t = canonical_type(n, s);
            const std::string w = t.str();
            ASSERT_EQ(w.size(), 2 * n);
            EXPECT_EQ(w.substr(0, s), std::string(s, '0'));
            EXPECT_EQ(w.substr(2 * n - s), std::string(s, '1'));
            for (std::size_t i = s; i < 2 * n - s; ++i) EXPECT_EQ(w[i], (i - s) % 2 ? '1' : '0') << n << "," << s;
            EXPECT_EQ(parse_type(w), t);
            EXPECT_NE(t, t.dual());
        }
    }
}

TEST(Dual, Complement) {
    EXPECT_EQ(dual(parse_type("0011")).str(), "1100");
    EXPECT_EQ(dual(parse_type("0001010111")).str(), "1110101000");
    const auto t = canonical_type(7, 3);
    EXPECT_EQ(dual(dual(t)), t);
    EXPECT_EQ(dual(t).width(), t.width());
}

TEST(TypeOf, Examples) {
    auto t = type_of(Vertex{0, 1, 3}, Vertex{2, 4, 5});
    ASSERT_TRUE(t);
    EXPECT_EQ(t->str(), "001011");
    EXPECT_EQ(*t, canonical_type(3, 1));
    EXPECT_FALSE(type_of(Vertex{0, 2}, Vertex{2, 5}));
    EXPECT_FALSE(type_of(Vertex{4}, Vertex{4}));
}

TEST(TypeOf, WidthMismatchIsAnError) { EXPECT_THROW(type_of(Vertex{0, 1}, Vertex{2}), ParameterError); }

TEST(TypeOf, MatchesMembershipOracleAndDuality) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const Ordinal universe = static_cast<Ordinal>(2 * n + rng() % 6);
        const Vertex a = random_subset(rng, n, universe);
        const Vertex b = random_subset(rng, n, universe);
        const auto got = type_of(a, b);
        const auto want = type_by_membership(a, b);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (!got) continue;
        EXPECT_EQ(got->str(), *want);
        EXPECT_EQ(*type_of(b, a), got->dual());
    }
}

TEST(TypeOf, InvariantUnderOrderPreservingRelabel) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const Vertex a = random_subset(rng, n, 2 * n + 4);
        const Vertex b = random_subset(rng, n, 2 * n + 4);
        // Strictly increasing map x -> 3x + x*x + 7.
        auto relabel = [](const Vertex& v) {
            std::vector<Ordinal> e;
            for (Ordinal x : v) e.push_back(3 * x + x * x + 7);
            return Vertex(e);
        };
        const auto before = type_of(a, b);
        const auto after = type_of(relabel(a), relabel(b));
        ASSERT_EQ(before.has_value(), after.has_value());
        if (before) {
            EXPECT_EQ(*before, *after);
        }
    }
}
