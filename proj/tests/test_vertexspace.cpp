#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "dtg/typecore.hpp"
#include "dtg/vertexspace.hpp"

using namespace dtg;

namespace {

// Pascal's triangle, independent of the multiplicative formula.
std::uint64_t pascal(std::uint64_t n, std::uint64_t k) {
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint64_t i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (std::uint64_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return k > n ? 0 : t[n][k];
}

// Colex order by comparing from the largest element down.
bool colex_less(const Vertex& a, const Vertex& b) {
    for (std::size_t i = a.width(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

TEST(Binomial, MatchesPascal) {
    for (std::uint64_t n = 0; n <= 40; ++n)
        for (std::uint64_t k = 0; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), pascal(n, k)) << n << " " << k;
    EXPECT_EQ(binomial(21, 7), 116280U);
    EXPECT_EQ(binomial(9, 3), 84U);
}

TEST(Binomial, OverflowIsReported) {
    EXPECT_NO_THROW(binomial(67, 33));
    EXPECT_THROW(binomial(68, 34), BudgetError);
    EXPECT_THROW(binomial(1000, 500), BudgetError);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(Vertex{0, 1, 2}, 3), 0U);
    EXPECT_EQ(rank(Vertex{0, 1, 3}, 3), 1U);
    EXPECT_THROW(rank(Vertex{0, 1}, 3), ParameterError);
}

TEST(Unrank, Examples) {
    EXPECT_EQ(unrank(0, 3, 9), (Vertex{0, 1, 2}));
    EXPECT_EQ(unrank(binomial(9, 3) - 1, 3, 9), (Vertex{6, 7, 8}));
    EXPECT_EQ(unrank(1, 3, 9), (Vertex{0, 1, 3}));
    EXPECT_THROW(unrank(84, 3, 9), ParameterError);
}

TEST(Rank, BijectionAndColexOrder) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::uint64_t beta = n; beta <= 11; ++beta) {
            const ColexIndex index(beta, n);
            std::vector<Ordinal> buf(n);
            Vertex prev;
            for (Rank r = 0; r < binomial(beta, n); ++r) {
                const Vertex v = unrank(r, n, beta);
                ASSERT_EQ(rank(v, n), r);
                ASSERT_LT(v.max(), beta);
                index.unrank(r, buf);
                ASSERT_EQ(Vertex::from_sorted(buf), v);
                ASSERT_EQ(index.rank(v.elems()), r);
                if (r > 0) {
                    ASSERT_TRUE(colex_less(prev, v));
                }
                prev = v;
            }
        }
    }
}

TEST(Rank, IndependentOfBeta) {
    const Vertex v{2, 5, 9};
    EXPECT_EQ(unrank(rank(v, 3), 3, 10), v);
    EXPECT_EQ(unrank(rank(v, 3), 3, 40), v);
}

TEST(IterateVertices, Examples) {
    const auto got = iterate_vertices(2, 3).collect();
    EXPECT_EQ(got, (std::vector<Vertex>{{0, 1}, {0, 2}, {1, 2}}));

    std::size_t count = 0;
    for (const auto& v : iterate_vertices(3, 3)) {
        EXPECT_EQ(v, (Vertex{0, 1, 2}));
        ++count;
    }
    EXPECT_EQ(count, 1U);

    count = 0;
    for (const auto& v : iterate_vertices(7, 21)) {
        (void)v;
        ++count;
    }
    EXPECT_EQ(count, 116280U);
}

TEST(IterateVertices, EmptyWhenWidthExceedsBeta) {
    auto range = iterate_vertices(4, 3);
    EXPECT_TRUE(range.begin() == range.end());
}

TEST(IterateVertices, RanksStrictlyIncrease) {
    Rank expected = 0;
    for (const auto& v : iterate_vertices(4, 10)) EXPECT_EQ(rank(v, 4), expected++);
    EXPECT_EQ(expected, binomial(10, 4));
}

TEST(OrderCollapse, Examples) {
    const std::vector<Vertex> in{{0, 5}, {3, 9}};
    EXPECT_EQ(order_collapse(in), (std::vector<Vertex>{{0, 2}, {1, 3}}));
    const std::vector<Vertex> seg{{0, 1, 2}};
    EXPECT_EQ(order_collapse(seg), seg);
}

TEST(OrderCollapse, IdempotentAndTypePreserving) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<Vertex> vs;
        for (int k = 0; k < 4; ++k) {
            std::vector<Ordinal> e;
            while (e.size() < n) {
                Ordinal x = static_cast<Ordinal>(rng() % 1000);
                if (std::find(e.begin(), e.end(), x) == e.end()) e.push_back(x);
            }
            std::sort(e.begin(), e.end());
            vs.emplace_back(e);
        }
        const auto once = order_collapse(vs);
        EXPECT_EQ(order_collapse(once), once);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j) EXPECT_EQ(type_of(vs[i], vs[j]), type_of(once[i], once[j]));
    }
}
