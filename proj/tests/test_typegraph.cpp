#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "dtg/typegraph.hpp"

using namespace dtg;

namespace {

// Definitional oracle: filter all of [beta]^n by type_of.
std::vector<Vertex> brute_neighbors(const GraphSpec& g, const Vertex& a, Direction dir) {
    std::vector<Vertex> out;
    for (const auto& b : iterate_vertices(g.width(), g.beta())) {
        const auto t = type_of(a, b);
        if (!t) continue;
        const bool up = *t == g.type(), down = *t == g.dual_type();
        if ((dir != Direction::down && up) || (dir != Direction::up && down)) out.push_back(b);
    }
    return out;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

TypePattern random_type(std::mt19937_64& rng, std::size_t n) {
    std::string w(n, '0');
    w += std::string(n, '1');
    std::shuffle(w.begin(), w.end(), rng);
    return parse_type(w);
}

}  // namespace

TEST(Adjacent, Examples) {
    const GraphSpec g(6, canonical_type(3, 1));
    EXPECT_TRUE(adjacent(g, {0, 1, 3}, {2, 4, 5}));
    EXPECT_TRUE(adjacent(g, {2, 4, 5}, {0, 1, 3}));
    EXPECT_FALSE(adjacent(g, {0, 1, 3}, {0, 1, 3}));
    EXPECT_FALSE(adjacent(g, {0, 1, 2}, {3, 4, 5}));
}

TEST(Adjacent, RejectsInvalidVertices) {
    const GraphSpec g(6, canonical_type(3, 1));
    EXPECT_THROW(adjacent(g, {0, 1}, {2, 4, 5}), ParameterError);
    EXPECT_THROW(adjacent(g, {0, 1, 6}, {2, 4, 5}), ParameterError);
    EXPECT_THROW(GraphSpec(0, canonical_type(3, 1)), ParameterError);
}

TEST(Adjacent, SymmetricIrreflexive) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const GraphSpec g(n + 1 + rng() % 5, random_type(rng, n));
        for (const auto& a : iterate_vertices(n, g.beta())) {
            EXPECT_FALSE(adjacent(g, a, a));
            for (const auto& b : iterate_vertices(n, g.beta())) EXPECT_EQ(adjacent(g, a, b), adjacent(g, b, a));
        }
    }
}

TEST(Neighbors, UpExample) {
    const GraphSpec g(6, canonical_type(3, 1));
    EXPECT_EQ(neighbors(g, {0, 1, 3}, Direction::up), (std::vector<Vertex>{{2, 4, 5}}));
}

TEST(Neighbors, ConsecutiveStartHasNoUpNeighbour) {
    // b(0) would have to sit strictly between 1 and 2.
    const GraphSpec g(6, canonical_type(3, 1));
    const Vertex a{0, 1, 2};
    EXPECT_TRUE(brute_neighbors(g, a, Direction::up).empty());
    EXPECT_TRUE(neighbors(g, a, Direction::up).empty());
    EXPECT_EQ(neighbors(g, a, Direction::both), brute_neighbors(g, a, Direction::both));
}

TEST(Neighbors, MatchBruteForceOnRandomGraphs) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const GraphSpec g(n + rng() % 8, random_type(rng, n));
        for (const auto& a : iterate_vertices(n, g.beta())) {
            const auto up = neighbors(g, a, Direction::up);
            const auto down = neighbors(g, a, Direction::down);
            const auto both = neighbors(g, a, Direction::both);
            // Lexicographic order within each direction.
            EXPECT_TRUE(std::is_sorted(up.begin(), up.end()));
            EXPECT_TRUE(std::is_sorted(down.begin(), down.end()));
            EXPECT_EQ(up, sorted(brute_neighbors(g, a, Direction::up)));
            EXPECT_EQ(down, sorted(brute_neighbors(g, a, Direction::down)));
            EXPECT_EQ(sorted(both), sorted(brute_neighbors(g, a, Direction::both)));
            // The two directions partition the neighbourhood.
            std::set<Vertex> overlap;
            std::set_intersection(up.begin(), up.end(), down.begin(), down.end(),
                                  std::inserter(overlap, overlap.begin()));
            EXPECT_TRUE(overlap.empty());
            EXPECT_EQ(both.size(), up.size() + down.size());
            EXPECT_EQ(neighbor_count(g, a, Direction::both), static_cast<long double>(both.size()));
        }
    }
}

TEST(Neighbors, SatisfyPreliminaryInequalities) {
    // tp(a,b) = t^n_s: b(i-s-1) < a(i) < b(i-s) for s < i < n.
    // tp(a,b) = dual:  b(i+s) < a(i) < b(i+s+1) for i < n-s-1.
    std::mt19937_64 rng(23);
    for (std::size_t n = 3; n <= 6; ++n) {
        for (std::size_t s = 1; s < n; ++s) {
            const GraphSpec g(3 * n + 2, canonical_type(n, s));
            for (int trial = 0; trial < 30; ++trial) {
                const Vertex a = unrank(rng() % binomial(g.beta(), n), n, g.beta());
                for (const auto& b : neighbors(g, a, Direction::up)) {
                    for (std::size_t i = s + 1; i < n; ++i) {
                        EXPECT_LT(b[i - s - 1], a[i]);
                        EXPECT_LT(a[i], b[i - s]);
                    }
                }
                for (const auto& b : neighbors(g, a, Direction::down)) {
                    for (std::size_t i = 0; i + s + 1 < n; ++i) {
                        EXPECT_LT(b[i + s], a[i]);
                        EXPECT_LT(a[i], b[i + s + 1]);
                    }
                }
            }
        }
    }
}

TEST(Adjacent, PreservedByIncreasingRelabel) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const GraphSpec g(2 * n + 3, random_type(rng, n));
        const GraphSpec wide(4 * g.beta(), g.type());
        auto lift = [](const Vertex& v) {
            std::vector<Ordinal> e;
            for (Ordinal x : v) e.push_back(4 * x + (x % 3));
            return Vertex(e);
        };
        for (const auto& a : iterate_vertices(n, g.beta()))
            for (const auto& b : iterate_vertices(n, g.beta()))
                EXPECT_EQ(adjacent(g, a, b), adjacent(wide, lift(a), lift(b)));
    }
}

TEST(SampleNeighbor, UniformOverNeighbourhood) {
    const GraphSpec g(9, canonical_type(2, 1));
    const Vertex a{2, 5};
    const auto all = neighbors(g, a, Direction::both);
    ASSERT_GT(all.size(), 3U);
    std::map<Vertex, int> hits;
    std::mt19937_64 rng(1);
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        auto b = sample_neighbor(g, a, rng);
        ASSERT_TRUE(b);
        ASSERT_TRUE(adjacent(g, a, *b));
        ++hits[*b];
    }
    EXPECT_EQ(hits.size(), all.size());
    // Chi-square against uniform; df = |N|-1 is small, 60 is far in the tail.
    const double expect = static_cast<double>(draws) / static_cast<double>(all.size());
    double chi2 = 0;
    for (auto& [v, c] : hits) chi2 += (c - expect) * (c - expect) / expect;
    EXPECT_LT(chi2, 60.0);
}

TEST(SampleNeighbor, NoneWhenIsolated) {
    const GraphSpec g(6, canonical_type(3, 1));
    std::mt19937_64 rng(1);
    // {0,1,2} has no up neighbour; its down neighbours need three elements below 0.
    EXPECT_FALSE(sample_neighbor(g, Vertex{0, 1, 2}, rng));
}

TEST(Edges, Examples) {
    const GraphSpec single(2, parse_type("01"));
    const auto e = edges(single);
    ASSERT_EQ(e.size(), 1U);
    EXPECT_EQ(e[0].first, Vertex{0});
    EXPECT_EQ(e[0].second, Vertex{1});

    EXPECT_TRUE(edges(GraphSpec(3, canonical_type(3, 1))).empty());
}

TEST(Edges, MatchBruteForcePairs) {
    std::mt19937_64 rng(31);
    std::vector<GraphSpec> specs{GraphSpec(6, canonical_type(3, 1))};
    for (int i = 0; i < 10; ++i) {
        const std::size_t n = 1 + rng() % 3;
        specs.emplace_back(n + rng() % 7, random_type(rng, n));
    }
    for (const auto& g : specs) {
        std::set<std::pair<Vertex, Vertex>> brute;
        const auto vs = iterate_vertices(g.width(), g.beta()).collect();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (adjacent(g, vs[i], vs[j])) brute.emplace(vs[i], vs[j]);
        const auto got = edges(g);
        EXPECT_EQ(got.size(), brute.size());
        const std::set<std::pair<Vertex, Vertex>> got_set(got.begin(), got.end());
        EXPECT_EQ(got_set, brute);
        for (const auto& [a, b] : got) EXPECT_LT(rank(a, g.width()), rank(b, g.width()));
        EXPECT_EQ(edge_count(g), brute.size());
    }
}

TEST(Export, SingleEdge) {
    const GraphSpec g(2, parse_type("01"));
    std::ostringstream dimacs, jsonl;
    export_graph(g, ExportFormat::dimacs, dimacs);
    export_graph(g, ExportFormat::jsonl, jsonl);
    EXPECT_EQ(dimacs.str(), "p edge 2 1\ne 1 2\n");
    EXPECT_EQ(jsonl.str(), "{\"a\":[0],\"b\":[1]}\n");
}

TEST(Export, DimacsIdsAreColexRanksPlusOne) {
    const GraphSpec g(6, canonical_type(3, 1));
    std::ostringstream out;
    export_graph(g, ExportFormat::dimacs, out);
    std::istringstream in(out.str());
    std::string p, kind;
    std::uint64_t nv = 0, ne = 0;
    in >> p >> kind >> nv >> ne;
    EXPECT_EQ(nv, 20U);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> lines;
    std::string e;
    std::uint64_t u = 0, v = 0;
    while (in >> e >> u >> v) lines.emplace_back(u, v);
    ASSERT_EQ(lines.size(), ne);
    const auto es = edges(g);
    for (std::size_t i = 0; i < es.size(); ++i) {
        EXPECT_EQ(lines[i].first, rank(es[i].first, 3) + 1);
        EXPECT_EQ(lines[i].second, rank(es[i].second, 3) + 1);
    }
}

TEST(Export, RefusesOverBudget) {
    const GraphSpec g(30, canonical_type(6, 1));
    std::ostringstream out;
    try {
        export_graph(g, ExportFormat::dimacs, out, 1000);
        FAIL() << "expected BudgetError";
    } catch (const BudgetError& e) {
        EXPECT_EQ(e.requested, binomial(30, 6));
        EXPECT_EQ(e.budget, 1000U);
    }
    EXPECT_TRUE(out.str().empty());
}
