#include <gtest/gtest.h>

#include <random>

#include "disjunct/matching.hpp"
#include "oracles.hpp"

using namespace disjunct;
using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

TEST(Matching, SmallGraphs) {
    EXPECT_EQ(maximum_matching_size(5, {{1, 2}, {3, 4}}), 2u);
    EXPECT_EQ(maximum_matching_size(4, {{1, 2}, {2, 3}, {1, 3}}), 1u);
    EXPECT_EQ(maximum_matching_size(5, {{1, 2}, {2, 3}, {3, 4}}), 2u);
    EXPECT_EQ(oracle::matching_number(5, {{1, 2}, {2, 3}, {3, 4}}), 2u);
    EXPECT_EQ(maximum_matching_size(0, {}), 0u);
    EXPECT_EQ(maximum_matching_size(3, {{0, 0}}), 0u);
}

TEST(Matching, NeedsBlossomContraction) {
    // Two triangles joined by a path; greedy from a bad start needs a blossom.
    const Edges e{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {0, 7}};
    EXPECT_EQ(maximum_matching_size(8, e), oracle::matching_number(8, e));
    // Petersen graph has a perfect matching.
    const Edges petersen{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                         {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    EXPECT_EQ(maximum_matching_size(10, petersen), 5u);
}

TEST(Matching, MateVectorIsAValidMatching) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 14;
        Edges e;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) e.emplace_back(a, b);
        const auto mate = maximum_matching(n, e);
        for (std::size_t v = 0; v < n; ++v) {
            if (mate[v] == unmatched) continue;
            EXPECT_EQ(mate[mate[v]], v);
            const auto u = mate[v];
            EXPECT_TRUE(std::find(e.begin(), e.end(), std::make_pair(std::min(u, v), std::max(u, v))) != e.end());
        }
    }
}

TEST(Matching, AgreesWithBruteForceUpToNineVertices) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        Edges e;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (rng() % 2) e.emplace_back(a, b);
        ASSERT_EQ(maximum_matching_size(n, e), oracle::matching_number(n, e));
    }
}

TEST(Matching, RejectsOutOfRangeEndpoints) {
    EXPECT_THROW(maximum_matching_size(2, {{0, 2}}), ParameterError);
}
