#include <gtest/gtest.h>

#include <random>

#include "disjunct/constructions.hpp"
#include "disjunct/private_subsets.hpp"
#include "oracles.hpp"

using namespace disjunct;

TEST(ClassifyPairs, AffinePlaneLinesAreAllPrivate) {
    const auto m = affine_plane_matrix(3);
    for (ColumnId j = 0; j < m.cols(); ++j) {
        const auto pc = classify_pairs(m, j);
        EXPECT_EQ(pc.private_pairs.size(), 3u);
        EXPECT_TRUE(pc.nonprivate_pairs.empty());
    }
}

TEST(ClassifyPairs, IdenticalColumnsShareTheirPair) {
    const auto m = BinaryMatrix::from_rows({"11", "11"});
    for (ColumnId j : {0u, 1u}) {
        const auto pc = classify_pairs(m, j);
        EXPECT_TRUE(pc.private_pairs.empty());
        EXPECT_EQ(pc.nonprivate_pairs, (std::vector<RowPair>{{0, 1}}));
    }
}

TEST(ClassifyPairs, SingleColumnIsAllPrivate) {
    const auto m = BinaryMatrix::from_rows({"1", "1", "0", "1"});
    const auto pc = classify_pairs(m, 0);
    EXPECT_EQ(pc.private_pairs.size(), 3u);
    EXPECT_TRUE(pc.nonprivate_pairs.empty());
}

TEST(ClassifyPairs, PartitionAndDefinitionOnRandomMatrices) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = oracle::random_matrix(rng, 2 + rng() % 10, 1 + rng() % 10, 0.45);
        const auto cols = oracle::dense(m);
        std::vector<RowPair> all_private;
        for (ColumnId j = 0; j < m.cols(); ++j) {
            const auto pc = classify_pairs(m, j);
            const auto w = m.column(j).weight();
            EXPECT_EQ(pc.private_pairs.size() + pc.nonprivate_pairs.size(), oracle::binom(w, 2));
            for (auto [a, b] : pc.nonprivate_pairs) {
                bool shared = false;
                for (ColumnId k = 0; k < m.cols(); ++k)
                    if (k != j && cols[k][a] && cols[k][b]) shared = true;
                EXPECT_TRUE(shared);
            }
            all_private.insert(all_private.end(), pc.private_pairs.begin(), pc.private_pairs.end());
        }
        std::sort(all_private.begin(), all_private.end());
        EXPECT_EQ(std::adjacent_find(all_private.begin(), all_private.end()), all_private.end());
    }
}

TEST(MatchingNumber, PairGraphExamples) {
    EXPECT_EQ(matching_number({{1, 2, 3, 4}, {{1, 2}, {3, 4}}}), 2u);
    EXPECT_EQ(matching_number({{1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}}), 1u);
    EXPECT_EQ(matching_number({{1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}}}), 2u);
    EXPECT_THROW(matching_number({{1, 2}, {{1, 5}}}), ParameterError);
}

TEST(ErdosGallai, Examples) {
    EXPECT_EQ(erdos_gallai_bound(7, 1), 6u);
    for (std::uint64_t mu = 0; mu < 6; ++mu) EXPECT_EQ(erdos_gallai_bound(2 * mu + 1, mu), choose(2 * mu + 1, 2));
    for (std::uint64_t k = 1; k < 20; ++k) EXPECT_EQ(erdos_gallai_bound(k, 0), 0u);
    EXPECT_THROW(erdos_gallai_bound(4, 2), ParameterError);
}

TEST(ErdosGallai, ExactExtremalCountsMatchTheBound) {
    for (std::size_t k = 1; k <= 6; ++k) {
        const auto exact = extremal_edge_counts(k);
        for (std::uint64_t mu = 0; 2 * mu + 1 <= k; ++mu) EXPECT_EQ(exact[mu], erdos_gallai_bound(k, mu));
    }
    EXPECT_EQ(extremal_edge_counts(7)[1], 6u);
    EXPECT_THROW(extremal_edge_counts(8), ParameterError);
}

TEST(NonprivatePairCap, Examples) {
    EXPECT_EQ(nonprivate_pair_cap(3, 1), 0u);
    EXPECT_EQ(nonprivate_pair_cap(2, 2), 3u);
    EXPECT_EQ(choose(4, 2) - choose(3, 2), choose(3, 2));
    EXPECT_THROW(nonprivate_pair_cap(3, 0), ParameterError);
}

TEST(NonprivatePairCap, PiecewiseFormMatchesMaximum) {
    for (std::uint64_t d = 1; d <= 50; ++d)
        for (std::uint64_t s = 1; s <= 2 * d; ++s) {
            const auto spread = oracle::binom(d + s, 2) - oracle::binom(d + 1, 2);
            const auto dense = oracle::binom(2 * s - 1, 2);
            EXPECT_EQ(nonprivate_pair_cap(d, s), std::max(spread, dense));
            // 3s <= 2d + 2 selects the spread branch.
            EXPECT_EQ(nonprivate_pair_cap(d, s), 3 * s <= 2 * d + 2 ? spread : dense) << d << ' ' << s;
        }
}

namespace {

// Column 0 = {0..4} with weight d+s = 5 (d = 3, s = 2); five other
// columns each share a pair with it, including two disjoint pairs, and a
// third column covers row 4, so column 0 sits inside three others.
BinaryMatrix covered_column_example() {
    return BinaryMatrix::from_columns(11, {{0, 1, 2, 3, 4},
                                           {0, 1, 5},
                                           {2, 3, 6},
                                           {4, 7},
                                           {0, 2, 8},
                                           {1, 3, 9},
                                           {0, 3, 10}});
}

}  // namespace

TEST(NonprivateBound, AffinePlaneOrderFive) {
    const auto m = affine_plane_matrix(5);
    const auto r = verify_nonprivate_bound(m, 0, 4);
    EXPECT_EQ(r.s, 1u);
    EXPECT_EQ(r.nonprivate_count, 0u);
    EXPECT_EQ(r.bound, 0u);
    EXPECT_EQ(r.matching, 0u);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(verify_nonprivate_bound_all(m, 4).size(), m.cols());
}

TEST(NonprivateBound, ContrapositiveOnACoveredColumn) {
    const auto m = covered_column_example();
    EXPECT_THROW(verify_nonprivate_bound(m, 0, 3), ParameterError);
    NonprivateBoundOptions opt;
    opt.check_matrix = false;
    const auto r = verify_nonprivate_bound(m, 0, 3, opt);
    EXPECT_EQ(r.s, 2u);
    EXPECT_EQ(r.nonprivate_count, 5u);
    EXPECT_EQ(r.bound, 4u);
    EXPECT_EQ(r.matching, 2u);
    EXPECT_FALSE(r.count_ok);
    EXPECT_FALSE(r.matching_ok);
}

TEST(NonprivateBound, PreconditionErrorsNameTheProblem) {
    auto what = [](auto&& f) {
        try {
            f();
        } catch (const ParameterError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(what([] { verify_nonprivate_bound(identity_matrix(3), 0, 1); }).find("isolated"), std::string::npos);
    EXPECT_NE(what([] { verify_nonprivate_bound(BinaryMatrix::from_rows({"11", "11"}), 0, 1); })
                  .find("not 1-disjunct"),
              std::string::npos);
    // AG(2,3) with d = 1: weight 3 = d + 2, so s = 2 > d - 1.
    const auto ag = affine_plane_matrix(3);
    EXPECT_NE(what([&] { verify_nonprivate_bound(ag, 0, 1); }).find("outside"), std::string::npos);
    NonprivateBoundOptions opt;
    opt.allow_out_of_range = true;
    const auto r = verify_nonprivate_bound(ag, 0, 1, opt);
    EXPECT_FALSE(r.in_range);
    EXPECT_TRUE(r.holds());
}

TEST(NonprivateBound, HoldsOnSmallDisjunctIsolatedFreeMatrices) {
    std::mt19937 rng(31);
    int columns = 0;
    for (int trial = 0; trial < 20000 && columns < 60; ++trial) {
        const auto m = peel_to_fixpoint(oracle::random_matrix(rng, 5 + rng() % 5, 4 + rng() % 8, 0.45));
        if (m.cols() < 3 || !is_d_disjunct(m, 2).is_disjunct) continue;
        for (const auto& r : verify_nonprivate_bound_all(m, 2)) {
            EXPECT_EQ(r.bound, 0u);
            EXPECT_EQ(r.nonprivate_count, 0u);
            EXPECT_TRUE(r.holds());
            ++columns;
        }
    }
    EXPECT_GT(columns, 0);
}

TEST(PrivatePairBudget, Examples) {
    auto b = private_pair_budget(affine_plane_matrix(3));
    EXPECT_EQ(b.sum, 36u);
    EXPECT_EQ(b.budget, 36u);
    EXPECT_TRUE(b.ok);
    b = private_pair_budget(identity_matrix(6));
    EXPECT_EQ(b.sum, 0u);
    EXPECT_EQ(b.budget, 15u);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial)
        EXPECT_TRUE(private_pair_budget(oracle::random_matrix(rng, 1 + rng() % 12, 1 + rng() % 12, 0.5)).ok);
}
