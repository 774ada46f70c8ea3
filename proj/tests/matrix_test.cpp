#include <gtest/gtest.h>

#include <random>

#include "disjunct/constructions.hpp"
#include "disjunct/matrix.hpp"
#include "oracles.hpp"

using namespace disjunct;

TEST(BooleanSum, EmptyListIsEmpty) {
    auto s = boolean_sum({});
    EXPECT_EQ(s.weight(), 0u);
}

TEST(BooleanSum, UnionOfSupports) {
    ColumnSupport a(3, {0, 1}), b(3, {1, 2});
    auto s = boolean_sum({a, b});
    EXPECT_EQ(s, ColumnSupport(3, {0, 1, 2}));
    EXPECT_LE(s.weight(), a.weight() + b.weight());
}

TEST(BooleanSum, LinesThroughAPointOfAffinePlane) {
    const auto m = affine_plane_matrix(3);
    std::vector<ColumnSupport> through;
    m.row(0).cols().for_each([&](ColumnId j) { through.push_back(m.column(j)); });
    ASSERT_EQ(through.size(), 4u);
    EXPECT_EQ(boolean_sum(through).weight(), 1u + 4u * 2u);
}

TEST(BooleanSum, MismatchedRowCountsRejected) {
    EXPECT_THROW(boolean_sum({ColumnSupport(2, {0}), ColumnSupport(3, {0})}), ParameterError);
}

TEST(BooleanSum, IdempotentCommutativeAssociative) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = oracle::random_matrix(rng, 1 + rng() % 12, 3, 0.4);
        const auto &a = m.column(0), &b = m.column(1), &c = m.column(2);
        EXPECT_EQ(boolean_sum({a, a}), a);
        EXPECT_EQ(boolean_sum({a, b}), boolean_sum({b, a}));
        EXPECT_EQ(boolean_sum({boolean_sum({a, b}), c}), boolean_sum({a, boolean_sum({b, c})}));
    }
}

TEST(Contains, Examples) {
    EXPECT_TRUE(contains(ColumnSupport(3, {0, 1, 2}), ColumnSupport(3, {0, 2})));
    EXPECT_FALSE(contains(ColumnSupport(3, {0, 1}), ColumnSupport(3, {2})));
    const auto m = affine_plane_matrix(3);
    for (const auto& c : m.columns()) EXPECT_TRUE(contains(c, c));
    EXPECT_TRUE(contains(ColumnSupport(3, {1}), boolean_sum({})));
    EXPECT_FALSE(contains(boolean_sum({}), ColumnSupport(3, {1})));
}

TEST(BinaryMatrix, TransposeConsistencyAndOnesCount) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = oracle::random_matrix(rng, 1 + rng() % 20, 1 + rng() % 20, 0.3);
        std::size_t row_total = 0, col_total = 0;
        for (RowId i = 0; i < m.rows(); ++i) {
            row_total += m.row(i).size();
            for (ColumnId j = 0; j < m.cols(); ++j)
                EXPECT_EQ(m.row(i).cols().test(j), m.column(j).contains(i));
        }
        for (const auto& c : m.columns()) col_total += c.weight();
        EXPECT_EQ(row_total, col_total);
        EXPECT_EQ(row_total, m.ones());
    }
}

TEST(BinaryMatrix, RejectsBadConstruction) {
    EXPECT_THROW(BinaryMatrix::from_columns(2, {{0, 2}}), ParameterError);
    EXPECT_THROW(BinaryMatrix(3, {ColumnSupport(2, {0})}), ParameterError);
    EXPECT_THROW(BinaryMatrix::from_rows({"10", "1"}), ParameterError);
    const auto m = identity_matrix(2);
    EXPECT_THROW(m.column(2), ParameterError);
    EXPECT_THROW(m.row(2), ParameterError);
}

TEST(BinaryMatrix, WithoutKeepsSurvivorOrder) {
    const auto m = BinaryMatrix::from_rows({"101", "011", "110"});
    const auto r = m.without(BitSet(3, {1}), BitSet(3, {0}));
    EXPECT_EQ(r, BinaryMatrix::from_rows({"01", "10"}));
}

TEST(BinaryMatrix, SanityQueries) {
    const auto m = BinaryMatrix::from_rows({"1010", "1000"});
    EXPECT_EQ(find_empty_columns(m), (std::vector<ColumnId>{1, 3}));
    EXPECT_EQ(find_duplicate_columns(m), (std::vector<std::pair<ColumnId, ColumnId>>{{1, 3}}));
    EXPECT_EQ(constant_column_weight(m), -1);
    EXPECT_EQ(constant_column_weight(affine_plane_matrix(5)), 5);
}
