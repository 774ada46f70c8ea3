#include <gtest/gtest.h>

#include <random>

#include "disjunct/bitset.hpp"

using disjunct::BitSet;

TEST(BitSet, BasicMembership) {
    BitSet s(130, {0, 64, 129});
    EXPECT_EQ(s.count(), 3u);
    EXPECT_TRUE(s.test(64));
    EXPECT_FALSE(s.test(63));
    EXPECT_EQ(s.first(), 0u);
    EXPECT_EQ(s.next(1), 64u);
    EXPECT_EQ(s.next(65), 129u);
    EXPECT_EQ(s.next(130), 130u);
    s.reset(0);
    EXPECT_EQ(s.first(), 64u);
    EXPECT_EQ(s.indices(), (std::vector<std::size_t>{64, 129}));
}

TEST(BitSet, FullHasNoStrayBits) {
    for (std::size_t u : {0u, 1u, 63u, 64u, 65u, 200u}) {
        auto f = BitSet::full(u);
        EXPECT_EQ(f.count(), u);
        EXPECT_EQ(f, BitSet::full(u));
    }
}

TEST(BitSet, OutOfRangeSetThrows) {
    BitSet s(5);
    EXPECT_THROW(s.set(5), disjunct::ParameterError);
}

TEST(BitSet, SetAlgebraMatchesStdSet) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t u = 1 + rng() % 150;
        BitSet a(u), b(u);
        std::vector<bool> va(u), vb(u);
        for (std::size_t i = 0; i < u; ++i) {
            if (rng() % 3 == 0) { a.set(i); va[i] = true; }
            if (rng() % 3 == 0) { b.set(i); vb[i] = true; }
        }
        bool subset = true, meet = false;
        std::size_t inter = 0;
        for (std::size_t i = 0; i < u; ++i) {
            EXPECT_EQ((a | b).test(i), va[i] || vb[i]);
            EXPECT_EQ((a & b).test(i), va[i] && vb[i]);
            EXPECT_EQ((a - b).test(i), va[i] && !vb[i]);
            if (va[i] && !vb[i]) subset = false;
            if (va[i] && vb[i]) { meet = true; ++inter; }
        }
        EXPECT_EQ(a.is_subset_of(b), subset);
        EXPECT_EQ(a.intersects(b), meet);
        EXPECT_EQ(a.intersection_count(b), inter);
    }
}
