#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "ycover/constructor.hpp"

using namespace ycover;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::Internal;
}

} // namespace

TEST(Constructor, CapacityMatchesPascal) {
    const auto p = ref::pascal(20);
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j)
            ASSERT_EQ(capacity(i, j), p[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(i)] - 1);
}

TEST(Constructor, CapacityTableMatchesClosedForm) {
    const CapacityTable t(12);
    for (int i = 1; i <= 11; ++i)
        for (int j = 1; i + j <= 12; ++j) ASSERT_EQ(t.at(i, j), binomial(i + j, i) - 1) << i << "," << j;
}

TEST(Constructor, FixedCapacities) {
    EXPECT_EQ(capacity(1, 1), 1);
    EXPECT_EQ(capacity(2, 2), 5);
    EXPECT_EQ(capacity(3, 2), 9);
    EXPECT_EQ(capacity(3, 3), 19);
    EXPECT_EQ(capacity(1, 7), 7);
}

TEST(Constructor, BinomialOverflowIsReported) {
    EXPECT_EQ(binomial(60, 30), 118264581564861424LL);
    EXPECT_EQ(code_of([] { binomial(80, 40); }), ErrorCode::Overflow);
    EXPECT_TRUE(feasible(40, 40, 1'000'000));
}

TEST(Constructor, Feasible) {
    EXPECT_TRUE(feasible(2, 2, 5));
    EXPECT_FALSE(feasible(2, 2, 6));
    EXPECT_TRUE(feasible(1, 1, 1));
    EXPECT_FALSE(feasible(1, 1, 2));
    EXPECT_EQ(code_of([] { feasible(0, 1, 1); }), ErrorCode::InvalidBudget);
}

TEST(Constructor, StaircasePartitionsAreValid) {
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            const auto c = build_staircase_partition(i, j);
            const auto y = staircase(static_cast<int>(capacity(i, j)));
            ASSERT_TRUE(ref::brute_is_partition(y, c)) << i << "," << j;
            ASSERT_TRUE(all_actual(c));
            const auto [mr, mc] = ref::brute_maxima(c);
            ASSERT_LE(mr, i);
            ASSERT_LE(mc, j);
            ASSERT_EQ(static_cast<std::int64_t>(c.size()), binomial(i + j, i) - 1);
        }
}

TEST(Constructor, ThreeTwoHasNineRectangles) {
    const auto c = build_staircase_partition(3, 2);
    EXPECT_EQ(c.size(), 9u);
    // first block: f(2,2) + 1 = 6 rows by 4 columns
    EXPECT_EQ(c.front(), GenRect::block(1, 6, 1, 4));
}

TEST(Constructor, SmallCases) {
    EXPECT_EQ(build_staircase_partition(1, 1), (Cover{GenRect({1}, {1})}));
    EXPECT_EQ(build_staircase_partition(1, 2), (Cover{GenRect({1}, {1, 2}), GenRect({2}, {1})}));
    EXPECT_EQ(build_staircase_partition(2, 1), (Cover{GenRect({1, 2}, {1}), GenRect({1}, {2})}));
}

TEST(Constructor, RestrictToSuffix) {
    const auto c = restrict_to_suffix(build_staircase_partition(2, 2), 5, 3);
    EXPECT_TRUE(ref::brute_is_partition(staircase(3), c));
    EXPECT_TRUE(all_actual(c));
}

TEST(Constructor, PartitionForArbitraryDiagrams) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const int z = 1 + trial % 9;
        const auto y = ref::random_diagram(rng, z, 12);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (!feasible(i, j, z)) {
                    EXPECT_EQ(code_of([&] { build_partition_for(y, i, j); }), ErrorCode::Infeasible);
                    continue;
                }
                const auto c = build_partition_for(y, i, j);
                ASSERT_TRUE(ref::brute_is_partition(y, c));
                ASSERT_TRUE(all_actual(c));
                ASSERT_TRUE(locality(y, c).is_local(i, j));
            }
    }
}

TEST(Constructor, LargeBudgetIsShrunk) {
    const auto y = staircase(30);
    const auto c = build_partition_for(y, 10, 10);
    EXPECT_TRUE(ref::brute_is_partition(y, c));
    EXPECT_TRUE(locality(y, c).is_local(10, 10));
}

TEST(Constructor, MinBalancedBudget) {
    EXPECT_EQ(min_balanced_budget(1), 1);
    EXPECT_EQ(min_balanced_budget(2), 2);
    EXPECT_EQ(min_balanced_budget(5), 2);
    EXPECT_EQ(min_balanced_budget(6), 3);
    EXPECT_EQ(min_balanced_budget(19), 3);
    EXPECT_EQ(min_balanced_budget(20), 4);
}

TEST(Constructor, OneBySevenIsTheRows) {
    const auto c = build_staircase_partition(1, 7);
    ASSERT_EQ(c.size(), 7u);
    for (int s = 1; s <= 7; ++s) EXPECT_EQ(c[static_cast<std::size_t>(s - 1)], GenRect::block(s, s, 1, 8 - s));
}
