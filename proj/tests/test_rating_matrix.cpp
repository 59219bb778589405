#include "pslf/rating_matrix.hpp"

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"

using pslf::Rating;
using pslf::RatingMatrix;
using pslf::Ratings;

TEST(RatingMatrix, IndexesBothOrientations) {
    const Ratings ratings = {{0, 0, 2.0}, {0, 2, 1.0}, {1, 1, 3.0}, {2, 0, 4.0}, {2, 1, 0.5}};
    const RatingMatrix m(3, 3, ratings);

    EXPECT_EQ(m.num_users(), 3);
    EXPECT_EQ(m.num_items(), 3);
    EXPECT_EQ(m.num_observed(), 5u);

    ASSERT_EQ(m.by_user(0).size(), 2u);
    EXPECT_EQ(m.by_user(0)[0].index, 0);
    EXPECT_EQ(m.by_user(0)[0].score, 2.0);
    EXPECT_EQ(m.by_user(0)[1].index, 2);

    ASSERT_EQ(m.by_item(0).size(), 2u);
    EXPECT_EQ(m.by_item(0)[0].index, 0);
    EXPECT_EQ(m.by_item(0)[1].index, 2);
    EXPECT_EQ(m.by_item(0)[1].score, 4.0);

    EXPECT_EQ(m.user_degree(1), 1);
    EXPECT_EQ(m.item_degree(1), 2);
    EXPECT_EQ(m.item_degree(2), 1);
}

TEST(RatingMatrix, AllowsEmptyRowsAndColumns) {
    const RatingMatrix m(4, 2, {{1, 0, 1.0}});
    EXPECT_EQ(m.by_user(0).size(), 0u);
    EXPECT_EQ(m.by_user(3).size(), 0u);
    EXPECT_EQ(m.by_item(1).size(), 0u);
    EXPECT_EQ(m.user_degree(2), 0);
}

TEST(RatingMatrix, EmptyMatrix) {
    const RatingMatrix m(2, 2, {});
    EXPECT_EQ(m.num_observed(), 0u);
    EXPECT_EQ(m.by_user(1).size(), 0u);
}

TEST(RatingMatrix, RejectsOutOfRangeIndices) {
    EXPECT_THROW(RatingMatrix(2, 2, {{2, 0, 1.0}}), std::out_of_range);
    EXPECT_THROW(RatingMatrix(2, 2, {{0, -1, 1.0}}), std::out_of_range);
    EXPECT_THROW(RatingMatrix(-1, 2, {}), std::invalid_argument);
}

TEST(RatingMatrix, BothOrientationsHoldTheSameEntries) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> user(0, 19), item(0, 14);
    std::uniform_real_distribution<double> score(-5.0, 5.0);
    Ratings ratings;
    for (int k = 0; k < 200; ++k) ratings.push_back({user(rng), item(rng), score(rng)});

    const RatingMatrix m(20, 15, ratings);
    ASSERT_EQ(m.num_observed(), ratings.size());

    using Triple = std::tuple<int, int, double>;
    std::vector<Triple> from_users, from_items, expected;
    for (const Rating& r : ratings) expected.emplace_back(r.user, r.item, r.score);
    for (int u = 0; u < m.num_users(); ++u)
        for (const auto& e : m.by_user(u)) from_users.emplace_back(u, e.index, e.score);
    for (int i = 0; i < m.num_items(); ++i)
        for (const auto& e : m.by_item(i)) from_items.emplace_back(e.index, i, e.score);

    std::sort(expected.begin(), expected.end());
    std::sort(from_users.begin(), from_users.end());
    std::sort(from_items.begin(), from_items.end());
    EXPECT_EQ(from_users, expected);
    EXPECT_EQ(from_items, expected);
}

TEST(RatingMatrix, KeepsDuplicateObservations) {
    const RatingMatrix m(1, 1, {{0, 0, 1.0}, {0, 0, 2.0}});
    EXPECT_EQ(m.num_observed(), 2u);
    EXPECT_EQ(m.user_degree(0), 2);
    EXPECT_EQ(m.item_degree(0), 2);
}
