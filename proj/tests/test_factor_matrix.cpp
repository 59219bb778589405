#include "pslf/factor_matrix.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "pslf/metrics.hpp"
#include "pslf/rating_matrix.hpp"

using pslf::FactorMatrix;

TEST(FactorMatrix, LayoutAndPredict) {
    FactorMatrix x(2, 2, 2);
    x.user(0)[0] = 1.0;
    x.user(0)[1] = 2.0;
    x.item(1)[0] = 3.0;
    x.item(1)[1] = -0.5;

    EXPECT_EQ(x.rows(), 4);
    EXPECT_EQ(x.flat().size(), 8u);
    // user rows come first, item rows after
    EXPECT_EQ(x.flat()[0], 1.0);
    EXPECT_EQ(x.row(3)[0], 3.0);
    EXPECT_DOUBLE_EQ(x.predict(0, 1), 1.0 * 3.0 + 2.0 * -0.5);
    EXPECT_DOUBLE_EQ(x.predict(1, 0), 0.0);
}

TEST(FactorMatrix, UniformIsSeededAndInRange) {
    const FactorMatrix a = FactorMatrix::uniform(5, 4, 3, 0.0, 0.1, 7);
    const FactorMatrix b = FactorMatrix::uniform(5, 4, 3, 0.0, 0.1, 7);
    const FactorMatrix c = FactorMatrix::uniform(5, 4, 3, 0.0, 0.1, 8);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (double v : a.flat()) {
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 0.1);
    }
}

TEST(FactorMatrix, RejectsBadDimensions) {
    EXPECT_THROW(FactorMatrix(1, 1, 0), std::invalid_argument);
    EXPECT_THROW(FactorMatrix(-1, 1, 2), std::invalid_argument);
}

TEST(Metrics, RmseMatchesHandComputedCase) {
    // One latent dimension: users (1.0, 2.0), items (1.5, 0.5).
    // Errors: 5 - 1*1.5 = 3.5 and 3 - 2*0.5 = 2.0, so
    // rmse = sqrt((3.5^2 + 2^2) / 2) = sqrt(8.125).
    FactorMatrix x(2, 2, 1);
    x.user(0)[0] = 1.0;
    x.user(1)[0] = 2.0;
    x.item(0)[0] = 1.5;
    x.item(1)[0] = 0.5;
    const pslf::Ratings set = {{0, 0, 5.0}, {1, 1, 3.0}};
    EXPECT_DOUBLE_EQ(pslf::rmse(set, x), std::sqrt(8.125));
}

TEST(Metrics, MatrixAndListOverloadsAgree) {
    const pslf::Ratings set = {{0, 1, 2.0}, {1, 0, -1.0}, {1, 1, 0.5}};
    const pslf::RatingMatrix m(2, 2, set);
    const FactorMatrix x = FactorMatrix::uniform(2, 2, 3, -1.0, 1.0, 3);
    EXPECT_DOUBLE_EQ(pslf::rmse(set, x), pslf::rmse(m, x));
}

TEST(Metrics, EmptySetThrows) {
    const FactorMatrix x(1, 1, 1);
    EXPECT_THROW(pslf::rmse(pslf::Ratings{}, x), std::invalid_argument);
    EXPECT_THROW(pslf::rmse(pslf::RatingMatrix(1, 1, {}), x), std::invalid_argument);
}
