#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "pslf/rating.hpp"

namespace pslf {

struct SplitRatios {
    double train = 0.6;
    double test = 0.2;
    double validation = 0.2;
};

template <typename Row>
struct BasicThreeWaySplit {
    std::vector<Row> train;
    std::vector<Row> test;
    std::vector<Row> validation;
};

using ThreeWaySplit = BasicThreeWaySplit<Rating>;

// Seed-deterministic random partition of the observed ratings. Train and
// test take round(ratio * n) entries each; validation takes the remainder,
// so nothing is lost to rounding. Works on any row type, so files with raw
// ids can be split the same way as reindexed ratings.
template <typename Row>
BasicThreeWaySplit<Row> three_way_split(const std::vector<Row>& all,
                                        const SplitRatios& ratios,
                                        std::uint64_t seed) {
    if (ratios.train < 0.0 || ratios.test < 0.0 || ratios.validation < 0.0)
        throw std::invalid_argument("three_way_split: negative ratio");
    if (ratios.train + ratios.test + ratios.validation > 1.0 + 1e-9)
        throw std::invalid_argument("three_way_split: ratios exceed 1");

    const std::size_t n = all.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::size_t n_train = static_cast<std::size_t>(std::llround(ratios.train * n));
    std::size_t n_test = static_cast<std::size_t>(std::llround(ratios.test * n));
    if (n_train > n) n_train = n;
    if (n_train + n_test > n) n_test = n - n_train;

    BasicThreeWaySplit<Row> split;
    split.train.reserve(n_train);
    split.test.reserve(n_test);
    split.validation.reserve(n - n_train - n_test);
    for (std::size_t k = 0; k < n; ++k) {
        const Row& r = all[order[k]];
        if (k < n_train)
            split.train.push_back(r);
        else if (k < n_train + n_test)
            split.test.push_back(r);
        else
            split.validation.push_back(r);
    }
    return split;
}

}  // namespace pslf
