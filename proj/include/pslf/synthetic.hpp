#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pslf/rating.hpp"

namespace pslf {

struct SyntheticOptions {
    int users = 300;
    int items = 200;
    int rank = 5;
    double density = 0.05;  // expected fraction of observed cells
    double noise = 0.1;     // stddev of additive Gaussian noise
    // Range of the ground-truth factor entries.
    double factor_low = 0.2;
    double factor_high = 0.8;
    std::uint64_t seed = 0;
};

// Ratings sampled from a low-rank ground truth plus Gaussian noise. Handy
// for demos and for checking that training approaches the noise floor.
inline Ratings synthetic_ratings(const SyntheticOptions& options) {
    if (options.users <= 0 || options.items <= 0 || options.rank <= 0)
        throw std::invalid_argument("synthetic_ratings: bad dimensions");
    if (options.density < 0.0 || options.density > 1.0)
        throw std::invalid_argument("synthetic_ratings: density outside [0, 1]");

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> factor(options.factor_low, options.factor_high);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<double> p(static_cast<std::size_t>(options.users) * options.rank);
    std::vector<double> q(static_cast<std::size_t>(options.items) * options.rank);
    for (double& v : p) v = factor(rng);
    for (double& v : q) v = factor(rng);

    Ratings out;
    out.reserve(static_cast<std::size_t>(options.density * options.users * options.items));
    for (int u = 0; u < options.users; ++u) {
        for (int i = 0; i < options.items; ++i) {
            if (unit(rng) >= options.density) continue;
            double score = 0.0;
            for (int d = 0; d < options.rank; ++d)
                score += p[static_cast<std::size_t>(u) * options.rank + d] *
                         q[static_cast<std::size_t>(i) * options.rank + d];
            if (options.noise > 0.0) score += options.noise * gauss(rng);
            out.push_back({u, i, score});
        }
    }
    return out;
}

}  // namespace pslf
