#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "pslf/factor_matrix.hpp"
#include "pslf/rating.hpp"
#include "pslf/rating_matrix.hpp"

namespace pslf {

// Root mean square error of the model's predictions over a held-out set.
inline double rmse(std::span<const Rating> set, const FactorMatrix& x) {
    if (set.empty()) throw std::invalid_argument("rmse: empty rating set");
    double sum = 0.0;
    for (const Rating& r : set) {
        const double e = r.score - x.predict(r.user, r.item);
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(set.size()));
}

// Same over all observed entries of a rating matrix.
inline double rmse(const RatingMatrix& m, const FactorMatrix& x) {
    if (m.num_observed() == 0) throw std::invalid_argument("rmse: empty rating matrix");
    double sum = 0.0;
    for (int u = 0; u < m.num_users(); ++u) {
        for (const RatingMatrix::Entry& e : m.by_user(u)) {
            const double d = e.score - x.predict(u, e.index);
            sum += d * d;
        }
    }
    return std::sqrt(sum / static_cast<double>(m.num_observed()));
}

}  // namespace pslf
