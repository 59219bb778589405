// Independent reference implementations used to check the library kernels.
// Everything here works from plain rating lists and flat arrays, on purpose:
// none of it shares code with the CSR/matrix-free paths under test.
#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pslf/rating.hpp"

namespace oracle {

struct Problem {
    int num_users = 0;
    int num_items = 0;
    int dims = 0;
    pslf::Ratings ratings;

    std::size_t rows() const { return static_cast<std::size_t>(num_users + num_items); }
    std::size_t size() const { return rows() * dims; }
    std::size_t user_offset(int u, int d) const {
        return static_cast<std::size_t>(u) * dims + d;
    }
    std::size_t item_offset(int i, int d) const {
        return static_cast<std::size_t>(num_users + i) * dims + d;
    }
};

inline double predict(const Problem& p, const std::vector<double>& x, int u, int i) {
    double y = 0.0;
    for (int d = 0; d < p.dims; ++d) y += x[p.user_offset(u, d)] * x[p.item_offset(i, d)];
    return y;
}

// 1/2 sum over observed [ (s - y)^2 + lambda (|x_u|^2 + |x_i|^2) ],
// evaluated term by term straight from the definition.
inline double objective(const Problem& p, const std::vector<double>& x, double lambda) {
    double total = 0.0;
    for (const pslf::Rating& r : p.ratings) {
        const double err = r.score - predict(p, x, r.user, r.item);
        double reg = 0.0;
        for (int d = 0; d < p.dims; ++d) {
            reg += x[p.user_offset(r.user, d)] * x[p.user_offset(r.user, d)];
            reg += x[p.item_offset(r.item, d)] * x[p.item_offset(r.item, d)];
        }
        total += err * err + lambda * reg;
    }
    return 0.5 * total;
}

// Central finite differences of the objective.
inline std::vector<double> fd_gradient(const Problem& p, const std::vector<double>& x,
                                       double lambda, double eps = 1e-6) {
    std::vector<double> grad(p.size());
    std::vector<double> probe = x;
    for (std::size_t k = 0; k < probe.size(); ++k) {
        const double saved = probe[k];
        probe[k] = saved + eps;
        const double up = objective(p, probe, lambda);
        probe[k] = saved - eps;
        const double down = objective(p, probe, lambda);
        probe[k] = saved;
        grad[k] = (up - down) / (2.0 * eps);
    }
    return grad;
}

// Dense Jacobian of the predictions w.r.t. the flat factor vector: one row
// per observed rating.
inline std::vector<std::vector<double>> dense_jacobian(const Problem& p,
                                                       const std::vector<double>& x) {
    std::vector<std::vector<double>> jac(p.ratings.size(),
                                         std::vector<double>(p.size(), 0.0));
    for (std::size_t k = 0; k < p.ratings.size(); ++k) {
        const pslf::Rating& r = p.ratings[k];
        for (int d = 0; d < p.dims; ++d) {
            jac[k][p.user_offset(r.user, d)] = x[p.item_offset(r.item, d)];
            jac[k][p.item_offset(r.item, d)] = x[p.user_offset(r.user, d)];
        }
    }
    return jac;
}

// (J^T J + lambda * D + damping * I) v computed densely, with D the diagonal
// of per-row observation counts.
inline std::vector<double> dense_curvature_product(const Problem& p,
                                                   const std::vector<double>& x,
                                                   double lambda, double damping,
                                                   const std::vector<double>& v) {
    const auto jac = dense_jacobian(p, x);
    std::vector<double> jv(p.ratings.size(), 0.0);
    for (std::size_t k = 0; k < jac.size(); ++k)
        for (std::size_t c = 0; c < v.size(); ++c) jv[k] += jac[k][c] * v[c];

    std::vector<double> out(v.size(), 0.0);
    for (std::size_t k = 0; k < jac.size(); ++k)
        for (std::size_t c = 0; c < v.size(); ++c) out[c] += jac[k][c] * jv[k];

    std::vector<int> degree(p.rows(), 0);
    for (const pslf::Rating& r : p.ratings) {
        ++degree[r.user];
        ++degree[p.num_users + r.item];
    }
    for (std::size_t row = 0; row < p.rows(); ++row)
        for (int d = 0; d < p.dims; ++d) {
            const std::size_t c = row * p.dims + d;
            out[c] += (lambda * degree[row] + damping) * v[c];
        }
    return out;
}

// RMSE straight from the definition.
inline double rmse(const Problem& p, const std::vector<double>& x) {
    if (p.ratings.empty()) throw std::invalid_argument("oracle::rmse: empty set");
    double sum = 0.0;
    for (const pslf::Rating& r : p.ratings) {
        const double e = r.score - predict(p, x, r.user, r.item);
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(p.ratings.size()));
}

// Gaussian elimination with partial pivoting; A is row-major n x n.
inline std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    assert(a.size() == n * n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (a[pivot * n + col] == 0.0) throw std::runtime_error("dense_solve: singular matrix");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
        x[r] = s / a[r * n + r];
    }
    return x;
}

}  // namespace oracle
