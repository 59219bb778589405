#pragma once

#include <cassert>
#include <span>

#include "pslf/factor_matrix.hpp"
#include "pslf/rating_matrix.hpp"

namespace pslf {

// Regularized squared-error objective over the observed entries,
//
//   L(X) = 1/2 * sum_(u,i) [ (s_ui - x_u . x_i)^2
//                            + lambda * (|x_u|^2 + |x_i|^2) ].
//
// The penalty sits inside the sum, so a factor row is penalized once per
// rating it participates in (rows with more observations are held tighter).
inline double objective(const RatingMatrix& train, const FactorMatrix& x,
                        double regularization) {
    double loss = 0.0;
    for (int u = 0; u < train.num_users(); ++u) {
        for (const RatingMatrix::Entry& e : train.by_user(u)) {
            const double err = e.score - x.predict(u, e.index);
            loss += err * err;
        }
    }
    if (regularization != 0.0) {
        for (int u = 0; u < train.num_users(); ++u) {
            double sq = 0.0;
            for (double v : x.user(u)) sq += v * v;
            loss += regularization * train.user_degree(u) * sq;
        }
        for (int i = 0; i < train.num_items(); ++i) {
            double sq = 0.0;
            for (double v : x.item(i)) sq += v * v;
            loss += regularization * train.item_degree(i) * sq;
        }
    }
    return 0.5 * loss;
}

// Gradient of the objective, written into `grad` (same flat layout as
// x.flat()).
inline void gradient(const RatingMatrix& train, const FactorMatrix& x,
                     double regularization, std::span<double> grad) {
    assert(grad.size() == x.flat().size());
    const int dims = x.dims();
    for (double& g : grad) g = 0.0;

    for (int u = 0; u < train.num_users(); ++u) {
        std::span<const double> xu = x.user(u);
        double* gu = grad.data() + static_cast<std::size_t>(u) * dims;
        for (const RatingMatrix::Entry& e : train.by_user(u)) {
            std::span<const double> xi = x.item(e.index);
            double* gi = grad.data() +
                         static_cast<std::size_t>(x.num_users() + e.index) * dims;
            const double err = e.score - x.predict(u, e.index);
            for (int d = 0; d < dims; ++d) {
                gu[d] -= err * xi[d];
                gi[d] -= err * xu[d];
            }
        }
    }
    if (regularization != 0.0) {
        for (int r = 0; r < x.rows(); ++r) {
            const int degree = r < x.num_users() ? train.user_degree(r)
                                                 : train.item_degree(r - x.num_users());
            std::span<const double> xr = x.row(r);
            double* gr = grad.data() + static_cast<std::size_t>(r) * dims;
            for (int d = 0; d < dims; ++d) gr[d] += regularization * degree * xr[d];
        }
    }
}

// Matrix-free curvature product
//
//   out = (J^T J + lambda * D + damping * I) v,
//
// where J is the Jacobian of the predictions w.r.t. the flat factor vector
// and D the diagonal of per-row observation counts. J^T J is the
// Gauss-Newton approximation of the loss Hessian; with lambda, damping >= 0
// the whole operator is positive semi-definite, which is what the conjugate
// gradient solver requires. Never forms J: one streaming pass over the
// observed entries costs O(|K| * dims).
inline void curvature_product(const RatingMatrix& train, const FactorMatrix& x,
                              double regularization, double damping,
                              std::span<const double> v, std::span<double> out) {
    assert(v.size() == x.flat().size());
    assert(out.size() == v.size());
    const int dims = x.dims();
    const int users = x.num_users();
    for (double& o : out) o = 0.0;

    for (int u = 0; u < train.num_users(); ++u) {
        std::span<const double> xu = x.user(u);
        const double* vu = v.data() + static_cast<std::size_t>(u) * dims;
        double* ou = out.data() + static_cast<std::size_t>(u) * dims;
        for (const RatingMatrix::Entry& e : train.by_user(u)) {
            const std::size_t irow = static_cast<std::size_t>(users + e.index);
            std::span<const double> xi = x.item(e.index);
            const double* vi = v.data() + irow * dims;
            double* oi = out.data() + irow * dims;

            // directional derivative of the prediction along v
            double jv = 0.0;
            for (int d = 0; d < dims; ++d) jv += vu[d] * xi[d] + xu[d] * vi[d];

            for (int d = 0; d < dims; ++d) {
                ou[d] += jv * xi[d];
                oi[d] += jv * xu[d];
            }
        }
    }

    for (int r = 0; r < x.rows(); ++r) {
        const int degree = r < users ? train.user_degree(r) : train.item_degree(r - users);
        const double diag = regularization * degree + damping;
        if (diag == 0.0) continue;
        const double* vr = v.data() + static_cast<std::size_t>(r) * dims;
        double* orow = out.data() + static_cast<std::size_t>(r) * dims;
        for (int d = 0; d < dims; ++d) orow[d] += diag * vr[d];
    }
}

}  // namespace pslf
