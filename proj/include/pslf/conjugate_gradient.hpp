#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace pslf {

struct CgOptions {
    int max_iterations = 30;
    double relative_tolerance = 1e-2;  // stop once |r| <= tol * |b|
};

struct CgResult {
    int iterations = 0;
    double residual_norm = 0.0;
    bool converged = false;
};

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

// Conjugate gradient for A x = b, where A is symmetric positive
// (semi-)definite and available only through the product `apply(in, out)`.
// `x` is the starting point on entry and holds the solution on exit. The
// iteration is truncated at max_iterations; directions of (numerically)
// zero curvature end the iteration early.
template <typename ApplyFn>
CgResult conjugate_gradient(ApplyFn&& apply, std::span<const double> b,
                            std::span<double> x, const CgOptions& options = {}) {
    const std::size_t n = b.size();
    std::vector<double> r(n), p(n), ap(n);

    apply(std::span<const double>(x), std::span<double>(ap));
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];

    double rs = detail::dot(r, r);
    const double threshold = options.relative_tolerance * std::sqrt(detail::dot(b, b));

    CgResult result;
    result.residual_norm = std::sqrt(rs);
    if (result.residual_norm <= threshold) {
        result.converged = true;
        return result;
    }

    p = r;
    while (result.iterations < options.max_iterations) {
        apply(std::span<const double>(p), std::span<double>(ap));
        const double pap = detail::dot(p, ap);
        if (!(pap > 0.0)) break;  // zero or non-finite curvature
        const double alpha = rs / pap;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double rs_next = detail::dot(r, r);
        ++result.iterations;
        result.residual_norm = std::sqrt(rs_next);
        if (result.residual_norm <= threshold) {
            result.converged = true;
            break;
        }
        const double beta = rs_next / rs;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        rs = rs_next;
    }
    return result;
}

}  // namespace pslf
