#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace pslf {

// Latent factors of users and items stacked into one matrix: rows
// [0, num_users) hold user factors, rows [num_users, num_users + num_items)
// hold item factors. Storage is row-major and contiguous, so an optimizer
// can treat the whole state as one flat vector.
class FactorMatrix {
public:
    FactorMatrix() = default;

    FactorMatrix(int num_users, int num_items, int dims)
        : num_users_(num_users), num_items_(num_items), dims_(dims) {
        if (num_users < 0 || num_items < 0 || dims <= 0)
            throw std::invalid_argument("FactorMatrix: bad dimensions");
        values_.assign(static_cast<std::size_t>(rows()) * dims_, 0.0);
    }

    // Every entry drawn i.i.d. from U[low, high).
    static FactorMatrix uniform(int num_users, int num_items, int dims,
                                double low, double high, std::uint64_t seed) {
        FactorMatrix x(num_users, num_items, dims);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(low, high);
        for (double& v : x.values_) v = dist(rng);
        return x;
    }

    int num_users() const { return num_users_; }
    int num_items() const { return num_items_; }
    int dims() const { return dims_; }
    int rows() const { return num_users_ + num_items_; }

    std::span<double> row(int r) {
        return {values_.data() + static_cast<std::size_t>(r) * dims_,
                static_cast<std::size_t>(dims_)};
    }
    std::span<const double> row(int r) const {
        return {values_.data() + static_cast<std::size_t>(r) * dims_,
                static_cast<std::size_t>(dims_)};
    }

    std::span<double> user(int u) { return row(u); }
    std::span<const double> user(int u) const { return row(u); }
    std::span<double> item(int i) { return row(num_users_ + i); }
    std::span<const double> item(int i) const { return row(num_users_ + i); }

    // Whole state as one flat vector, row-major.
    std::span<double> flat() { return values_; }
    std::span<const double> flat() const { return values_; }

    // Inner product of the user and item factor rows.
    double predict(int u, int i) const {
        const double* a = values_.data() + static_cast<std::size_t>(u) * dims_;
        const double* b = values_.data() + static_cast<std::size_t>(num_users_ + i) * dims_;
        double y = 0.0;
        for (int d = 0; d < dims_; ++d) y += a[d] * b[d];
        return y;
    }

    friend bool operator==(const FactorMatrix&, const FactorMatrix&) = default;

private:
    int num_users_ = 0;
    int num_items_ = 0;
    int dims_ = 0;
    std::vector<double> values_;
};

}  // namespace pslf
