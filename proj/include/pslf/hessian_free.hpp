#pragma once

#include <limits>
#include <span>
#include <vector>

#include "pslf/conjugate_gradient.hpp"
#include "pslf/gauss_newton.hpp"
#include "pslf/metrics.hpp"

namespace pslf {

struct TrainOptions {
    double regularization = 0.02;  // lambda
    double damping = 5.0;          // gamma
    int epochs = 30;
    CgOptions cg{};
};

struct EpochRecord {
    int epoch = 0;
    double objective = 0.0;
    double train_rmse = 0.0;
    // RMSE on the probe set passed to fit(), NaN when none was given.
    double probe_rmse = std::numeric_limits<double>::quiet_NaN();
    int cg_iterations = 0;
};

// One second-order update of the factor state: solve
//   (J^T J + lambda * D + damping * I) dx = -grad L(x)
// by truncated conjugate gradients and step x <- x + dx.
inline CgResult gauss_newton_step(const RatingMatrix& train, FactorMatrix& x,
                                  double regularization, double damping,
                                  const CgOptions& cg = {}) {
    std::vector<double> rhs(x.flat().size());
    gradient(train, x, regularization, rhs);
    for (double& g : rhs) g = -g;

    std::vector<double> dx(rhs.size(), 0.0);
    CgResult result = conjugate_gradient(
        [&](std::span<const double> in, std::span<double> out) {
            curvature_product(train, x, regularization, damping, in, out);
        },
        rhs, dx, cg);

    std::span<double> values = x.flat();
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += dx[i];
    return result;
}

// Fixed-hyperparameter second-order trainer: the baseline that the swarm
// tuner adapts. Does not own the training matrix; keep it alive.
class HessianFreeTrainer {
public:
    HessianFreeTrainer(const RatingMatrix& train, TrainOptions options = {})
        : train_(&train), options_(options) {}

    const TrainOptions& options() const { return options_; }

    CgResult step(FactorMatrix& x) const {
        return gauss_newton_step(*train_, x, options_.regularization,
                                 options_.damping, options_.cg);
    }

    // Runs options().epochs updates, recording the objective and RMSE after
    // each. `probe` is an optional held-out set tracked alongside.
    std::vector<EpochRecord> fit(FactorMatrix& x,
                                 std::span<const Rating> probe = {}) const {
        std::vector<EpochRecord> history;
        history.reserve(options_.epochs);
        for (int epoch = 0; epoch < options_.epochs; ++epoch) {
            const CgResult cg = step(x);
            EpochRecord rec;
            rec.epoch = epoch;
            rec.objective = objective(*train_, x, options_.regularization);
            rec.train_rmse = rmse(*train_, x);
            if (!probe.empty()) rec.probe_rmse = rmse(probe, x);
            rec.cg_iterations = cg.iterations;
            history.push_back(rec);
        }
        return history;
    }

private:
    const RatingMatrix* train_;
    TrainOptions options_;
};

}  // namespace pslf
