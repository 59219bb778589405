#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pslf/hessian_free.hpp"
#include "pslf/parallel.hpp"
#include "pslf/pso.hpp"

namespace pslf {

struct TuneOptions {
    int factors = 20;
    int swarm_epochs = 30;
    // Second-order updates each particle applies to its model between swarm
    // moves.
    int steps_per_epoch = 1;
    // Search box: regularization in [0, max_regularization], damping in
    // [0, max_damping].
    double max_regularization = 0.1;
    double max_damping = 300.0;
    SwarmOptions swarm{};
    CgOptions cg{};
    // Range of the shared uniform factor initialization.
    double init_low = 0.0;
    double init_high = 0.1;
    int workers = 0;  // 0: hardware concurrency
    std::uint64_t seed = 0;
};

struct TuneRecord {
    int epoch = 0;
    double best_fitness = 0.0;  // global best held-out RMSE so far
    double regularization = 0.0;
    double damping = 0.0;
};

struct TuneResult {
    double regularization = 0.0;  // best (lambda, gamma) found
    double damping = 0.0;
    double test_rmse = std::numeric_limits<double>::infinity();
    // RMSE of the returned model on the validation set, NaN when none given.
    double validation_rmse = std::numeric_limits<double>::quiet_NaN();
    // Factor state that achieved test_rmse.
    FactorMatrix model;
    std::vector<TuneRecord> history;
};

// Hyperparameter-adaptive second-order training. Each swarm particle owns a
// full copy of the factor state, all copies starting from one shared random
// initialization so that fitness differences come from the hyperparameters
// alone. Per epoch, every particle advances its model by steps_per_epoch
// Gauss-Newton updates using its current (regularization, damping) position
// and reports RMSE on the test set as fitness; the swarm then moves. The
// particle evaluations run on a pool of worker threads while all swarm
// bookkeeping stays on the calling thread, so the result is independent of
// the worker count.
inline TuneResult tune(const RatingMatrix& train, std::span<const Rating> test,
                       std::span<const Rating> validation,
                       const TuneOptions& options = {}) {
    if (test.empty())
        throw std::invalid_argument("tune: fitness needs a non-empty test set");
    if (options.factors <= 0 || options.swarm_epochs <= 0 || options.steps_per_epoch <= 0)
        throw std::invalid_argument("tune: factors, swarm_epochs and steps_per_epoch must be >= 1");
    if (options.max_regularization < 0.0 || options.max_damping < 0.0)
        throw std::invalid_argument("tune: search box bounds must be >= 0");

    const FactorMatrix init = FactorMatrix::uniform(
        train.num_users(), train.num_items(), options.factors,
        options.init_low, options.init_high, options.seed);

    ParticleSwarm swarm({0.0, 0.0},
                        {options.max_regularization, options.max_damping},
                        options.swarm);

    std::vector<FactorMatrix> models(swarm.size(), init);
    std::vector<double> fitness(swarm.size(), 0.0);
    FactorMatrix best_model = init;

    TuneResult result;
    result.history.reserve(options.swarm_epochs);

    for (int epoch = 0; epoch < options.swarm_epochs; ++epoch) {
        parallel_for(swarm.size(), options.workers, [&](int j) {
            std::span<const double> pos = swarm.position(j);
            for (int s = 0; s < options.steps_per_epoch; ++s)
                gauss_newton_step(train, models[j], pos[0], pos[1], options.cg);
            fitness[j] = rmse(test, models[j]);
        });

        if (swarm.record_fitness(fitness))
            best_model = models[swarm.best_particle()];

        result.history.push_back({epoch, swarm.best_fitness(),
                                  swarm.best_position()[0],
                                  swarm.best_position()[1]});
        swarm.advance();
    }

    result.regularization = swarm.best_position()[0];
    result.damping = swarm.best_position()[1];
    result.test_rmse = swarm.best_fitness();
    if (!validation.empty()) result.validation_rmse = rmse(validation, best_model);
    result.model = std::move(best_model);
    return result;
}

}  // namespace pslf
