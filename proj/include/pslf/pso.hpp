#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace pslf {

struct SwarmOptions {
    int swarm_size = 10;
    double inertia = 1.0;    // weight on the previous velocity
    double cognitive = 2.0;  // pull toward the particle's own best position
    double social = 2.0;     // pull toward the population's best position
    // v_max per dimension, as a fraction of the box width; velocities are
    // clamped to [-v_max, v_max].
    double velocity_fraction = 0.2;
    std::uint64_t seed = 0;
};

// Box-constrained particle swarm minimizer. The swarm does bookkeeping and
// the velocity/position update only; fitness values are computed outside
// (possibly by parallel workers) and handed back through record_fitness().
// Lower fitness is better. All randomness comes from the seed, in a fixed
// draw order, so runs are reproducible.
class ParticleSwarm {
public:
    ParticleSwarm(std::vector<double> lower, std::vector<double> upper,
                  SwarmOptions options = {})
        : dims_(static_cast<int>(lower.size())),
          size_(options.swarm_size),
          lower_(std::move(lower)),
          upper_(std::move(upper)),
          options_(options),
          rng_(options.seed) {
        if (dims_ == 0 || upper_.size() != lower_.size())
            throw std::invalid_argument("ParticleSwarm: bad bounds");
        if (size_ <= 0) throw std::invalid_argument("ParticleSwarm: swarm_size must be >= 1");
        for (int d = 0; d < dims_; ++d)
            if (!(lower_[d] <= upper_[d]))
                throw std::invalid_argument("ParticleSwarm: lower bound above upper bound");

        vmax_.resize(dims_);
        for (int d = 0; d < dims_; ++d)
            vmax_[d] = options_.velocity_fraction * (upper_[d] - lower_[d]);

        positions_.resize(static_cast<std::size_t>(size_) * dims_);
        velocities_.resize(positions_.size());
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int j = 0; j < size_; ++j) {
            for (int d = 0; d < dims_; ++d) {
                at(positions_, j, d) = lower_[d] + unit(rng_) * (upper_[d] - lower_[d]);
                at(velocities_, j, d) = (2.0 * unit(rng_) - 1.0) * vmax_[d];
            }
        }
        personal_best_pos_ = positions_;
        personal_best_fit_.assign(size_, std::numeric_limits<double>::infinity());
        global_best_pos_.assign(dims_, 0.0);
    }

    int size() const { return size_; }
    int dims() const { return dims_; }

    std::span<const double> position(int j) const {
        return {positions_.data() + static_cast<std::size_t>(j) * dims_,
                static_cast<std::size_t>(dims_)};
    }
    std::span<const double> velocity(int j) const {
        return {velocities_.data() + static_cast<std::size_t>(j) * dims_,
                static_cast<std::size_t>(dims_)};
    }

    // Fitness of every particle at its current position. Refreshes the
    // personal attractors and the global attractor; returns true when the
    // global best improved. Non-finite fitness never becomes an attractor.
    bool record_fitness(std::span<const double> fitness) {
        if (static_cast<int>(fitness.size()) != size_)
            throw std::invalid_argument("ParticleSwarm: fitness size mismatch");
        bool improved = false;
        for (int j = 0; j < size_; ++j) {
            if (fitness[j] < personal_best_fit_[j]) {
                personal_best_fit_[j] = fitness[j];
                std::copy_n(positions_.data() + static_cast<std::size_t>(j) * dims_, dims_,
                            personal_best_pos_.data() + static_cast<std::size_t>(j) * dims_);
            }
            if (fitness[j] < global_best_fit_) {
                global_best_fit_ = fitness[j];
                global_best_particle_ = j;
                std::copy_n(positions_.data() + static_cast<std::size_t>(j) * dims_, dims_,
                            global_best_pos_.data());
                improved = true;
            }
        }
        seen_fitness_ = true;
        return improved;
    }

    // One swarm move:
    //   v <- inertia * v + cognitive * r1 * (pbest - p) + social * r2 * (gbest - p)
    //   p <- p + v
    // with r1, r2 ~ U(0,1) drawn per particle and dimension, velocities
    // clamped to [-v_max, v_max] and positions clamped to the box.
    void advance() {
        if (!seen_fitness_)
            throw std::logic_error("ParticleSwarm: advance() before record_fitness()");
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int j = 0; j < size_; ++j) {
            for (int d = 0; d < dims_; ++d) {
                const double r1 = unit(rng_);
                const double r2 = unit(rng_);
                double& v = at(velocities_, j, d);
                double& p = at(positions_, j, d);
                v = options_.inertia * v +
                    options_.cognitive * r1 * (at(personal_best_pos_, j, d) - p) +
                    options_.social * r2 * (global_best_pos_[d] - p);
                v = std::clamp(v, -vmax_[d], vmax_[d]);
                p = std::clamp(p + v, lower_[d], upper_[d]);
            }
        }
    }

    double best_fitness() const { return global_best_fit_; }
    std::span<const double> best_position() const { return global_best_pos_; }
    // Particle that set the current global best, -1 before any fitness.
    int best_particle() const { return global_best_particle_; }

    double personal_best_fitness(int j) const { return personal_best_fit_[j]; }
    std::span<const double> personal_best(int j) const {
        return {personal_best_pos_.data() + static_cast<std::size_t>(j) * dims_,
                static_cast<std::size_t>(dims_)};
    }

    std::span<const double> lower_bounds() const { return lower_; }
    std::span<const double> upper_bounds() const { return upper_; }
    std::span<const double> max_velocity() const { return vmax_; }

private:
    double& at(std::vector<double>& v, int j, int d) {
        return v[static_cast<std::size_t>(j) * dims_ + d];
    }

    int dims_ = 0;
    int size_ = 0;
    std::vector<double> lower_, upper_, vmax_;
    std::vector<double> positions_, velocities_;
    std::vector<double> personal_best_pos_;
    std::vector<double> personal_best_fit_;
    std::vector<double> global_best_pos_;
    double global_best_fit_ = std::numeric_limits<double>::infinity();
    int global_best_particle_ = -1;
    bool seen_fitness_ = false;
    SwarmOptions options_;
    std::mt19937_64 rng_;
};

}  // namespace pslf
