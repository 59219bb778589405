#pragma once

// Umbrella header for the PSLF library: a second-order latent factor model
// trained by Hessian-free optimization (truncated-Newton CG on Gauss-Newton
// curvature), with its regularization and damping hyperparameters adapted
// by a master-workers particle swarm.

#include "pslf/conjugate_gradient.hpp"
#include "pslf/factor_matrix.hpp"
#include "pslf/gauss_newton.hpp"
#include "pslf/hessian_free.hpp"
#include "pslf/io.hpp"
#include "pslf/metrics.hpp"
#include "pslf/parallel.hpp"
#include "pslf/pso.hpp"
#include "pslf/rating.hpp"
#include "pslf/rating_matrix.hpp"
#include "pslf/split.hpp"
#include "pslf/synthetic.hpp"
#include "pslf/tuner.hpp"
