#pragma once

#include "lomax/estimators.hpp"

#include <cstddef>

namespace lomax {

/// Posterior mean squared error E[(alpha - d)^2 | x] of the Bayes estimator d
/// for fixed (a, b). The posterior is Gamma(n + a, rate T + b).
double bayes_mse(LossKind loss, const GammaHyper& hyper, std::size_t n, double t_stat);

/// bayes_mse averaged over the uniform hyperprior bounded by c.
double emse(LossKind loss, const HyperBound& bound, std::size_t n, double t_stat);

/// Integral over a in [0, 1] of (n + a)[(n + a) - sqrt((a + n)(a + n - 1))].
double kl_mse_integral(std::size_t n);

} // namespace lomax
