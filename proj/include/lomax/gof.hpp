#pragma once

#include "lomax/distribution.hpp"

#include <cstddef>
#include <span>

namespace lomax {

struct KsResult {
    double d_stat = 0.0;
    double p_value = 0.0;
    std::size_t n = 0;
    LomaxParams fitted;
};

/// One-sample Kolmogorov-Smirnov distance between the empirical CDF of
/// `values` and the Lomax CDF. Ties are handled by the sorted-index formula.
double ks_statistic(std::span<const double> values, const LomaxParams& params);

/// P(D_n >= d) for a continuous, fully specified null distribution.
///
/// Uses the exact finite-n distribution of Marsaglia, Tsang & Wang (2003)
/// while n*d < 60; beyond that the asymptotic Kolmogorov series is used.
/// Far tails (p < 1e-6, or d >= 1/2) come from the one-sided Smirnov tail.
double ks_p_value(double d_stat, std::size_t n);

/// Asymptotic Kolmogorov survival function P(K > t) = 2 sum (-1)^(k-1) exp(-2 k^2 t^2).
double kolmogorov_asymptotic_sf(double t);

/// Exact P(D_n < d) (Marsaglia-Tsang-Wang).
double ks_exact_cdf(double d_stat, std::size_t n);

/// Exact one-sided tail P(D+_n >= d) (Smirnov-Birnbaum-Tingey).
double smirnov_sf(double d_stat, std::size_t n);

/// K-S test against fixed parameters. No correction for estimated parameters.
KsResult ks_test(std::span<const double> values, const LomaxParams& params);

/// Shape alpha minimizing the K-S distance for a known scale lambda.
double fit_min_ks_alpha(std::span<const double> values, double lambda);

} // namespace lomax
