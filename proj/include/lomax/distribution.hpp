#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lomax {

/// Raised when a moment is requested for a shape parameter at which it does
/// not exist (mean needs alpha > 1, variance needs alpha > 2).
class MomentUndefined : public std::domain_error {
public:
    explicit MomentUndefined(const std::string& what) : std::domain_error(what) {}
};

/**
 * Shape and scale of the Lomax (Pareto type II) lifetime model
 *
 *    f(x) = (alpha / lambda) (1 + x / lambda)^-(alpha + 1),   x >= 0.
 *
 * Both parameters are validated once at construction; the free functions
 * below assume a valid instance and only check their own argument.
 */
class LomaxParams {
public:
    LomaxParams(double alpha, double lambda);

    double alpha() const noexcept { return alpha_; }
    double lambda() const noexcept { return lambda_; }

private:
    double alpha_;
    double lambda_;
};

double pdf(const LomaxParams& p, double x);
double cdf(const LomaxParams& p, double x);
double reliability(const LomaxParams& p, double t);
double hazard(const LomaxParams& p, double t);

/// lambda / (alpha - 1); throws MomentUndefined unless alpha > 1.
double mean(const LomaxParams& p);
/// alpha lambda^2 / ((alpha - 1)^2 (alpha - 2)); throws MomentUndefined unless alpha > 2.
double variance(const LomaxParams& p);

/// Quantile function: lambda [(1 - u)^(-1/alpha) - 1] for u in [0, 1).
double sample_inverse(const LomaxParams& p, double u);

/// T = sum ln(1 + x_i / lambda), compensated and in input order.
double sufficient_t(std::span<const double> values, double lambda);

/// Positive observations together with the statistic T for one known scale.
class Sample {
public:
    Sample(std::vector<double> values, double lambda);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double lambda() const noexcept { return lambda_; }
    double t_stat() const noexcept { return t_stat_; }

private:
    std::vector<double> values_;
    double lambda_;
    double t_stat_;
};

} // namespace lomax
