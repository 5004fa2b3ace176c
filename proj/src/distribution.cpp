#include "lomax/distribution.hpp"

#include "lomax/summation.hpp"

#include <cmath>

namespace lomax {

namespace {

void require_nonnegative(double x, const char* what)
{
    if (!(x >= 0.0))
        throw std::domain_error(std::string(what) + " must be >= 0");
}

} // namespace

LomaxParams::LomaxParams(double alpha, double lambda) : alpha_(alpha), lambda_(lambda)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("Lomax shape alpha must be a finite positive number");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::domain_error("Lomax scale lambda must be a finite positive number");
}

double pdf(const LomaxParams& p, double x)
{
    require_nonnegative(x, "pdf argument x");
    const double a = p.alpha();
    const double l = p.lambda();
    return (a / l) * std::exp(-(a + 1.0) * std::log1p(x / l));
}

double cdf(const LomaxParams& p, double x)
{
    return 1.0 - reliability(p, x);
}

double reliability(const LomaxParams& p, double t)
{
    require_nonnegative(t, "reliability argument t");
    return std::exp(-p.alpha() * std::log1p(t / p.lambda()));
}

double hazard(const LomaxParams& p, double t)
{
    require_nonnegative(t, "hazard argument t");
    return (p.alpha() / p.lambda()) / (1.0 + t / p.lambda());
}

double mean(const LomaxParams& p)
{
    if (!(p.alpha() > 1.0))
        throw MomentUndefined("Lomax mean is undefined for alpha <= 1");
    return p.lambda() / (p.alpha() - 1.0);
}

double variance(const LomaxParams& p)
{
    if (!(p.alpha() > 2.0))
        throw MomentUndefined("Lomax variance is undefined for alpha <= 2");
    const double a = p.alpha();
    const double am1 = a - 1.0;
    return a * p.lambda() * p.lambda() / (am1 * am1 * (a - 2.0));
}

double sample_inverse(const LomaxParams& p, double u)
{
    if (!(u >= 0.0 && u < 1.0))
        throw std::domain_error("sample_inverse needs u in [0, 1)");
    // (1-u)^(-1/alpha) - 1 == expm1(-log1p(-u) / alpha), accurate near u = 0.
    return p.lambda() * std::expm1(-std::log1p(-u) / p.alpha());
}

double sufficient_t(std::span<const double> values, double lambda)
{
    if (values.empty())
        throw std::domain_error("sufficient statistic needs at least one observation");
    if (!(lambda > 0.0))
        throw std::domain_error("scale lambda must be positive");
    CompensatedSum t;
    for (double x : values) {
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::domain_error("observations must be finite and positive");
        t.add(std::log1p(x / lambda));
    }
    return t.value();
}

Sample::Sample(std::vector<double> values, double lambda)
    : values_(std::move(values)), lambda_(lambda), t_stat_(sufficient_t(values_, lambda))
{
}

} // namespace lomax
