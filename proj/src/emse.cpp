#include "lomax/emse.hpp"

#include "lomax/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace lomax {

namespace {

void require_data(std::size_t n, double t_stat)
{
    if (n < 1)
        throw std::domain_error("sample size n must be >= 1");
    if (!(t_stat > 0.0) || !std::isfinite(t_stat))
        throw std::domain_error("statistic T must be finite and positive");
}

// m - sqrt(m (m - 1)) rewritten without cancellation for large m.
double kl_gap(double m)
{
    return m / (m + std::sqrt(m * (m - 1.0)));
}

} // namespace

double bayes_mse(LossKind loss, const GammaHyper& hyper, std::size_t n, double t_stat)
{
    require_data(n, t_stat);
    const double m = hyper.a() + static_cast<double>(n);
    const double r = hyper.b() + t_stat;
    const double r2 = r * r;
    switch (loss) {
    case LossKind::SEL: return m / r2;
    case LossKind::KL: return 2.0 * m * kl_gap(m) / r2;
    case LossKind::EL: return (m + 1.0) / r2;
    }
    throw std::logic_error("unknown loss");
}

double emse(LossKind loss, const HyperBound& bound, std::size_t n, double t_stat)
{
    require_data(n, t_stat);
    const double nn = static_cast<double>(n);
    // (1/c) * integral_0^c db / (b + T)^2 = 1 / (T (T + c))
    const double rate_term = 1.0 / (t_stat * (t_stat + bound.c()));
    switch (loss) {
    case LossKind::SEL: return (2.0 * nn + 1.0) / 2.0 * rate_term;
    case LossKind::KL: return 2.0 * kl_mse_integral(n) * rate_term;
    case LossKind::EL: return (2.0 * nn + 3.0) / 2.0 * rate_term;
    }
    throw std::logic_error("unknown loss");
}

double kl_mse_integral(std::size_t n)
{
    if (n < 1)
        throw std::domain_error("kl_mse_integral needs n >= 1");
    const double nn = static_cast<double>(n);
    return GaussLegendre64::instance().integrate_unit([nn](double s) {
        const double m = s * s + nn;
        return 2.0 * s * m * kl_gap(m);
    });
}

} // namespace lomax
