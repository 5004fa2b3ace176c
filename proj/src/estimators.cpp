#include "lomax/estimators.hpp"

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

// (1/c) * integral_0^c db / (b + T) = ln(1 + c/T) / c
double mean_inverse_rate(double c, double t_stat)
{
    return std::log1p(c / t_stat) / c;
}

} // namespace

std::string_view to_string(LossKind loss) noexcept
{
    switch (loss) {
    case LossKind::SEL: return "sel";
    case LossKind::KL: return "kl";
    case LossKind::EL: return "el";
    }
    return "?";
}

double& PerLoss::operator[](LossKind loss) noexcept
{
    switch (loss) {
    case LossKind::SEL: return sel;
    case LossKind::KL: return kl;
    case LossKind::EL: break;
    }
    return el;
}

double PerLoss::operator[](LossKind loss) const noexcept
{
    return const_cast<PerLoss&>(*this)[loss];
}

GammaHyper::GammaHyper(double a, double b) : a_(a), b_(b)
{
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("hyperparameter a must lie in (0, 1)");
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::domain_error("hyperparameter b must be finite and positive");
}

HyperBound::HyperBound(double c) : c_(c)
{
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::domain_error("hyperprior bound c must be finite and positive");
}

double mle(std::size_t n, double t_stat)
{
    require_data(n, t_stat);
    return static_cast<double>(n) / t_stat;
}

double bayes(LossKind loss, const GammaHyper& hyper, std::size_t n, double t_stat)
{
    require_data(n, t_stat);
    const double shape = hyper.a() + static_cast<double>(n);
    const double rate = hyper.b() + t_stat;
    switch (loss) {
    case LossKind::SEL: return shape / rate;
    case LossKind::KL: return std::sqrt(shape * (shape - 1.0)) / rate;
    case LossKind::EL: return (shape - 1.0) / rate;
    }
    throw std::logic_error("unknown loss");
}

double ebayes(LossKind loss, const HyperBound& bound, std::size_t n, double t_stat)
{
    require_data(n, t_stat);
    const double nn = static_cast<double>(n);
    const double rate_term = mean_inverse_rate(bound.c(), t_stat);
    switch (loss) {
    case LossKind::SEL: return (2.0 * nn + 1.0) / 2.0 * rate_term;
    case LossKind::KL: return kl_integral(n) * rate_term;
    case LossKind::EL: return (2.0 * nn - 1.0) / 2.0 * rate_term;
    }
    throw std::logic_error("unknown loss");
}

double kl_integral(std::size_t n)
{
    if (n < 1)
        throw std::domain_error("kl_integral needs n >= 1");
    const double nn = static_cast<double>(n);
    // a = s^2 removes the sqrt(a) endpoint behaviour at n = 1.
    return GaussLegendre64::instance().integrate_unit([nn](double s) {
        const double a = s * s;
        return 2.0 * s * std::sqrt((a + nn) * (a + nn - 1.0));
    });
}

EstimateReport make_report(std::size_t n, double t_stat, const HyperBound& bound)
{
    EstimateReport r;
    r.mle = mle(n, t_stat);
    r.n = n;
    r.t_stat = t_stat;
    r.c = bound.c();
    for (LossKind loss : kAllLosses) {
        r.eb[loss] = ebayes(loss, bound, n, t_stat);
        r.emse[loss] = emse(loss, bound, n, t_stat);
    }
    return r;
}

} // namespace lomax
