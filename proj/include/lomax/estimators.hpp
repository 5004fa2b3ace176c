#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace lomax {

/// Loss function under which a Bayes estimator is optimal.
enum class LossKind {
    SEL,  ///< squared error (alpha - d)^2
    KL,   ///< K-loss (sqrt(alpha/d) - sqrt(d/alpha))^2
    EL,   ///< entropy loss d/alpha - ln(d/alpha) - 1
};

inline constexpr std::array<LossKind, 3> kAllLosses{LossKind::SEL, LossKind::KL, LossKind::EL};

std::string_view to_string(LossKind loss) noexcept;

/// One value per loss function.
struct PerLoss {
    double sel = 0.0;
    double kl = 0.0;
    double el = 0.0;

    double& operator[](LossKind loss) noexcept;
    double operator[](LossKind loss) const noexcept;
};

/// Gamma(a, rate b) prior hyperparameters; 0 < a < 1 keeps the prior decreasing.
class GammaHyper {
public:
    GammaHyper(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

private:
    double a_;
    double b_;
};

/// Upper bound c of the uniform hyperprior on (a, b) over (0,1) x (0,c).
class HyperBound {
public:
    explicit HyperBound(double c);

    double c() const noexcept { return c_; }

private:
    double c_;
};

/// n / T.
double mle(std::size_t n, double t_stat);

/// Bayes estimator of alpha for fixed hyperparameters, given (n, T).
double bayes(LossKind loss, const GammaHyper& hyper, std::size_t n, double t_stat);

/// Bayes estimator averaged over the uniform hyperprior bounded by c.
double ebayes(LossKind loss, const HyperBound& bound, std::size_t n, double t_stat);

/// Integral over a in [0, 1] of sqrt((a + n)(a + n - 1)).
double kl_integral(std::size_t n);

/// E-Bayes estimates, their E-MSEs and the MLE for one dataset and one c.
struct EstimateReport {
    double mle = 0.0;
    PerLoss eb;
    PerLoss emse;
    std::size_t n = 0;
    double t_stat = 0.0;
    double c = 0.0;
};

EstimateReport make_report(std::size_t n, double t_stat, const HyperBound& bound);

} // namespace lomax
