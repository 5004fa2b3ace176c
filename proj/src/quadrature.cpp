#include "lomax/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace lomax {

template <std::size_t N>
GaussLegendre<N>::GaussLegendre()
{
    constexpr int n = static_cast<int>(N);
    const std::size_t half = (N + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi initial guess for the i-th root (descending order on [-1, 1]).
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged root for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);

        // Map [-1, 1] -> [0, 1]; the Jacobian 1/2 goes into the weight.
        nodes_[i] = 0.5 * (1.0 - x);
        nodes_[N - 1 - i] = 0.5 * (1.0 + x);
        weights_[i] = 0.5 * w;
        weights_[N - 1 - i] = 0.5 * w;
    }
}

template class GaussLegendre<64>;

} // namespace lomax
