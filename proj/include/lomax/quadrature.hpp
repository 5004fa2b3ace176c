#pragma once

#include <array>
#include <cstddef>

namespace lomax {

/**
 * Fixed-order Gauss-Legendre rule on [0, 1].
 *
 * Nodes are the roots of P_N mapped from [-1, 1]; they are computed once by
 * Newton iteration on the three-term recurrence and reused by every call.
 * For an integrand analytic on a neighbourhood of [0, 1] the error decays
 * geometrically in N, so N = 64 is at round-off for the smooth integrands
 * used by the estimators.
 */
template <std::size_t N>
class GaussLegendre {
public:
    static const GaussLegendre& instance()
    {
        static const GaussLegendre rule;
        return rule;
    }

    template <class F>
    double integrate_unit(F&& f) const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            sum += weights_[i] * f(nodes_[i]);
        return sum;
    }

    const std::array<double, N>& nodes() const noexcept { return nodes_; }
    const std::array<double, N>& weights() const noexcept { return weights_; }

private:
    GaussLegendre();

    std::array<double, N> nodes_{};
    std::array<double, N> weights_{};
};

extern template class GaussLegendre<64>;

using GaussLegendre64 = GaussLegendre<64>;

} // namespace lomax
