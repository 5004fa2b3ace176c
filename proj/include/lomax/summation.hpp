#pragma once

#include <cmath>
#include <span>

namespace lomax {

/// Neumaier compensated accumulator. Terms are added in call order, so the
/// result is deterministic for a fixed input order.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) noexcept
    {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept
{
    CompensatedSum acc;
    for (double x : xs)
        acc.add(x);
    return acc.value();
}

} // namespace lomax
