#pragma once

#include <span>

namespace anneal {

/// Neumaier-compensated accumulator. The rounding error of the running sum is
/// carried separately, so the result error does not grow with the term count.
class CompensatedSum {
public:
    constexpr CompensatedSum() noexcept = default;
    constexpr explicit CompensatedSum(double initial) noexcept : sum_(initial) {}

    constexpr void add(double x) noexcept
    {
        const double t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    constexpr CompensatedSum &operator+=(double x) noexcept
    {
        add(x);
        return *this;
    }

    [[nodiscard]] constexpr double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Compensated sum of `terms` in index order.
[[nodiscard]] double compensated_sum(std::span<const double> terms) noexcept;

} // namespace anneal
