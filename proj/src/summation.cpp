#include "anneal/summation.hpp"

namespace anneal {

double compensated_sum(std::span<const double> terms) noexcept
{
    CompensatedSum sum;
    for (double x : terms) {
        sum.add(x);
    }
    return sum.value();
}

} // namespace anneal
