#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "anneal/chain.hpp"
#include "anneal/summation.hpp"

namespace anneal::detail {

// Below this many modes the thread fork costs more than the sum.
inline constexpr std::ptrdiff_t kParallelThreshold = 2048;

/// Terms evaluated in parallel into a buffer, then reduced serially in index
/// order: the result is independent of the thread count.
template <class Term>
double parallel_mode_sum(std::span<const Mode> modes, const Term &term)
{
    const auto n = static_cast<std::ptrdiff_t>(modes.size());
    std::vector<double> terms(modes.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        terms[static_cast<std::size_t>(i)] = term(modes[static_cast<std::size_t>(i)]);
    }
    return compensated_sum(terms);
}

template <class Term>
double serial_mode_sum(std::span<const Mode> modes, const Term &term)
{
    CompensatedSum sum;
    for (const Mode &m : modes) {
        sum.add(term(m));
    }
    return sum.value();
}

} // namespace anneal::detail
