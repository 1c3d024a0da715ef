#include "anneal/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "anneal/detail/mode_terms.hpp"
#include "anneal/detail/parallel.hpp"
#include "anneal/summation.hpp"

namespace anneal {

std::string_view to_string(KernelKind kind) noexcept
{
    switch (kind) {
    case KernelKind::Conventional:
        return "conventional";
    case KernelKind::TimeAveraged:
        return "time-averaged";
    }
    return "unknown";
}

double psi(const ModeDecomposition &modes, double t)
{
    return detail::parallel_mode_sum(modes.modes(), [t](const Mode &m) { return detail::psi_term(m, t); });
}

double psi_bar(const ModeDecomposition &modes, double t)
{
    return detail::parallel_mode_sum(modes.modes(), [t](const Mode &m) { return detail::psi_bar_term(m, t); });
}

double kernel(const ModeDecomposition &modes, KernelKind kind, double t)
{
    return kind == KernelKind::Conventional ? psi(modes, t) : psi_bar(modes, t);
}

double response_function(const ModeDecomposition &modes, double t)
{
    return detail::parallel_mode_sum(modes.modes(), [t](const Mode &m) { return detail::response_term(m, t); });
}

double psi_bar_derivative(const ModeDecomposition &modes, double t)
{
    return detail::parallel_mode_sum(modes.modes(),
                                     [t](const Mode &m) { return detail::psi_bar_derivative_term(m, t); });
}

double laplace(const ModeDecomposition &modes, KernelKind kind, double s)
{
    if (!(s > 0) || !std::isfinite(s)) {
        throw std::domain_error("laplace: rate s must be finite and positive");
    }
    if (kind == KernelKind::Conventional) {
        return detail::parallel_mode_sum(modes.modes(),
                                         [s](const Mode &m) { return detail::laplace_conventional_term(m, s); });
    }
    return detail::parallel_mode_sum(modes.modes(),
                                     [s](const Mode &m) { return detail::laplace_time_averaged_term(m, s); });
}

double waiting_time(const ModeDecomposition &modes, KernelKind kind)
{
    if (modes.empty()) {
        throw std::domain_error("waiting_time: empty mode decomposition");
    }
    if (kind == KernelKind::Conventional) {
        return 0.0;
    }
    const double numerator = detail::parallel_mode_sum(
        modes.modes(), [](const Mode &m) { return detail::waiting_time_numerator_term(m); });
    return numerator / modes.psi_zero();
}

namespace {

template <class Term>
std::vector<double> batch(const ModeDecomposition &modes, std::span<const double> times, const Term &term)
{
    const auto n = static_cast<std::ptrdiff_t>(times.size());
    std::vector<double> out(times.size());
    const auto span = modes.modes();
    const bool worth_it = n * static_cast<std::ptrdiff_t>(span.size()) >= detail::kParallelThreshold;
#pragma omp parallel for schedule(static) if (worth_it)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double t = times[static_cast<std::size_t>(i)];
        CompensatedSum sum;
        for (const Mode &m : span) {
            sum.add(term(m, t));
        }
        out[static_cast<std::size_t>(i)] = sum.value();
    }
    return out;
}

} // namespace

std::vector<double> psi(const ModeDecomposition &modes, std::span<const double> times)
{
    return batch(modes, times, detail::psi_term);
}

std::vector<double> psi_bar(const ModeDecomposition &modes, std::span<const double> times)
{
    return batch(modes, times, detail::psi_bar_term);
}

std::vector<double> response_function(const ModeDecomposition &modes, std::span<const double> times)
{
    return batch(modes, times, detail::response_term);
}

} // namespace anneal
