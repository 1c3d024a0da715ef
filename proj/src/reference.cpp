#include "anneal/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anneal/detail/mode_terms.hpp"
#include "anneal/detail/parallel.hpp"
#include "anneal/detail/work_terms.hpp"

namespace anneal::reference {

double psi(const ModeDecomposition &modes, double t)
{
    return detail::serial_mode_sum(modes.modes(), [t](const Mode &m) { return detail::psi_term(m, t); });
}

double psi_bar(const ModeDecomposition &modes, double t)
{
    return detail::serial_mode_sum(modes.modes(), [t](const Mode &m) { return detail::psi_bar_term(m, t); });
}

double response_function(const ModeDecomposition &modes, double t)
{
    return detail::serial_mode_sum(modes.modes(), [t](const Mode &m) { return detail::response_term(m, t); });
}

double laplace(const ModeDecomposition &modes, KernelKind kind, double s)
{
    if (!(s > 0) || !std::isfinite(s)) {
        throw std::domain_error("laplace: rate s must be finite and positive");
    }
    if (kind == KernelKind::Conventional) {
        return detail::serial_mode_sum(modes.modes(),
                                       [s](const Mode &m) { return detail::laplace_conventional_term(m, s); });
    }
    return detail::serial_mode_sum(modes.modes(),
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
    return detail::serial_mode_sum(modes.modes(),
                                   [](const Mode &m) { return detail::waiting_time_numerator_term(m); }) /
           modes.psi_zero();
}

double excess_work(const ModeDecomposition &modes, KernelKind kind, const Protocol &p, double delta_lambda)
{
    if (modes.empty()) {
        throw std::domain_error("work functional: empty mode decomposition");
    }
    const auto path = detail::make_drive_path(p);
    const double sum =
        kind == KernelKind::Conventional
            ? detail::serial_mode_sum(modes.modes(),
                                      [&path](const Mode &m) { return detail::cosine_work_term(m, path); })
            : detail::serial_mode_sum(modes.modes(),
                                      [&path](const Mode &m) { return detail::sinc_work_term(m, path); });
    return 0.5 * delta_lambda * delta_lambda * sum;
}

double optimal_ta_excess_work(const ModeDecomposition &modes, double tau, double delta_lambda, double waiting_time)
{
    if (modes.empty()) {
        throw std::domain_error("work functional: empty mode decomposition");
    }
    const double sum = detail::serial_mode_sum(
        modes.modes(), [tau, waiting_time](const Mode &m) { return detail::optimal_ta_term(m, tau, waiting_time); });
    return 0.5 * delta_lambda * delta_lambda * sum;
}

SweepResult sweep_waiting_time(double J, std::span<const double> deltas, std::int64_t n_spins, double hbar)
{
    SweepResult result;
    for (double delta : deltas) {
        ChainParams params{J, J - delta, 0.0, n_spins, hbar};
        const auto modes = build_modes(params);
        result.points.push_back({delta, n_spins, reference::waiting_time(modes, KernelKind::TimeAveraged)});
    }
    std::stable_sort(result.points.begin(), result.points.end(),
                     [](const SweepPoint &a, const SweepPoint &b) { return a.delta > b.delta; });
    return result;
}

} // namespace anneal::reference
