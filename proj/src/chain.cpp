#include "anneal/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "anneal/summation.hpp"

namespace anneal {

void ChainParams::validate() const
{
    if (!std::isfinite(J) || J <= 0) {
        throw std::invalid_argument("J must be finite and positive");
    }
    if (!std::isfinite(gamma0) || gamma0 < 0) {
        throw std::invalid_argument("gamma0 must be finite and non-negative");
    }
    if (!std::isfinite(delta_gamma)) {
        throw std::invalid_argument("delta_gamma must be finite");
    }
    if (!std::isfinite(hbar) || hbar <= 0) {
        throw std::invalid_argument("hbar must be finite and positive");
    }
    if (n_spins < 2) {
        throw std::invalid_argument("n_spins must be at least 2");
    }
    if (n_spins % 2 != 0) {
        throw std::invalid_argument("n_spins must be even");
    }
}

double ChainParams::driving_ratio() const noexcept
{
    if (gamma0 == 0) {
        return delta_gamma == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::abs(delta_gamma / gamma0);
}

ModeDecomposition::ModeDecomposition(std::vector<Mode> modes) : modes_(std::move(modes))
{
    for (const Mode &m : modes_) {
        if (!std::isfinite(m.amplitude) || m.amplitude < 0) {
            throw std::invalid_argument("mode amplitudes must be finite and non-negative");
        }
        if (!std::isfinite(m.omega) || m.omega <= 0) {
            throw std::invalid_argument("mode frequencies must be finite and positive");
        }
    }
    std::stable_sort(modes_.begin(), modes_.end(),
                     [](const Mode &a, const Mode &b) { return a.omega < b.omega; });
    CompensatedSum sum;
    for (const Mode &m : modes_) {
        sum.add(m.amplitude);
    }
    psi_zero_ = sum.value();
}

ModeDecomposition::ModeDecomposition(std::vector<Mode> modes, ChainParams origin)
    : ModeDecomposition(std::move(modes))
{
    origin_ = origin;
}

namespace {

double mode_angle(std::int64_t n, std::int64_t n_spins) noexcept
{
    return static_cast<double>(2 * n - 1) * std::numbers::pi / static_cast<double>(n_spins);
}

// J^2 + G^2 - 2 J G cos(theta) written as (J - G)^2 + 4 J G sin^2(theta / 2),
// which keeps full relative precision next to the critical point.
double energy_at(double J, double gamma0, double theta) noexcept
{
    const double half = std::sin(0.5 * theta);
    const double gap = J - gamma0;
    return 2.0 * std::sqrt(gap * gap + 4.0 * J * gamma0 * half * half);
}

} // namespace

double mode_energy(const ChainParams &params, std::int64_t n)
{
    params.validate();
    if (n < 1 || n > params.n_spins / 2) {
        throw std::out_of_range("mode index " + std::to_string(n) + " outside 1.." +
                                std::to_string(params.n_spins / 2));
    }
    return energy_at(params.J, params.gamma0, mode_angle(n, params.n_spins));
}

ModeDecomposition build_modes(const ChainParams &params)
{
    params.validate();
    const std::int64_t count = params.n_spins / 2;
    const double prefactor = 16.0 / static_cast<double>(params.n_spins) * params.J * params.J;
    std::vector<Mode> modes(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static) if (count >= 4096)
    for (std::int64_t i = 0; i < count; ++i) {
        const double theta = mode_angle(i + 1, params.n_spins);
        const double eps = energy_at(params.J, params.gamma0, theta);
        const double s = std::sin(theta);
        modes[static_cast<std::size_t>(i)] = Mode{prefactor * s * s / (eps * eps * eps), 2.0 * eps / params.hbar};
    }
    return ModeDecomposition(std::move(modes), params);
}

double finite_size_gap(double J, std::int64_t n_spins)
{
    if (n_spins < 2) {
        throw std::invalid_argument("n_spins must be at least 2");
    }
    return 4.0 * J * std::sin(std::numbers::pi / (2.0 * static_cast<double>(n_spins)));
}

} // namespace anneal
