#pragma once

// Per-mode summands shared by the OpenMP drivers and the serial reference.

#include <cmath>
#include <numbers>

#include "anneal/chain.hpp"
#include "anneal/special.hpp"

namespace anneal::detail {

inline double psi_term(const Mode &m, double t) noexcept { return m.amplitude * std::cos(m.omega * t); }

inline double psi_bar_term(const Mode &m, double t) noexcept { return m.amplitude * sinc(m.omega * t); }

inline double response_term(const Mode &m, double t) noexcept
{
    return m.amplitude * m.omega * std::sin(m.omega * t);
}

/// d/dx sinc(x) = (x cos x - sin x) / x^2, series near 0.
inline double sinc_derivative(double x) noexcept
{
    if (std::abs(x) < 0.1) {
        const double x2 = x * x;
        // -x/3 + x^3/30 - x^5/840 + x^7/45360 - x^9/3991680
        return x * (-1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 * (-1.0 / 840.0 + x2 * (1.0 / 45360.0 - x2 / 3991680.0))));
    }
    return (x * std::cos(x) - std::sin(x)) / (x * x);
}

inline double psi_bar_derivative_term(const Mode &m, double t) noexcept
{
    return m.amplitude * m.omega * sinc_derivative(m.omega * t);
}

inline double laplace_conventional_term(const Mode &m, double s) noexcept
{
    return m.amplitude * s / (s * s + m.omega * m.omega);
}

inline double laplace_time_averaged_term(const Mode &m, double s) noexcept
{
    return m.amplitude * std::atan(m.omega / s) / m.omega;
}

inline double waiting_time_numerator_term(const Mode &m) noexcept
{
    return m.amplitude * std::numbers::pi / (2.0 * m.omega);
}

inline double amplitude_term(const Mode &m) noexcept { return m.amplitude; }

/// Per-mode bracket of the boundary-term optimal work for
/// g*(t) = (t + tau_w) / (tau + 2 tau_w):
/// A [g*(0) (1 + sinc(w tau)) + Si(w tau) / (w (tau + 2 tau_w))].
inline double optimal_ta_term(const Mode &m, double tau, double waiting_time) noexcept
{
    const double denom = tau + 2.0 * waiting_time;
    const double x = m.omega * tau;
    return m.amplitude * ((waiting_time / denom) * (1.0 + sinc(x)) + sine_integral(x) / (m.omega * denom));
}

} // namespace anneal::detail
