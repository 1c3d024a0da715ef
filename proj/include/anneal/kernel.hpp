#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "anneal/chain.hpp"

namespace anneal {

/// Conventional kernel psi(t) or its running time average psi_bar(t).
enum class KernelKind { Conventional, TimeAveraged };

[[nodiscard]] std::string_view to_string(KernelKind kind) noexcept;

/// psi(t) = sum A_n cos(omega_n t).
[[nodiscard]] double psi(const ModeDecomposition &modes, double t);

/// psi_bar(t) = sum A_n sinc(omega_n t) = (1/t) * integral of psi over [0, t].
[[nodiscard]] double psi_bar(const ModeDecomposition &modes, double t);

/// Either kernel by tag.
[[nodiscard]] double kernel(const ModeDecomposition &modes, KernelKind kind, double t);

/// Response function phi(t) = -dpsi/dt = sum A_n omega_n sin(omega_n t).
[[nodiscard]] double response_function(const ModeDecomposition &modes, double t);

/// Time derivative of psi_bar, d/dt sum A_n sinc(omega_n t).
[[nodiscard]] double psi_bar_derivative(const ModeDecomposition &modes, double t);

/// Laplace transform at rate s > 0 (std::domain_error otherwise).
/// Conventional: sum A s / (s^2 + omega^2). TimeAveraged: sum A atan(omega/s) / omega.
[[nodiscard]] double laplace(const ModeDecomposition &modes, KernelKind kind, double s);

/// Zero-rate Laplace limit normalized by the kernel at t = 0.
///
/// Conventional: exactly 0 for any finite cosine sum. TimeAveraged:
/// [sum A pi / (2 omega)] / [sum A]. Throws std::domain_error for an empty
/// decomposition.
[[nodiscard]] double waiting_time(const ModeDecomposition &modes, KernelKind kind);

// Batch evaluation over a time grid; parallel over time points, each point
// reduced serially so the output does not depend on the thread count.
[[nodiscard]] std::vector<double> psi(const ModeDecomposition &modes, std::span<const double> times);
[[nodiscard]] std::vector<double> psi_bar(const ModeDecomposition &modes, std::span<const double> times);
[[nodiscard]] std::vector<double> response_function(const ModeDecomposition &modes,
                                                    std::span<const double> times);

} // namespace anneal
