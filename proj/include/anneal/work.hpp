#pragma once

#include <optional>

#include "anneal/chain.hpp"
#include "anneal/kernel.hpp"
#include "anneal/protocol.hpp"

namespace anneal {

/// Mean excess work and optimal variance of one driving, per spin.
struct WorkReport {
    double w_ex = 0.0;
    double w_ex_ta = 0.0;
    std::optional<double> variance;
    std::optional<double> beta;
    double tau = 0.0;
    ProtocolKind protocol_kind = ProtocolKind::LinearRamp;
};

/// (dl^2 / 2) * double integral over [0, tau]^2 of K(t - t') g'(t) g'(t').
///
/// K is psi (Conventional) or psi_bar (TimeAveraged). g' includes the steps
/// from g = 0 to g(0+) and from g(tau-) to g = 1. Every piece is integrated
/// in closed form per mode: the cosine kernel through |int e^{i w t} g' dt|^2,
/// the sinc kernel through sine-integral primitives (O(segments^2) per mode
/// for custom protocols, O(1) for affine ones).
[[nodiscard]] double excess_work(const ModeDecomposition &modes, KernelKind kind, const Protocol &p,
                                 double delta_lambda);

/// Boundary-term optimal work
/// (dl^2 / 2) [psi_bar(0) + integral over [0, tau] of psi_bar'(tau - t) g*(t) dt]
/// with g* the near-optimal protocol for `waiting_time`.
[[nodiscard]] double optimal_ta_excess_work(const ModeDecomposition &modes, double tau, double delta_lambda,
                                            double waiting_time);

/// As above with waiting_time(modes, TimeAveraged).
[[nodiscard]] double optimal_ta_excess_work(const ModeDecomposition &modes, double tau, double delta_lambda);

/// (beta / 2) * optimal_ta_excess_work. Throws std::domain_error for beta
/// that is not finite and positive: at T = 0 (beta = infinity) the optimal
/// variance diverges.
[[nodiscard]] double optimal_variance(const ModeDecomposition &modes, double tau, double delta_lambda,
                                      double beta);

/// Sudden-quench value dl^2 psi(0) / 2, the supremum of both functionals.
[[nodiscard]] double sudden_bound(const ModeDecomposition &modes, double delta_lambda) noexcept;

/// Both kernels' excess work for `p`, plus the optimal variance when beta is given.
[[nodiscard]] WorkReport make_work_report(const ModeDecomposition &modes, const Protocol &p,
                                          double delta_lambda, std::optional<double> beta = std::nullopt);

} // namespace anneal
