#pragma once

// Serial reference implementations. They share the per-mode arithmetic with
// the OpenMP drivers and accumulate in the same order, so results agree bit
// for bit; tests and the benchmark compare against them.

#include "anneal/chain.hpp"
#include "anneal/kernel.hpp"
#include "anneal/kz.hpp"
#include "anneal/protocol.hpp"

namespace anneal::reference {

[[nodiscard]] double psi(const ModeDecomposition &modes, double t);
[[nodiscard]] double psi_bar(const ModeDecomposition &modes, double t);
[[nodiscard]] double response_function(const ModeDecomposition &modes, double t);
[[nodiscard]] double laplace(const ModeDecomposition &modes, KernelKind kind, double s);
[[nodiscard]] double waiting_time(const ModeDecomposition &modes, KernelKind kind);
[[nodiscard]] double excess_work(const ModeDecomposition &modes, KernelKind kind, const Protocol &p,
                                 double delta_lambda);
[[nodiscard]] double optimal_ta_excess_work(const ModeDecomposition &modes, double tau, double delta_lambda,
                                            double waiting_time);
[[nodiscard]] SweepResult sweep_waiting_time(double J, std::span<const double> deltas, std::int64_t n_spins,
                                             double hbar = 1.0);

} // namespace anneal::reference
