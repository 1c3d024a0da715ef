#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace anneal {

struct SweepPoint {
    double delta;          // |J - gamma0|
    std::int64_t n_spins;
    double tau_w;
};

struct PowerLawFit {
    double exponent;       // slope of log tau_w against log delta
    double intercept;
    double r_squared;
    double delta_min;
    double delta_max;
    std::size_t n_points;
};

struct SweepResult {
    std::vector<SweepPoint> points;   // delta descending
    std::optional<PowerLawFit> fit;
};

struct FitWindow {
    double delta_min;
    double delta_max;
};

/// Raised when the finite-size gap is not small against every delta in the fit window.
class FiniteSizeContamination : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultSaturationFactor = 10.0;

/// Time-averaged waiting time at gamma0 = J - delta for each delta in [0, J].
[[nodiscard]] SweepResult sweep_waiting_time(double J, std::span<const double> deltas, std::int64_t n_spins,
                                             double hbar = 1.0);

/// Least-squares line through (log delta, log tau_w) over the points inside
/// `window`. Requires at least 3 such points with delta > 0, and
/// finite_size_gap(J, N) * saturation_factor < delta for each of them
/// (FiniteSizeContamination otherwise). A saturation_factor <= 0 disables
/// the finite-size check.
[[nodiscard]] SweepResult fit_power_law(SweepResult result, FitWindow window, double J = 1.0,
                                        double saturation_factor = kDefaultSaturationFactor);

/// `count` log-spaced values from lo to hi inclusive.
[[nodiscard]] std::vector<double> log_spaced(double lo, double hi, std::size_t count);

} // namespace anneal
