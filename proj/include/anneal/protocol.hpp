#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace anneal {

enum class ProtocolKind { LinearRamp, NearOptimal, Custom };

[[nodiscard]] std::string_view to_string(ProtocolKind kind) noexcept;

inline constexpr std::size_t kDefaultGridPoints = 1001;

/// Monotone driving schedule g(t) on [0, tau], sampled on a grid.
///
/// LinearRamp and NearOptimal are affine and also carry their closed form,
/// so work functionals can integrate the exact path instead of the samples.
/// The process itself always runs from g = 0 to g = 1; a protocol whose
/// first or last sample differs from those values has a step there.
class Protocol {
public:
    /// Piecewise-linear protocol through (grid[i], values[i]). Throws
    /// std::invalid_argument unless grid starts at 0 and strictly increases,
    /// and values are nondecreasing within [0, 1].
    static Protocol custom(std::vector<double> grid, std::vector<double> values);

    [[nodiscard]] ProtocolKind kind() const noexcept { return kind_; }
    [[nodiscard]] double tau() const noexcept { return grid_.back(); }
    [[nodiscard]] std::span<const double> grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    /// Waiting time the NearOptimal protocol was built for.
    [[nodiscard]] std::optional<double> waiting_time() const noexcept { return waiting_time_; }

    [[nodiscard]] bool is_affine() const noexcept { return kind_ != ProtocolKind::Custom; }

    /// g(0+) and g(tau-); closed form for affine kinds.
    [[nodiscard]] double start_value() const noexcept;
    [[nodiscard]] double end_value() const noexcept;

    /// g(t) for t in [0, tau]: closed form for affine kinds, linear
    /// interpolation of the samples otherwise.
    [[nodiscard]] double value_at(double t) const;

private:
    friend Protocol linear_ramp(double, std::size_t);
    friend Protocol near_optimal(double, double, std::size_t);

    Protocol(ProtocolKind kind, std::vector<double> grid, std::vector<double> values,
             std::optional<double> waiting_time);

    ProtocolKind kind_;
    std::vector<double> grid_;
    std::vector<double> values_;
    std::optional<double> waiting_time_;
};

/// g(t) = t / tau on a uniform grid. std::domain_error for tau <= 0,
/// std::invalid_argument for fewer than 2 grid points.
[[nodiscard]] Protocol linear_ramp(double tau, std::size_t grid_points = kDefaultGridPoints);

/// Continuous linear part of the universal optimal protocol,
/// g*(t) = (t + tau_w) / (tau + 2 tau_w). Reduces to linear_ramp at tau_w = 0.
[[nodiscard]] Protocol near_optimal(double tau, double waiting_time,
                                    std::size_t grid_points = kDefaultGridPoints);

/// True iff g(tau/2) = 1/2 and g(t) + g(tau - t) = 1 at every node, within 1e-12.
[[nodiscard]] bool midpoint_symmetry_check(const Protocol &p);

/// `t,g` CSV, one row per node, 17 significant digits.
void write_csv(std::ostream &out, const Protocol &p, std::string_view units_line);

} // namespace anneal
