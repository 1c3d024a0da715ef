#include "anneal/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "anneal/csv.hpp"

namespace anneal {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

std::vector<double> uniform_grid(double tau, std::size_t points)
{
    std::vector<double> grid(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = tau * (static_cast<double>(i) / last);
    }
    grid.back() = tau;
    return grid;
}

void check_tau(double tau, std::size_t grid_points)
{
    if (!(tau > 0) || !std::isfinite(tau)) {
        throw std::domain_error("switching time tau must be finite and positive");
    }
    if (grid_points < 2) {
        throw std::invalid_argument("a protocol needs at least 2 grid points");
    }
}

} // namespace

std::string_view to_string(ProtocolKind kind) noexcept
{
    switch (kind) {
    case ProtocolKind::LinearRamp:
        return "ramp";
    case ProtocolKind::NearOptimal:
        return "near-optimal";
    case ProtocolKind::Custom:
        return "custom";
    }
    return "unknown";
}

Protocol::Protocol(ProtocolKind kind, std::vector<double> grid, std::vector<double> values,
                   std::optional<double> waiting_time)
    : kind_(kind), grid_(std::move(grid)), values_(std::move(values)), waiting_time_(waiting_time)
{
}

Protocol Protocol::custom(std::vector<double> grid, std::vector<double> values)
{
    if (grid.size() < 2 || grid.size() != values.size()) {
        throw std::invalid_argument("protocol grid and values must have equal length >= 2");
    }
    if (grid.front() != 0.0) {
        throw std::invalid_argument("protocol grid must start at t = 0");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1]) || !std::isfinite(grid[i])) {
            throw std::invalid_argument("protocol grid must be finite and strictly increasing");
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
            throw std::invalid_argument("protocol values must lie in [0, 1]");
        }
        if (i > 0 && values[i] < values[i - 1]) {
            throw std::invalid_argument("protocol values must be nondecreasing");
        }
    }
    return Protocol(ProtocolKind::Custom, std::move(grid), std::move(values), std::nullopt);
}

double Protocol::start_value() const noexcept
{
    switch (kind_) {
    case ProtocolKind::LinearRamp:
        return 0.0;
    case ProtocolKind::NearOptimal:
        return *waiting_time_ / (tau() + 2.0 * *waiting_time_);
    case ProtocolKind::Custom:
        break;
    }
    return values_.front();
}

double Protocol::end_value() const noexcept
{
    switch (kind_) {
    case ProtocolKind::LinearRamp:
        return 1.0;
    case ProtocolKind::NearOptimal:
        return (tau() + *waiting_time_) / (tau() + 2.0 * *waiting_time_);
    case ProtocolKind::Custom:
        break;
    }
    return values_.back();
}

double Protocol::value_at(double t) const
{
    if (!(t >= 0.0 && t <= tau())) {
        throw std::out_of_range("protocol evaluated outside [0, tau]");
    }
    switch (kind_) {
    case ProtocolKind::LinearRamp:
        return t / tau();
    case ProtocolKind::NearOptimal:
        return (t + *waiting_time_) / (tau() + 2.0 * *waiting_time_);
    case ProtocolKind::Custom:
        break;
    }
    const auto upper = std::upper_bound(grid_.begin(), grid_.end(), t);
    if (upper == grid_.end()) {
        return values_.back();
    }
    const auto i = static_cast<std::size_t>(upper - grid_.begin());
    const double w = (t - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
    return values_[i - 1] + w * (values_[i] - values_[i - 1]);
}

Protocol linear_ramp(double tau, std::size_t grid_points)
{
    check_tau(tau, grid_points);
    auto grid = uniform_grid(tau, grid_points);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = grid[i] / tau;
    }
    return Protocol(ProtocolKind::LinearRamp, std::move(grid), std::move(values), std::nullopt);
}

Protocol near_optimal(double tau, double waiting_time, std::size_t grid_points)
{
    check_tau(tau, grid_points);
    if (!(waiting_time >= 0) || !std::isfinite(waiting_time)) {
        throw std::domain_error("waiting time must be finite and non-negative");
    }
    auto grid = uniform_grid(tau, grid_points);
    std::vector<double> values(grid.size());
    const double denom = tau + 2.0 * waiting_time;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = (grid[i] + waiting_time) / denom;
    }
    return Protocol(ProtocolKind::NearOptimal, std::move(grid), std::move(values), waiting_time);
}

bool midpoint_symmetry_check(const Protocol &p)
{
    const double tau = p.tau();
    if (std::abs(p.value_at(0.5 * tau) - 0.5) > kSymmetryTolerance) {
        return false;
    }
    const auto grid = p.grid();
    const auto values = p.values();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(values[i] + p.value_at(tau - grid[i]) - 1.0) > kSymmetryTolerance) {
            return false;
        }
    }
    return true;
}

void write_csv(std::ostream &out, const Protocol &p, std::string_view units_line)
{
    out << units_line << '\n' << "t,g\n";
    const auto grid = p.grid();
    const auto values = p.values();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << csv::format(grid[i]) << ',' << csv::format(values[i]) << '\n';
    }
}

} // namespace anneal
