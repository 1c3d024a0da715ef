#include "anneal/work.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "anneal/detail/mode_terms.hpp"
#include "anneal/detail/parallel.hpp"
#include "anneal/detail/work_terms.hpp"
#include "anneal/special.hpp"

namespace anneal {

namespace detail {

DrivePath make_drive_path(const Protocol &p)
{
    DrivePath path;
    path.tau = p.tau();
    path.step_start = p.start_value();
    path.step_end = 1.0 - p.end_value();
    if (p.is_affine()) {
        const double slope = (p.end_value() - p.start_value()) / path.tau;
        if (slope != 0.0) {
            path.segments.push_back({0.0, path.tau, slope});
        }
        return path;
    }
    const auto grid = p.grid();
    const auto values = p.values();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double rise = values[i] - values[i - 1];
        if (rise != 0.0) {
            path.segments.push_back({grid[i - 1], grid[i], rise / (grid[i] - grid[i - 1])});
        }
    }
    return path;
}

double cosine_work_term(const Mode &m, const DrivePath &path) noexcept
{
    using complex = std::complex<double>;
    const double w = m.omega;
    complex z = path.step_start + path.step_end * std::polar(1.0, w * path.tau);
    for (const auto &seg : path.segments) {
        // integral of e^{i w t} over [a, b] = e^{i w (a+b)/2} * 2 sin(w (b-a)/2) / w
        const double half = 0.5 * (seg.end - seg.start);
        const double mid = 0.5 * (seg.end + seg.start);
        z += seg.slope * (2.0 * std::sin(w * half) / w) * std::polar(1.0, w * mid);
    }
    return m.amplitude * std::norm(z);
}

namespace {

// Primitive of sinc(w u): Si(w x) / w.
double sinc_primitive(double w, double x) noexcept { return sine_integral(w * x) / w; }

// Even second primitive of sinc(w u) with F(0) = 0:
// F(x) = x Si(w x) / w - 2 sin^2(w x / 2) / w^2.
double sinc_second_primitive(double w, double x) noexcept
{
    const double s = std::sin(0.5 * w * x);
    return x * sine_integral(w * x) / w - 2.0 * s * s / (w * w);
}

} // namespace

double sinc_work_term(const Mode &m, const DrivePath &path) noexcept
{
    const double w = m.omega;
    const double tau = path.tau;
    const double j0 = path.step_start;
    const double j1 = path.step_end;

    double total = j0 * j0 + j1 * j1 + 2.0 * j0 * j1 * sinc(w * tau);

    double cross = 0.0;
    for (const auto &seg : path.segments) {
        const double from_start = sinc_primitive(w, seg.end) - sinc_primitive(w, seg.start);
        const double from_end = sinc_primitive(w, tau - seg.start) - sinc_primitive(w, tau - seg.end);
        cross += seg.slope * (j0 * from_start + j1 * from_end);
    }
    total += 2.0 * cross;

    double smooth = 0.0;
    for (const auto &a : path.segments) {
        for (const auto &b : path.segments) {
            const double block = sinc_second_primitive(w, a.end - b.start) - sinc_second_primitive(w, a.end - b.end) -
                                 sinc_second_primitive(w, a.start - b.start) +
                                 sinc_second_primitive(w, a.start - b.end);
            smooth += a.slope * b.slope * block;
        }
    }
    total += smooth;
    return m.amplitude * total;
}

} // namespace detail

namespace {

void check_work_inputs(const ModeDecomposition &modes, double delta_lambda)
{
    if (modes.empty()) {
        throw std::domain_error("work functional: empty mode decomposition");
    }
    if (!std::isfinite(delta_lambda)) {
        throw std::domain_error("work functional: delta_lambda must be finite");
    }
}

void check_tau(double tau)
{
    if (!(tau > 0) || !std::isfinite(tau)) {
        throw std::domain_error("work functional: tau must be finite and positive");
    }
}

} // namespace

double excess_work(const ModeDecomposition &modes, KernelKind kind, const Protocol &p, double delta_lambda)
{
    check_work_inputs(modes, delta_lambda);
    check_tau(p.tau());
    const auto path = detail::make_drive_path(p);
    const double sum =
        kind == KernelKind::Conventional
            ? detail::parallel_mode_sum(modes.modes(),
                                        [&path](const Mode &m) { return detail::cosine_work_term(m, path); })
            : detail::parallel_mode_sum(modes.modes(),
                                        [&path](const Mode &m) { return detail::sinc_work_term(m, path); });
    return 0.5 * delta_lambda * delta_lambda * sum;
}

double optimal_ta_excess_work(const ModeDecomposition &modes, double tau, double delta_lambda, double waiting_time)
{
    check_work_inputs(modes, delta_lambda);
    check_tau(tau);
    if (!(waiting_time >= 0) || !std::isfinite(waiting_time)) {
        throw std::domain_error("optimal work: waiting time must be finite and non-negative");
    }
    const double sum = detail::parallel_mode_sum(
        modes.modes(), [tau, waiting_time](const Mode &m) { return detail::optimal_ta_term(m, tau, waiting_time); });
    return 0.5 * delta_lambda * delta_lambda * sum;
}

double optimal_ta_excess_work(const ModeDecomposition &modes, double tau, double delta_lambda)
{
    return optimal_ta_excess_work(modes, tau, delta_lambda, waiting_time(modes, KernelKind::TimeAveraged));
}

double optimal_variance(const ModeDecomposition &modes, double tau, double delta_lambda, double beta)
{
    if (!std::isfinite(beta) || !(beta > 0)) {
        throw std::domain_error(
            "optimal variance: beta must be finite and positive; at T = 0 (beta = inf) the optimal "
            "variance of the time-averaged work diverges, since it is proportional to beta");
    }
    return 0.5 * beta * optimal_ta_excess_work(modes, tau, delta_lambda);
}

double sudden_bound(const ModeDecomposition &modes, double delta_lambda) noexcept
{
    return 0.5 * delta_lambda * delta_lambda * modes.psi_zero();
}

WorkReport make_work_report(const ModeDecomposition &modes, const Protocol &p, double delta_lambda,
                            std::optional<double> beta)
{
    WorkReport report;
    report.tau = p.tau();
    report.protocol_kind = p.kind();
    report.w_ex = excess_work(modes, KernelKind::Conventional, p, delta_lambda);
    report.w_ex_ta = excess_work(modes, KernelKind::TimeAveraged, p, delta_lambda);
    if (beta) {
        report.beta = beta;
        report.variance = optimal_variance(modes, p.tau(), delta_lambda, *beta);
    }
    return report;
}

} // namespace anneal
