#pragma once

// Independent evaluation of the work functionals by direct quadrature of
// their defining integrals.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "anneal/chain.hpp"
#include "anneal/kernel.hpp"
#include "anneal/protocol.hpp"
#include "oracle/quadrature.hpp"

namespace oracle {

inline double max_omega(const anneal::ModeDecomposition &modes)
{
    double w = 0.0;
    for (const auto &m : modes.modes()) {
        w = std::max(w, m.omega);
    }
    return w;
}

/// Kernel rebuilt from the modes with plain std::cos / std::sin(x)/x.
inline double kernel_value(const anneal::ModeDecomposition &modes, anneal::KernelKind kind, double u)
{
    long double sum = 0.0L;
    for (const auto &m : modes.modes()) {
        const double x = m.omega * u;
        if (kind == anneal::KernelKind::Conventional) {
            sum += m.amplitude * std::cos(x);
        } else {
            sum += m.amplitude * (x == 0.0 ? 1.0 : std::sin(x) / x);
        }
    }
    return static_cast<double>(sum);
}

/// Excess work of an affine protocol (ramp or near-optimal) on the ordered
/// domain t' < t:
///   dl^2 int_0^tau dt int_0^t dt' K(t - t') g'(t) g'(t'),
/// with g' = c on (0, tau) plus steps j0 at t = 0 and j1 at t = tau. The
/// smooth part is integrated by nested adaptive quadrature in lag
/// coordinates (u = t - t' outside, t' inside), which keeps the long
/// cancelling drives above the rounding floor. The step parts reduce to
/// one-dimensional quadratures and point values.
inline double excess_work_quadrature(const anneal::ModeDecomposition &modes, anneal::KernelKind kind,
                                     const anneal::Protocol &p, double delta_lambda)
{
    const double tau = p.tau();
    const auto values = p.values();
    const double j0 = values.front();
    const double j1 = 1.0 - values.back();
    const double c = (values.back() - values.front()) / tau;
    const double wmax = max_omega(modes);
    auto K = [&](double u) { return kernel_value(modes, kind, u); };
    auto rate = [&](double) { return c; };

    const double scale = std::abs(K(0.0));
    const double smooth = integrate(
        [&](double u) {
            const double along = integrate([&](double tp) { return rate(tp + u) * rate(tp); }, 0.0, tau - u);
            return K(u) * along;
        },
        0.0, tau, 1e-14, 1e-16 * scale * tau, panels_for(wmax, tau));
    const double from_start = integrate(K, 0.0, tau, 1e-14, 1e-300, panels_for(wmax, tau));
    const double from_end = integrate([&](double t) { return K(tau - t); }, 0.0, tau, 1e-14, 1e-300,
                                      panels_for(wmax, tau));
    const double point = 0.5 * (j0 * j0 + j1 * j1) * K(0.0) + j0 * j1 * K(tau);
    return delta_lambda * delta_lambda * (smooth + c * j0 * from_start + c * j1 * from_end + point);
}

/// d/du of the time-averaged kernel, from the modes: A w (x cos x - sin x) / x^2.
inline double psi_bar_rate(const anneal::ModeDecomposition &modes, double u)
{
    long double sum = 0.0L;
    for (const auto &m : modes.modes()) {
        const double x = m.omega * u;
        double d;
        if (std::abs(x) < 1e-3) {
            d = -x / 3.0 + x * x * x / 30.0;
        } else {
            d = (x * std::cos(x) - std::sin(x)) / (x * x);
        }
        sum += m.amplitude * m.omega * d;
    }
    return static_cast<double>(sum);
}

/// Boundary-term optimal work
/// (dl^2/2) [psi_bar(0) + int_0^tau psi_bar'(tau - t) g*(t) dt]
/// with the integral done by adaptive quadrature.
inline double optimal_work_quadrature(const anneal::ModeDecomposition &modes, double tau, double delta_lambda,
                                      double waiting_time)
{
    long double psi0 = 0.0L;
    for (const auto &m : modes.modes()) {
        psi0 += m.amplitude;
    }
    const double denom = tau + 2.0 * waiting_time;
    const double integral = integrate(
        [&](double t) { return psi_bar_rate(modes, tau - t) * (t + waiting_time) / denom; }, 0.0, tau, 1e-12,
        1e-300, panels_for(max_omega(modes), tau));
    return 0.5 * delta_lambda * delta_lambda * (static_cast<double>(psi0) + integral);
}

/// Waiting time from the explicit Ising epsilon-sum ratio
/// [sum pi hbar sin^2 / eps^4] / [sum 4 sin^2 / eps^3], in long double.
inline double ising_waiting_time(double J, double gamma0, long n_spins, double hbar)
{
    long double num = 0.0L;
    long double den = 0.0L;
    const long double pi = std::numbers::pi_v<long double>;
    for (long n = 1; n <= n_spins / 2; ++n) {
        const long double theta = static_cast<long double>(2 * n - 1) * pi / static_cast<long double>(n_spins);
        const long double half = std::sin(theta / 2);
        const long double gap = static_cast<long double>(J) - gamma0;
        const long double eps = 2 * std::sqrt(gap * gap + 4.0L * J * gamma0 * half * half);
        const long double s2 = std::sin(theta) * std::sin(theta);
        num += pi * hbar * s2 / (eps * eps * eps * eps);
        den += 4.0L * s2 / (eps * eps * eps);
    }
    return static_cast<double>(num / den);
}

/// Continuum limit of the same ratio: mode sums replaced by integrals over
/// theta in [0, pi], with breakpoints resolving the near-critical peak.
inline double continuum_waiting_time(double J, double gamma0, double hbar)
{
    const double gap = J - gamma0;
    auto eps = [&](double theta) {
        const double half = std::sin(0.5 * theta);
        return 2.0 * std::sqrt(gap * gap + 4.0 * J * gamma0 * half * half);
    };
    auto num = [&](double th) {
        const double e = eps(th);
        const double s = std::sin(th);
        return std::numbers::pi * hbar * s * s / (e * e * e * e);
    };
    auto den = [&](double th) {
        const double e = eps(th);
        const double s = std::sin(th);
        return 4.0 * s * s / (e * e * e);
    };
    const double d = std::abs(gap);
    std::vector<double> cuts{0.0};
    for (double f : {0.1, 1.0, 10.0, 100.0}) {
        if (f * d < std::numbers::pi && f * d > 0) {
            cuts.push_back(f * d);
        }
    }
    cuts.push_back(std::numbers::pi);
    double n = 0.0;
    double q = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        n += integrate(num, cuts[i - 1], cuts[i], 1e-13, 1e-300, 4);
        q += integrate(den, cuts[i - 1], cuts[i], 1e-13, 1e-300, 4);
    }
    return n / q;
}

/// Least-squares slope of log y against log x.
inline double log_log_slope(const std::vector<double> &x, const std::vector<double> &y)
{
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
        sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    }
    return sxy / sxx;
}

/// Sine integral by its Taylor series in long double, summed to convergence.
inline long double sine_integral_series(long double x)
{
    long double term = x;
    long double sum = x;
    for (int k = 1; k < 400; ++k) {
        term *= -x * x / ((2.0L * k) * (2.0L * k + 1));
        const long double add = term / (2 * k + 1);
        sum += add;
        if (std::abs(add) < 1e-22L * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

} // namespace oracle
