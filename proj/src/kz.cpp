#include "anneal/kz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "anneal/chain.hpp"
#include "anneal/kernel.hpp"
#include "anneal/summation.hpp"

namespace anneal {

namespace {

ChainParams sweep_chain(double J, double delta, std::int64_t n_spins, double hbar)
{
    ChainParams params;
    params.J = J;
    params.gamma0 = J - delta;
    params.delta_gamma = 0.0;
    params.n_spins = n_spins;
    params.hbar = hbar;
    return params;
}

void check_sweep(double J, std::span<const double> deltas, std::int64_t n_spins, double hbar)
{
    sweep_chain(J, 0.0, n_spins, hbar).validate();
    for (double d : deltas) {
        if (!(d >= 0 && d <= J)) {
            throw std::domain_error("sweep delta must lie in [0, J] so that gamma0 = J - delta >= 0");
        }
    }
}

void sort_descending(std::vector<SweepPoint> &points)
{
    std::stable_sort(points.begin(), points.end(),
                     [](const SweepPoint &a, const SweepPoint &b) { return a.delta > b.delta; });
}

} // namespace

SweepResult sweep_waiting_time(double J, std::span<const double> deltas, std::int64_t n_spins, double hbar)
{
    check_sweep(J, deltas, n_spins, hbar);
    SweepResult result;
    result.points.resize(deltas.size());
    const auto n = static_cast<std::ptrdiff_t>(deltas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double delta = deltas[static_cast<std::size_t>(i)];
        const auto modes = build_modes(sweep_chain(J, delta, n_spins, hbar));
        result.points[static_cast<std::size_t>(i)] = {delta, n_spins,
                                                      waiting_time(modes, KernelKind::TimeAveraged)};
    }
    sort_descending(result.points);
    return result;
}

SweepResult fit_power_law(SweepResult result, FitWindow window, double J, double saturation_factor)
{
    sort_descending(result.points);
    const double lo = window.delta_min * (1.0 - 1e-12);
    const double hi = window.delta_max * (1.0 + 1e-12);

    std::vector<const SweepPoint *> selected;
    for (const auto &p : result.points) {
        if (p.delta >= lo && p.delta <= hi) {
            selected.push_back(&p);
        }
    }
    if (selected.size() < 3) {
        throw std::invalid_argument("power-law fit needs at least 3 points in the window");
    }
    for (const auto *p : selected) {
        if (!(p->delta > 0) || !(p->tau_w > 0)) {
            throw std::invalid_argument("power-law fit needs delta > 0 and tau_w > 0 in the window");
        }
        if (saturation_factor > 0) {
            const double gap = finite_size_gap(J, p->n_spins);
            if (!(gap * saturation_factor < p->delta)) {
                std::ostringstream msg;
                msg << "finite-size contaminated window: gap 4J sin(pi/2N) = " << gap << " for N = " << p->n_spins
                    << " is not below delta/" << saturation_factor << " at delta = " << p->delta;
                throw FiniteSizeContamination(msg.str());
            }
        }
    }

    const auto count = static_cast<double>(selected.size());
    CompensatedSum sx;
    CompensatedSum sy;
    for (const auto *p : selected) {
        sx.add(std::log(p->delta));
        sy.add(std::log(p->tau_w));
    }
    const double mx = sx.value() / count;
    const double my = sy.value() / count;
    CompensatedSum sxx;
    CompensatedSum sxy;
    CompensatedSum syy;
    for (const auto *p : selected) {
        const double dx = std::log(p->delta) - mx;
        const double dy = std::log(p->tau_w) - my;
        sxx.add(dx * dx);
        sxy.add(dx * dy);
        syy.add(dy * dy);
    }
    if (!(sxx.value() > 0)) {
        throw std::invalid_argument("power-law fit needs at least two distinct deltas");
    }
    const double slope = sxy.value() / sxx.value();
    double r2 = 1.0;
    if (syy.value() > 0) {
        r2 = sxy.value() * sxy.value() / (sxx.value() * syy.value());
    }
    r2 = std::clamp(r2, 0.0, 1.0);

    result.fit = PowerLawFit{slope,
                             my - slope * mx,
                             r2,
                             selected.back()->delta,
                             selected.front()->delta,
                             selected.size()};
    return result;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count)
{
    if (!(lo > 0) || !(hi >= lo) || count == 0) {
        throw std::invalid_argument("log_spaced needs 0 < lo <= hi and count >= 1");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<double> out(count);
    const double a = std::log(lo);
    const double step = (std::log(hi) - a) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::exp(a + step * static_cast<double>(i));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

} // namespace anneal
