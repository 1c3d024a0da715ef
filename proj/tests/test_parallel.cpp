#include <catch_amalgamated.hpp>

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "anneal/chain.hpp"
#include "anneal/kernel.hpp"
#include "anneal/kz.hpp"
#include "anneal/reference.hpp"
#include "anneal/work.hpp"

using namespace anneal;

namespace {

struct Snapshot {
    std::vector<double> values;
    bool operator==(const Snapshot &) const = default;
};

Snapshot evaluate_parallel(const ModeDecomposition &modes)
{
    const double tw = waiting_time(modes, KernelKind::TimeAveraged);
    Snapshot s;
    for (double t : {0.0, 0.3, 7.0, 400.0}) {
        s.values.push_back(psi(modes, t));
        s.values.push_back(psi_bar(modes, t));
        s.values.push_back(response_function(modes, t));
    }
    s.values.push_back(laplace(modes, KernelKind::Conventional, 1e-3));
    s.values.push_back(laplace(modes, KernelKind::TimeAveraged, 1e-3));
    s.values.push_back(tw);
    for (double tau : {1.0, tw, 10 * tw}) {
        for (auto kind : {KernelKind::Conventional, KernelKind::TimeAveraged}) {
            s.values.push_back(excess_work(modes, kind, near_optimal(tau, tw), 1e-5));
            s.values.push_back(excess_work(modes, kind, linear_ramp(tau), 1e-5));
        }
        s.values.push_back(optimal_ta_excess_work(modes, tau, 1e-5, tw));
    }
    return s;
}

Snapshot evaluate_reference(const ModeDecomposition &modes)
{
    namespace ref = anneal::reference;
    const double tw = ref::waiting_time(modes, KernelKind::TimeAveraged);
    Snapshot s;
    for (double t : {0.0, 0.3, 7.0, 400.0}) {
        s.values.push_back(ref::psi(modes, t));
        s.values.push_back(ref::psi_bar(modes, t));
        s.values.push_back(ref::response_function(modes, t));
    }
    s.values.push_back(ref::laplace(modes, KernelKind::Conventional, 1e-3));
    s.values.push_back(ref::laplace(modes, KernelKind::TimeAveraged, 1e-3));
    s.values.push_back(tw);
    for (double tau : {1.0, tw, 10 * tw}) {
        for (auto kind : {KernelKind::Conventional, KernelKind::TimeAveraged}) {
            s.values.push_back(ref::excess_work(modes, kind, near_optimal(tau, tw), 1e-5));
            s.values.push_back(ref::excess_work(modes, kind, linear_ramp(tau), 1e-5));
        }
        s.values.push_back(ref::optimal_ta_excess_work(modes, tau, 1e-5, tw));
    }
    return s;
}

} // namespace

TEST_CASE("OpenMP drivers reproduce the serial reference bit for bit", "[parallel]")
{
    for (std::int64_t n : {16, 10000, 100000}) {
        ChainParams p;
        p.n_spins = n;
        const auto modes = build_modes(p);
        INFO("N = " << n);
        CHECK(evaluate_parallel(modes) == evaluate_reference(modes));
    }
}

TEST_CASE("results do not depend on the thread count", "[parallel]")
{
    const auto modes = build_modes(ChainParams{});
    const auto deltas = log_spaced(1e-3, 1e-2, 6);
#ifdef _OPENMP
    const int initial = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    const auto one = evaluate_parallel(modes);
    const auto sweep_one = sweep_waiting_time(1.0, deltas, 20000);
#ifdef _OPENMP
    for (int threads : {2, 3, 8}) {
        omp_set_num_threads(threads);
        CHECK(evaluate_parallel(modes) == one);
        const auto sweep = sweep_waiting_time(1.0, deltas, 20000);
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            CHECK(sweep.points[i].tau_w == sweep_one.points[i].tau_w);
        }
    }
    omp_set_num_threads(initial);
#endif
    const auto ref = reference::sweep_waiting_time(1.0, deltas, 20000);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        CHECK(ref.points[i].delta == sweep_one.points[i].delta);
        CHECK(ref.points[i].tau_w == sweep_one.points[i].tau_w);
    }
}

TEST_CASE("batch kernels match the serial reference", "[parallel]")
{
    const auto modes = build_modes(ChainParams{});
    std::vector<double> times;
    for (int i = 0; i < 257; ++i) {
        times.push_back(0.25 * i);
    }
    const auto a = psi(modes, times);
    const auto b = psi_bar(modes, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(a[i] == reference::psi(modes, times[i]));
        CHECK(b[i] == reference::psi_bar(modes, times[i]));
    }
}
