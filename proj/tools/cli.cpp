#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "anneal/chain.hpp"
#include "anneal/csv.hpp"
#include "anneal/kernel.hpp"
#include "anneal/kz.hpp"
#include "anneal/protocol.hpp"
#include "anneal/work.hpp"

namespace anneal::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    ChainParams chain;
    std::string out_dir = ".";
    std::optional<std::string> stem;
    bool overwrite = false;
    bool out_dir_given = false;
};

std::string printf_string(const char *fmt, double x)
{
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, fmt, x);
    return std::string(buf, static_cast<std::size_t>(n));
}

/// Collects files and writes them only once every output is ready, so a
/// refusal to overwrite leaves nothing half-written.
class OutputSet {
public:
    explicit OutputSet(const CommonOptions &common) : dir_(common.out_dir), overwrite_(common.overwrite) {}

    void add(const std::string &name, std::string contents) { files_.emplace_back(dir_ / name, std::move(contents)); }

    void commit(std::ostream &out) const
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec || !fs::is_directory(dir_)) {
            throw std::runtime_error("cannot create output directory " + dir_.string());
        }
        for (const auto &[path, contents] : files_) {
            if (fs::exists(path) && !overwrite_) {
                throw std::runtime_error("refusing to overwrite " + path.string() + " (pass --overwrite)");
            }
        }
        for (const auto &[path, contents] : files_) {
            std::ofstream file(path, std::ios::binary | std::ios::trunc);
            file << contents;
            file.close();
            if (!file) {
                throw std::runtime_error("failed to write " + path.string());
            }
            out << "wrote " << path.string() << '\n';
        }
    }

private:
    fs::path dir_;
    bool overwrite_;
    std::vector<std::pair<fs::path, std::string>> files_;
};

void validate_chain(const ChainParams &chain, std::ostream &err)
{
    chain.validate();
    if (!chain.weak_driving()) {
        err << "warning: |delta_gamma / gamma0| = " << chain.driving_ratio()
            << " exceeds 0.1; linear response is not expected to hold\n";
    }
}

KernelKind parse_kernel(const std::string &name)
{
    if (name == "conventional") {
        return KernelKind::Conventional;
    }
    if (name == "time-averaged") {
        return KernelKind::TimeAveraged;
    }
    throw UsageError("unknown kernel '" + name + "'");
}

std::vector<double> tau_grid(const std::vector<double> &explicit_taus, std::optional<double> tau_min,
                             std::optional<double> tau_max, std::size_t points, double waiting_time)
{
    if (!explicit_taus.empty()) {
        return explicit_taus;
    }
    // Default span is [1e-2, 1e2] tau_w; a zero waiting time falls back to [1e-2, 1e2].
    const double scale = waiting_time > 0 ? waiting_time : 1.0;
    return log_spaced(tau_min.value_or(1e-2 * scale), tau_max.value_or(1e2 * scale), points);
}

std::string tau_label(double tau)
{
    std::string s = printf_string("%.6g", tau);
    for (char &c : s) {
        if (c == '+') {
            c = 'p';
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

int cmd_waiting_time(const CommonOptions &common, std::ostream &out, std::ostream &err)
{
    validate_chain(common.chain, err);
    const auto modes = build_modes(common.chain);
    const double tau_w = waiting_time(modes, KernelKind::TimeAveraged);
    out << printf_string("%.6g", tau_w) << '\n';
    if (common.out_dir_given) {
        std::ostringstream csv;
        csv << csv::units_line(common.chain) << '\n'
            << "gamma0,n_spins,tau_w\n"
            << csv::format(common.chain.gamma0) << ',' << common.chain.n_spins << ',' << csv::format(tau_w) << '\n';
        OutputSet files(common);
        files.add(common.stem.value_or("waiting_time") + ".csv", csv.str());
        files.commit(out);
    }
    return 0;
}

struct ProtocolOptions {
    std::vector<double> taus{1.0, 100.0, 10000.0};
    std::size_t grid_points = kDefaultGridPoints;
    std::optional<double> tau_w;
};

int cmd_protocol(const CommonOptions &common, const ProtocolOptions &opts, std::ostream &out, std::ostream &err)
{
    validate_chain(common.chain, err);
    const double tau_w =
        opts.tau_w ? *opts.tau_w : waiting_time(build_modes(common.chain), KernelKind::TimeAveraged);
    OutputSet files(common);
    const std::string stem = common.stem.value_or("protocol");
    for (double tau : opts.taus) {
        const auto p = near_optimal(tau, tau_w, opts.grid_points);
        std::ostringstream csv;
        csv << csv::units_line(common.chain) << '\n'
            << "# protocol: near-optimal, tau=" << csv::format(tau) << ", tau_w=" << csv::format(tau_w) << '\n';
        write_csv(csv, p, "# columns: t in hbar/J, g dimensionless");
        files.add(stem + "_tau_" + tau_label(tau) + ".csv", csv.str());
    }
    files.commit(out);
    return 0;
}

struct ExcessWorkOptions {
    std::vector<double> taus;
    std::optional<double> tau_min;
    std::optional<double> tau_max;
    std::size_t tau_points = 41;
    std::string kernel = "time-averaged";
    std::string protocol = "near-optimal";
    std::size_t grid_points = kDefaultGridPoints;
    std::optional<double> tau_w;
    bool direct = false;
};

int cmd_excess_work(const CommonOptions &common, const ExcessWorkOptions &opts, std::ostream &out,
                    std::ostream &err)
{
    validate_chain(common.chain, err);
    const KernelKind kind = parse_kernel(opts.kernel);
    const bool near = opts.protocol == "near-optimal";
    if (!near && opts.protocol != "ramp") {
        throw UsageError("unknown protocol '" + opts.protocol + "'");
    }
    const auto modes = build_modes(common.chain);
    const double tau_w = opts.tau_w ? *opts.tau_w : waiting_time(modes, KernelKind::TimeAveraged);
    const auto taus = tau_grid(opts.taus, opts.tau_min, opts.tau_max, opts.tau_points, tau_w);
    const double dl = common.chain.delta_gamma;
    const bool boundary_term = near && kind == KernelKind::TimeAveraged && !opts.direct;

    std::ostringstream csv;
    csv << csv::units_line(common.chain) << '\n'
        << "# kernel=" << to_string(kind) << ", protocol=" << opts.protocol
        << ", evaluation=" << (boundary_term ? "boundary-term optimal work" : "direct double integral")
        << ", delta_lambda=" << csv::format(dl) << ", tau_w=" << csv::format(tau_w)
        << ", sudden_bound=" << csv::format(sudden_bound(modes, dl)) << '\n'
        << "tau,w_ex\n";
    for (double tau : taus) {
        double w;
        if (boundary_term) {
            w = optimal_ta_excess_work(modes, tau, dl, tau_w);
        } else {
            const auto p = near ? near_optimal(tau, tau_w, opts.grid_points) : linear_ramp(tau, opts.grid_points);
            w = excess_work(modes, kind, p, dl);
        }
        csv << csv::format(tau) << ',' << csv::format(w) << '\n';
    }
    OutputSet files(common);
    files.add(common.stem.value_or("excess_work") + ".csv", csv.str());
    files.commit(out);
    return 0;
}

struct SweepOptions {
    double delta_min = 1e-3;
    double delta_max = 1e-2;
    std::size_t delta_points = 20;
    double saturation_factor = kDefaultSaturationFactor;
    bool self_test = false;
    bool n_spins_given = false;
};

void print_fit(std::ostream &out, const PowerLawFit &fit)
{
    out << "exponent = " << printf_string("%.3f", fit.exponent) << '\n'
        << "r_squared = " << printf_string("%.6f", fit.r_squared) << '\n'
        << "points = " << fit.n_points << '\n';
}

int cmd_sweep(const CommonOptions &common, const SweepOptions &opts, std::ostream &out, std::ostream &err)
{
    const auto deltas = log_spaced(opts.delta_min, opts.delta_max, opts.delta_points);
    const FitWindow window{opts.delta_min, opts.delta_max};
    if (opts.self_test) {
        SweepResult synthetic;
        for (double d : deltas) {
            synthetic.points.push_back({d, 0, 2.5 / d});
        }
        const auto fitted = fit_power_law(synthetic, window, common.chain.J, 0.0);
        out << "self-test: tau_w = 2.5 / delta\n";
        print_fit(out, *fitted.fit);
        return 0;
    }
    ChainParams chain = common.chain;
    if (!opts.n_spins_given) {
        chain.n_spins = 100000;
    }
    chain.gamma0 = chain.J;
    chain.validate();
    (void)err;

    const auto sweep = sweep_waiting_time(chain.J, deltas, chain.n_spins, chain.hbar);
    const auto fitted = fit_power_law(sweep, window, chain.J, opts.saturation_factor);
    const auto &fit = *fitted.fit;

    std::ostringstream csv;
    csv << csv::units_line(chain) << '\n' << "delta,n_spins,tau_w\n";
    for (const auto &p : fitted.points) {
        csv << csv::format(p.delta) << ',' << p.n_spins << ',' << csv::format(p.tau_w) << '\n';
    }
    csv << "# fit: log(tau_w) = exponent * log(delta) + intercept\n"
        << "# fit: exponent=" << csv::format(fit.exponent) << '\n'
        << "# fit: intercept=" << csv::format(fit.intercept) << '\n'
        << "# fit: r_squared=" << csv::format(fit.r_squared) << '\n'
        << "# fit: window=[" << csv::format(fit.delta_min) << ',' << csv::format(fit.delta_max) << "]\n"
        << "# fit: points=" << fit.n_points << '\n';
    OutputSet files(common);
    files.add(common.stem.value_or("sweep_kz") + ".csv", csv.str());
    print_fit(out, fit);
    files.commit(out);
    return 0;
}

struct VarianceOptions {
    std::optional<std::string> beta;
    std::optional<double> tau;
};

double parse_beta(const std::optional<std::string> &text)
{
    constexpr const char *divergence =
        "; the system ideally starts at T = 0 (beta = inf), where the optimal work variance diverges";
    if (!text) {
        throw UsageError(std::string("variance needs a finite --beta > 0") + divergence);
    }
    double beta = 0.0;
    try {
        std::size_t used = 0;
        beta = std::stod(*text, &used);
        if (used != text->size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception &) {
        throw UsageError("cannot parse --beta '" + *text + "'");
    }
    if (!std::isfinite(beta) || !(beta > 0)) {
        throw UsageError("--beta must be finite and positive" + std::string(divergence));
    }
    return beta;
}

int cmd_variance(const CommonOptions &common, const VarianceOptions &opts, std::ostream &out, std::ostream &err)
{
    const double beta = parse_beta(opts.beta);
    validate_chain(common.chain, err);
    const auto modes = build_modes(common.chain);
    const double tau_w = waiting_time(modes, KernelKind::TimeAveraged);
    const double tau = opts.tau.value_or(tau_w);
    const double dl = common.chain.delta_gamma;
    const double w = optimal_ta_excess_work(modes, tau, dl, tau_w);
    const double variance = optimal_variance(modes, tau, dl, beta);
    out << "tau = " << csv::format(tau) << '\n'
        << "beta = " << csv::format(beta) << '\n'
        << "w_ex_optimal = " << csv::format(w) << '\n'
        << "variance = " << csv::format(variance) << '\n'
        << "ratio = " << printf_string("%.6f", variance / w) << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Linear-response work functionals and waiting times for the driven transverse-field Ising chain",
                 "anneal-lrt"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file; command-line flags take precedence");

    CommonOptions common;
    app.add_option("--J", common.chain.J, "Coupling energy J")->capture_default_str();
    app.add_option("--gamma0", common.chain.gamma0, "Initial transverse field")->capture_default_str();
    app.add_option("--delta-gamma", common.chain.delta_gamma, "Field increment (driving amplitude)")
        ->capture_default_str();
    auto *n_spins_opt =
        app.add_option("--n-spins", common.chain.n_spins, "Number of spins (even)")->capture_default_str();
    app.add_option("--hbar", common.chain.hbar, "Reduced Planck constant")->capture_default_str();
    auto *out_dir_opt = app.add_option("--out-dir", common.out_dir, "Output directory")->capture_default_str();
    app.add_option("--stem", common.stem, "Output file-name stem");
    app.add_flag("--overwrite", common.overwrite, "Replace existing output files");

    auto *wt = app.add_subcommand("waiting-time", "Print the time-averaged waiting time (CSV with --out-dir)");
    wt->fallthrough();

    ProtocolOptions proto;
    auto *pc = app.add_subcommand("protocol", "Write near-optimal protocol CSVs, one per tau");
    pc->fallthrough();
    pc->add_option("--tau", proto.taus, "Switching time (repeatable)")->capture_default_str();
    pc->add_option("--grid-points", proto.grid_points, "Grid nodes per protocol")->capture_default_str();
    pc->add_option("--tau-w", proto.tau_w, "Override the waiting time");

    ExcessWorkOptions ew;
    auto *ec = app.add_subcommand("excess-work", "Write excess work against switching time");
    ec->fallthrough();
    ec->add_option("--tau", ew.taus, "Switching time (repeatable; overrides the geometric grid)");
    ec->add_option("--tau-min", ew.tau_min, "Geometric grid start (default 1e-2 tau_w)");
    ec->add_option("--tau-max", ew.tau_max, "Geometric grid end (default 1e2 tau_w)");
    ec->add_option("--tau-points", ew.tau_points, "Geometric grid size")->capture_default_str();
    ec->add_option("--kernel", ew.kernel, "conventional or time-averaged")
        ->check(CLI::IsMember({"conventional", "time-averaged"}))
        ->capture_default_str();
    ec->add_option("--protocol", ew.protocol, "ramp or near-optimal")
        ->check(CLI::IsMember({"ramp", "near-optimal"}))
        ->capture_default_str();
    ec->add_option("--grid-points", ew.grid_points, "Grid nodes per protocol")->capture_default_str();
    ec->add_option("--tau-w", ew.tau_w, "Override the waiting time");
    ec->add_flag("--direct", ew.direct,
                 "Time-averaged near-optimal: evaluate the double integral instead of the boundary-term optimum");

    SweepOptions sw;
    auto *sc = app.add_subcommand("sweep-kz", "Sweep tau_w towards the critical point and fit its divergence");
    sc->fallthrough();
    sc->add_option("--delta-min", sw.delta_min, "Smallest |J - gamma0|")->capture_default_str();
    sc->add_option("--delta-max", sw.delta_max, "Largest |J - gamma0|")->capture_default_str();
    sc->add_option("--delta-points", sw.delta_points, "Log-spaced points")->capture_default_str();
    sc->add_option("--saturation-factor", sw.saturation_factor,
                   "Require finite-size gap * factor < delta in the fit window")
        ->capture_default_str();
    sc->add_flag("--self-test", sw.self_test, "Fit synthetic tau_w = C / delta data instead of the chain");

    VarianceOptions var;
    auto *vc = app.add_subcommand("variance", "Print the optimal time-averaged work variance");
    vc->fallthrough();
    vc->add_option("--beta", var.beta, "Inverse temperature (finite, > 0)");
    vc->add_option("--tau", var.tau, "Switching time (default tau_w)");

    std::vector<std::string> argv_rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }
    common.out_dir_given = out_dir_opt->count() > 0;
    sw.n_spins_given = n_spins_opt->count() > 0;

    try {
        if (wt->parsed()) {
            return cmd_waiting_time(common, out, err);
        }
        if (pc->parsed()) {
            return cmd_protocol(common, proto, out, err);
        }
        if (ec->parsed()) {
            return cmd_excess_work(common, ew, out, err);
        }
        if (sc->parsed()) {
            return cmd_sweep(common, sw, out, err);
        }
        if (vc->parsed()) {
            return cmd_variance(common, var, out, err);
        }
    } catch (const std::exception &e) {
        err << "anneal-lrt: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace anneal::cli
