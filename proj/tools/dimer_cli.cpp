// dimer_cli.cpp — command-line front end: evolve | steady | figure | validate | sweep.
//
// Exit codes: 0 success, 1 validation/computation failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dimer/datasets.hpp"
#include "dimer/errors.hpp"
#include "dimer/validate.hpp"

namespace {

struct PhysicalFlags {
    std::optional<double> theta;
    std::optional<double> delta_omega;
    double xi = 5.0;
    double gamma = 1.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    double t_mean = 0.0;    // --tm
    double t_diff = 0.0;    // --dt-bath
};

void add_physical_flags(CLI::App* cmd, PhysicalFlags& flags) {
    auto* theta = cmd->add_option("--theta", flags.theta, "mixing angle in (0, pi)");
    auto* detuning =
        cmd->add_option("--delta-omega", flags.delta_omega, "site detuning (alternative to --theta)");
    theta->excludes(detuning);
    detuning->excludes(theta);
    cmd->add_option("--xi", flags.xi, "inter-site hopping")->capture_default_str();
    cmd->add_option("--gamma", flags.gamma, "relaxation rate (both sites)")->capture_default_str();
    cmd->add_option("--eta1", flags.eta1, "site-1 dephasing coupling")->capture_default_str();
    cmd->add_option("--eta2", flags.eta2, "site-2 dephasing coupling")->capture_default_str();
    cmd->add_option("--tm", flags.t_mean, "mean bath temperature")->capture_default_str();
    cmd->add_option("--dt-bath", flags.t_diff, "bath temperature difference T1 - T2")
        ->capture_default_str();
}

dimer::DimerParams resolve_params(const PhysicalFlags& flags) {
    if (flags.theta.has_value() == flags.delta_omega.has_value())
        throw CLI::ValidationError("params", "give exactly one of --theta / --delta-omega");
    dimer::DimerParams p = flags.theta
                               ? dimer::DimerParams::with_mixing_angle(*flags.theta, flags.xi)
                               : dimer::DimerParams::with_detuning(*flags.delta_omega, flags.xi);
    p.gamma1 = p.gamma2 = flags.gamma;
    p.eta1 = flags.eta1;
    p.eta2 = flags.eta2;
    p.set_temperatures(flags.t_mean, flags.t_diff);
    p.validate();
    return p;
}

dimer::FileFormat parse_format(const std::string& name) {
    if (name == "csv") return dimer::FileFormat::Csv;
    if (name == "json") return dimer::FileFormat::Json;
    throw CLI::ValidationError("--format", "must be csv or json");
}

// Axis/grid syntax: "lo:hi:n" (inclusive linear grid) or "v1,v2,..." or one value.
std::vector<double> parse_axis(const std::string& text) {
    try {
        if (text.find(':') != std::string::npos) {
            std::istringstream in(text);
            std::string lo_s, hi_s, n_s;
            if (!std::getline(in, lo_s, ':') || !std::getline(in, hi_s, ':') ||
                !std::getline(in, n_s))
                throw std::invalid_argument(text);
            const double lo = std::stod(lo_s);
            const double hi = std::stod(hi_s);
            const int n = std::stoi(n_s);
            if (n < 2 || (in >> n_s)) throw std::invalid_argument(text);
            std::vector<double> values;
            values.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) values.push_back(lo + (hi - lo) * i / (n - 1));
            return values;
        }
        std::vector<double> values;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        }
        if (values.empty()) throw std::invalid_argument(text);
        return values;
    } catch (const std::exception&) {
        throw CLI::ValidationError("axis", "invalid axis specification '" + text +
                                               "' (want lo:hi:n or v1,v2,...)");
    }
}

void emit_time_series(const dimer::TimeSeriesSpec& spec, const std::string& out,
                      dimer::FileFormat format) {
    const auto points = dimer::generate_time_series(spec);
    if (out == "-")
        dimer::write_time_series(std::cout, spec, points, format);
    else
        dimer::write_time_series(out, spec, points, format);
}

void emit_sweep(const dimer::SweepSpec& spec, const std::string& out, dimer::FileFormat format) {
    const auto records = dimer::generate_sweep(spec);
    if (out == "-")
        dimer::write_sweep(std::cout, spec, records, format);
    else
        dimer::write_sweep(out, spec, records, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dissipative two-site excitation transfer & entanglement dynamics"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file (flags override)");

    std::string format_name = "csv";
    std::string out_path = "-";

    // ---- evolve ----
    auto* evolve = app.add_subcommand("evolve", "time series of P, C and the Bloch moments");
    PhysicalFlags evolve_flags;
    double t_max = 10.0;
    int n_points = 501;
    add_physical_flags(evolve, evolve_flags);
    evolve->add_option("--t-max", t_max, "time horizon")->capture_default_str();
    evolve->add_option("--points", n_points, "number of samples")->capture_default_str();
    evolve->add_option("--format", format_name, "csv|json")->capture_default_str();
    evolve->add_option("--out", out_path, "output path ('-' = stdout)")->capture_default_str();

    // ---- steady ----
    auto* steady = app.add_subcommand("steady", "steady-state P_ss and C_ss");
    PhysicalFlags steady_flags;
    add_physical_flags(steady, steady_flags);
    steady->add_option("--format", format_name, "csv|json")->capture_default_str();
    steady->add_option("--out", out_path, "output path ('-' = stdout)")->capture_default_str();

    // ---- figure ----
    auto* figure = app.add_subcommand("figure", "regenerate a canonical figure dataset");
    int figure_id = 0;
    std::string figure_dir = "figures";
    figure->add_option("--id", figure_id, "figure id in [2, 11]")->required();
    figure->add_option("--out", figure_dir, "output directory")->capture_default_str();
    figure->add_option("--format", format_name, "csv|json")->capture_default_str();

    // ---- validate ----
    auto* validate = app.add_subcommand("validate", "closed forms vs the integrated generator");
    double tol = 1e-6;
    std::string theta_grid, tm_grid, dt_grid, t_grid;
    double validate_eta = 0.005;
    validate->add_option("--tol", tol, "dynamics tolerance (steady uses tol/10)")
        ->capture_default_str();
    validate->add_option("--theta-grid", theta_grid, "override theta grid (lo:hi:n or list)");
    validate->add_option("--tm-grid", tm_grid, "override mean-temperature grid");
    validate->add_option("--dt-grid", dt_grid, "override temperature-difference grid (absolute)");
    validate->add_option("--t-grid", t_grid, "override time grid");
    validate->add_option("--eta", validate_eta, "dephasing coupling for the grid")
        ->capture_default_str();
    validate->add_option("--out", out_path, "write the full report here ('-' = stdout only)")
        ->capture_default_str();
    validate->add_option("--format", format_name, "report format: csv treated as text, json")
        ->capture_default_str();

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Cartesian steady-state sweep");
    PhysicalFlags sweep_flags;
    std::string ax_theta, ax_tm, ax_dt, ax_xi;
    add_physical_flags(sweep, sweep_flags);
    sweep->add_option("--sweep-theta", ax_theta, "theta axis (lo:hi:n or v1,v2,...)");
    sweep->add_option("--sweep-tm", ax_tm, "mean-temperature axis");
    sweep->add_option("--sweep-dt", ax_dt, "temperature-difference axis");
    sweep->add_option("--sweep-xi", ax_xi, "hopping axis");
    sweep->add_option("--format", format_name, "csv|json")->capture_default_str();
    sweep->add_option("--out", out_path, "output path ('-' = stdout)")->capture_default_str();

    try {
        app.parse(argc, argv);

        const dimer::FileFormat format = parse_format(format_name);

        if (*evolve) {
            dimer::TimeSeriesSpec spec;
            spec.params = resolve_params(evolve_flags);
            spec.t_max = t_max;
            spec.n_points = n_points;
            emit_time_series(spec, out_path, format);
            return 0;
        }

        if (*steady) {
            dimer::SweepSpec spec;
            spec.base = resolve_params(steady_flags);
            spec.label = "steady";
            spec.axes = {{"xi", {spec.base.xi}}};  // single record at the given parameters
            emit_sweep(spec, out_path, format);
            return 0;
        }

        if (*figure) {
            const auto written = dimer::run_figure(figure_id, figure_dir, format);
            for (const auto& path : written) std::cout << path << '\n';
            return 0;
        }

        if (*validate) {
            if (!(tol > 0.0)) throw CLI::ValidationError("--tol", "must be > 0");
            dimer::ValidationGrid grid = dimer::ValidationGrid::default_grid();
            grid.eta = validate_eta;
            if (!theta_grid.empty()) grid.thetas = parse_axis(theta_grid);
            if (!tm_grid.empty()) grid.mean_temperatures = parse_axis(tm_grid);
            if (!dt_grid.empty()) {
                grid.temperature_differences = parse_axis(dt_grid);
                grid.differences_relative = false;
            }
            if (!t_grid.empty()) grid.times = parse_axis(t_grid);
            dimer::ValidationTolerances tolerances;
            tolerances.dynamics = tol;
            tolerances.steady = tol / 10.0;
            const dimer::ValidationReport report = dimer::cross_validate(grid, tolerances);
            std::cout << report.to_text();
            if (out_path != "-") {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw std::runtime_error("cannot open " + out_path);
                file << (format == dimer::FileFormat::Json ? report.to_json() + "\n"
                                                           : report.to_text());
            }
            return report.pass ? 0 : 1;
        }

        if (*sweep) {
            dimer::SweepSpec spec;
            PhysicalFlags base = sweep_flags;
            if (!base.theta && !base.delta_omega) base.theta = 1.5707963267948966;
            spec.base = resolve_params(base);
            if (!ax_theta.empty()) spec.axes.push_back({"theta", parse_axis(ax_theta)});
            if (!ax_tm.empty()) spec.axes.push_back({"tm", parse_axis(ax_tm)});
            if (!ax_dt.empty()) spec.axes.push_back({"dt-bath", parse_axis(ax_dt)});
            if (!ax_xi.empty()) spec.axes.push_back({"xi", parse_axis(ax_xi)});
            if (spec.axes.empty())
                throw CLI::ValidationError("sweep", "give at least one --sweep-* axis");
            emit_sweep(spec, out_path, format);
            return 0;
        }

        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help and friends exit 0; parse errors are config errors
    } catch (const dimer::NotXState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dimer::DegenerateRelaxation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }
}
