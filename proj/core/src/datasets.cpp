#include "dimer/datasets.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dimer/bloch.hpp"
#include "dimer/concurrence.hpp"

namespace dimer {

namespace {

using nlohmann::ordered_json;

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Short form for labels/filenames only; data always uses g17.
std::string glabel(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

const char* form_name(CurveForm f) {
    switch (f) {
        case CurveForm::General: return "general";
        case CurveForm::Resonant: return "resonant";
        case CurveForm::HighTemperature: return "high-temperature";
        case CurveForm::LowTemperature: return "low-temperature";
    }
    return "general";
}

Regime to_regime(CurveForm f) {
    switch (f) {
        case CurveForm::Resonant: return Regime::Resonant;
        case CurveForm::HighTemperature: return Regime::HighTemperature;
        case CurveForm::LowTemperature: return Regime::LowTemperature;
        case CurveForm::General: break;
    }
    throw std::logic_error("to_regime: General has no regime");
}

std::string params_config(const DimerParams& params) {
    std::string line;
    if (params.delta_omega) line += "delta_omega=" + g17(*params.delta_omega) + " ";
    line += "theta=" + g17(mixing_angle(params));
    line += " xi=" + g17(params.xi);
    line += " gamma1=" + g17(params.gamma1) + " gamma2=" + g17(params.gamma2);
    line += " eta1=" + g17(params.eta1) + " eta2=" + g17(params.eta2);
    line += " temp1=" + g17(params.temp1) + " temp2=" + g17(params.temp2);
    if (params.omega_mean) line += " omega_mean=" + g17(*params.omega_mean);
    return line;
}

ordered_json params_json(const DimerParams& params) {
    ordered_json j;
    if (params.delta_omega) j["delta_omega"] = *params.delta_omega;
    j["theta"] = mixing_angle(params);
    j["xi"] = params.xi;
    j["gamma1"] = params.gamma1;
    j["gamma2"] = params.gamma2;
    j["eta1"] = params.eta1;
    j["eta2"] = params.eta2;
    j["temp1"] = params.temp1;
    j["temp2"] = params.temp2;
    if (params.omega_mean) j["omega_mean"] = *params.omega_mean;
    return j;
}

std::string hash_hex(const std::string& config) {
    char hex[32];
    std::snprintf(hex, sizeof(hex), "0x%016llx",
                  static_cast<unsigned long long>(config_hash(config)));
    return hex;
}

void write_header(std::ostream& out, const std::string& label, const std::string& config,
                  const std::vector<std::string>& notes) {
    out << "# dataset: " << label << '\n';
    out << "# config: " << config << '\n';
    out << "# config_hash: " << hash_hex(config) << '\n';
    for (const auto& note : notes) out << "# note: " << note << '\n';
}

std::ofstream open_out(const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);  // binary: byte-stable across platforms
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

double pi_mult(double m) { return m * std::numbers::pi; }

DimerParams figure_params(double theta, double t_mean, double eta) {
    DimerParams p = DimerParams::with_mixing_angle(theta, 5.0);
    p.gamma1 = p.gamma2 = 1.0;
    p.eta1 = p.eta2 = eta;
    p.set_temperatures(t_mean);
    return p;
}

// Largest gap between the general and low-temperature probability forms over
// the series grid; quoted in the fig. 4 metadata (caption temperature sits
// above the regime's domain of validity).
std::string low_t_gap_note(const TimeSeriesSpec& spec) {
    double gap = 0.0;
    for (int i = 0; i < spec.n_points; ++i) {
        const double t = spec.t_max * i / (spec.n_points - 1);
        gap = std::max(gap, std::abs(transfer_probability(t, spec.params) -
                                     transfer_probability_limit(Regime::LowTemperature, t,
                                                                spec.params)));
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "low-temperature form plotted at T_mean=1, outside its T~0 derivation; "
                  "max |P_general - P_limit| on this grid = %.3g",
                  gap);
    return buf;
}

}  // namespace

std::uint64_t config_hash(const std::string& canonical) {
    std::uint64_t h = 14695981039346656037ull;  // FNV-1a 64
    for (const unsigned char ch : canonical) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string config_line(const TimeSeriesSpec& spec) {
    return params_config(spec.params) + " t_max=" + g17(spec.t_max) +
           " points=" + std::to_string(spec.n_points) + " p_form=" + form_name(spec.p_form) +
           " c_form=" + form_name(spec.c_form);
}

std::string config_line(const SweepSpec& spec) {
    std::string line = params_config(spec.base);
    for (const auto& axis : spec.axes) {
        line += " axis_" + axis.name + "=" + std::to_string(axis.values.size());
        if (!axis.values.empty())
            line += "[" + g17(axis.values.front()) + ".." + g17(axis.values.back()) + "]";
    }
    return line;
}

std::vector<TimePoint> generate_time_series(const TimeSeriesSpec& spec) {
    if (spec.n_points < 2) throw std::invalid_argument("generate_time_series: need >= 2 points");
    if (!(spec.t_max > 0.0)) throw std::invalid_argument("generate_time_series: t_max must be > 0");
    spec.params.validate();

    const Eigensystem eig = eigensystem(spec.params);
    const RateSet rates = effective_rates(spec.params, eig);
    const SigmaMoments init = SigmaMoments::donor_excited(eig.theta);

    std::vector<TimePoint> points;
    points.reserve(static_cast<std::size_t>(spec.n_points));
    for (int i = 0; i < spec.n_points; ++i) {
        const double t = spec.t_max * i / (spec.n_points - 1);
        TimePoint pt;
        pt.t = t;
        const SigmaMoments m = bloch_transient(init, rates, eig, t);
        pt.s11 = m.s11;
        pt.s22 = m.s22;
        pt.s33 = m.s33;
        pt.s44 = m.s44;
        pt.s32 = m.s32;
        pt.p = spec.p_form == CurveForm::General
                   ? transfer_probability(t, spec.params)
                   : transfer_probability_limit(to_regime(spec.p_form), t, spec.params);
        pt.c = spec.c_form == CurveForm::General
                   ? concurrence_transient(t, spec.params)
                   : concurrence_limit(to_regime(spec.c_form), t, spec.params);
        points.push_back(pt);
    }
    return points;
}

std::vector<SweepRecord> generate_sweep(const SweepSpec& spec) {
    if (spec.axes.empty()) throw std::invalid_argument("generate_sweep: need >= 1 axis");
    for (const auto& axis : spec.axes) {
        if (axis.values.empty())
            throw std::invalid_argument("generate_sweep: axis '" + axis.name + "' is empty");
        if (axis.name != "theta" && axis.name != "tm" && axis.name != "dt-bath" &&
            axis.name != "xi")
            throw std::invalid_argument("generate_sweep: unknown axis '" + axis.name + "'");
    }

    std::vector<SweepRecord> records;
    std::vector<std::size_t> index(spec.axes.size(), 0);
    const auto total = [&] {
        std::size_t n = 1;
        for (const auto& axis : spec.axes) n *= axis.values.size();
        return n;
    }();
    records.reserve(total);

    for (std::size_t flat = 0; flat < total; ++flat) {
        DimerParams p = spec.base;
        double t_mean = p.mean_temperature();
        double t_diff = p.temp1 - p.temp2;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            const double v = spec.axes[a].values[index[a]];
            const std::string& name = spec.axes[a].name;
            if (name == "theta") {
                p.theta = v;
                p.delta_omega.reset();
            } else if (name == "tm") {
                t_mean = v;
            } else if (name == "dt-bath") {
                t_diff = v;
            } else {
                p.xi = v;
            }
        }
        p.set_temperatures(t_mean, t_diff);
        p.validate();

        SweepRecord rec;
        rec.theta = mixing_angle(p);
        rec.t_mean = t_mean;
        rec.t_diff = t_diff;
        rec.xi = p.xi;
        rec.p_ss = steady_transfer_probability(p);
        rec.c_ss = steady_concurrence(p);
        records.push_back(rec);

        // Odometer increment: last axis fastest.
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            if (++index[a] < spec.axes[a].values.size()) break;
            index[a] = 0;
        }
    }
    return records;
}

void write_time_series(std::ostream& out, const TimeSeriesSpec& spec,
                       const std::vector<TimePoint>& points, FileFormat format) {
    const std::string config = config_line(spec);
    if (format == FileFormat::Csv) {
        write_header(out, spec.label, config, spec.notes);
        out << "t,P,C,s11,s22,s33,s44,re_s32,im_s32\n";
        for (const auto& pt : points) {
            out << g17(pt.t) << ',' << g17(pt.p) << ',' << g17(pt.c) << ',' << g17(pt.s11) << ','
                << g17(pt.s22) << ',' << g17(pt.s33) << ',' << g17(pt.s44) << ','
                << g17(pt.s32.real()) << ',' << g17(pt.s32.imag()) << '\n';
        }
        return;
    }
    ordered_json j;
    j["dataset"] = spec.label;
    j["config"] = params_json(spec.params);
    j["config"]["t_max"] = spec.t_max;
    j["config"]["points"] = spec.n_points;
    j["config"]["p_form"] = form_name(spec.p_form);
    j["config"]["c_form"] = form_name(spec.c_form);
    j["config_hash"] = hash_hex(config);
    j["notes"] = spec.notes;
    j["columns"] = {"t", "P", "C", "s11", "s22", "s33", "s44", "re_s32", "im_s32"};
    auto& rows = j["rows"] = ordered_json::array();
    for (const auto& pt : points)
        rows.push_back({pt.t, pt.p, pt.c, pt.s11, pt.s22, pt.s33, pt.s44, pt.s32.real(),
                        pt.s32.imag()});
    out << j.dump(2) << '\n';
}

void write_time_series(const std::string& path, const TimeSeriesSpec& spec,
                       const std::vector<TimePoint>& points, FileFormat format) {
    std::ofstream out = open_out(path);
    write_time_series(out, spec, points, format);
}

void write_sweep(std::ostream& out, const SweepSpec& spec,
                 const std::vector<SweepRecord>& records, FileFormat format) {
    const std::string config = config_line(spec);
    if (format == FileFormat::Csv) {
        write_header(out, spec.label, config, spec.notes);
        out << "theta,t_mean,t_diff,xi,P_ss,C_ss\n";
        for (const auto& rec : records) {
            out << g17(rec.theta) << ',' << g17(rec.t_mean) << ',' << g17(rec.t_diff) << ','
                << g17(rec.xi) << ',' << g17(rec.p_ss) << ',' << g17(rec.c_ss) << '\n';
        }
        return;
    }
    ordered_json j;
    j["dataset"] = spec.label;
    j["config"] = params_json(spec.base);
    auto& axes = j["config"]["axes"] = ordered_json::array();
    for (const auto& axis : spec.axes) axes.push_back({{"name", axis.name}, {"values", axis.values}});
    j["config_hash"] = hash_hex(config);
    j["notes"] = spec.notes;
    j["columns"] = {"theta", "t_mean", "t_diff", "xi", "P_ss", "C_ss"};
    auto& rows = j["rows"] = ordered_json::array();
    for (const auto& rec : records)
        rows.push_back({rec.theta, rec.t_mean, rec.t_diff, rec.xi, rec.p_ss, rec.c_ss});
    out << j.dump(2) << '\n';
}

void write_sweep(const std::string& path, const SweepSpec& spec,
                 const std::vector<SweepRecord>& records, FileFormat format) {
    std::ofstream out = open_out(path);
    write_sweep(out, spec, records, format);
}

bool figure_is_sweep(int id) {
    switch (id) {
        case 2: case 3: case 4: case 7: case 8: case 9: return false;
        case 5: case 6: case 10: case 11: return true;
        default: throw std::invalid_argument("figure id must be in [2, 11]");
    }
}

std::vector<TimeSeriesSpec> figure_time_series(int id) {
    if (figure_is_sweep(id)) throw std::invalid_argument("figure " + std::to_string(id) + " is a sweep");
    std::vector<TimeSeriesSpec> specs;
    const auto time_curve = [&](DimerParams params, CurveForm p_form, CurveForm c_form,
                                const std::string& label) {
        TimeSeriesSpec spec;
        spec.params = params;
        spec.p_form = p_form;
        spec.c_form = c_form;
        spec.label = label;
        specs.push_back(spec);
    };

    switch (id) {
        case 2:
            for (const double tm : {0.1, 10.0, 100.0}) {
                DimerParams p = DimerParams::with_detuning(0.0, 5.0);
                p.set_temperatures(tm);
                time_curve(p, CurveForm::Resonant, CurveForm::General,
                           "fig2_resonant_transfer_tm" + glabel(tm));
            }
            break;
        case 3:
            for (const double m : {0.6, 0.8, 0.9})
                time_curve(figure_params(pi_mult(m), 100.0, 0.005), CurveForm::HighTemperature,
                           CurveForm::General, "fig3_hot_transfer_theta" + glabel(m) + "pi");
            break;
        case 4:
            for (const double m : {0.1, 0.4, 0.6, 0.9}) {
                TimeSeriesSpec spec;
                spec.params = figure_params(pi_mult(m), 1.0, 0.0);
                spec.p_form = CurveForm::LowTemperature;
                spec.c_form = CurveForm::General;
                spec.label = "fig4_cold_transfer_theta" + glabel(m) + "pi";
                spec.notes.push_back(low_t_gap_note(spec));
                specs.push_back(spec);
            }
            break;
        case 7:
            for (const double tm : {0.1, 10.0, 100.0}) {
                DimerParams p = DimerParams::with_detuning(0.0, 5.0);
                p.set_temperatures(tm);
                time_curve(p, CurveForm::General, CurveForm::Resonant,
                           "fig7_resonant_concurrence_tm" + glabel(tm));
            }
            break;
        case 8:
            for (const double m : {0.1, 0.3, 0.5})
                time_curve(figure_params(pi_mult(m), 100.0, 0.005), CurveForm::General,
                           CurveForm::HighTemperature,
                           "fig8_hot_concurrence_theta" + glabel(m) + "pi");
            break;
        case 9:
            for (const double m : {0.1, 0.3, 0.5})
                time_curve(figure_params(pi_mult(m), 0.01, 0.005), CurveForm::General,
                           CurveForm::LowTemperature,
                           "fig9_cold_concurrence_theta" + glabel(m) + "pi");
            break;
        default:
            break;
    }
    return specs;
}

std::vector<SweepSpec> figure_sweeps(int id) {
    if (!figure_is_sweep(id)) throw std::invalid_argument("figure " + std::to_string(id) + " is a time series");
    std::vector<SweepSpec> specs;

    const auto linspace = [](double lo, double hi, int n) {
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
        return v;
    };

    struct ThetaCurve {
        double theta;
        std::string label;
        const char* note;
    };
    const auto tm_sweep_figure = [&](const std::vector<ThetaCurve>& curves, const char* stem) {
        for (const auto& curve : curves) {
            SweepSpec spec;
            spec.base = DimerParams::with_mixing_angle(curve.theta, 5.0);
            spec.axes = {{"tm", linspace(0.0, 100.0, 201)}};
            spec.label = std::string(stem) + curve.label;
            if (curve.note) spec.notes.push_back(curve.note);
            specs.push_back(spec);
        }
    };
    const auto theta_sweep_figure = [&](const char* stem) {
        for (const double tm : {0.1, 10.0, 100.0}) {
            SweepSpec spec;
            spec.base = DimerParams::with_mixing_angle(0.5 * std::numbers::pi, 5.0);
            spec.base.set_temperatures(tm);
            spec.axes = {{"theta", linspace(pi_mult(0.1), pi_mult(0.9), 201)}};
            spec.label = std::string(stem) + "tm" + glabel(tm);
            specs.push_back(spec);
        }
    };

    static const char* kRadianNote =
        "curve angle given in radians (not a multiple of pi), reproduced verbatim";
    switch (id) {
        case 5:
            tm_sweep_figure({{pi_mult(0.1), "theta0.1pi", nullptr},
                             {0.5, "theta0.5rad", kRadianNote},
                             {pi_mult(0.9), "theta0.9pi", nullptr}},
                            "fig5_steady_transfer_");
            break;
        case 6:
            theta_sweep_figure("fig6_steady_transfer_");
            break;
        case 10:
            tm_sweep_figure({{pi_mult(0.1), "theta0.1pi", nullptr},
                             {0.3, "theta0.3rad", kRadianNote},
                             {pi_mult(0.5), "theta0.5pi", nullptr}},
                            "fig10_steady_concurrence_");
            break;
        case 11:
            theta_sweep_figure("fig11_steady_concurrence_");
            break;
        default:
            break;
    }
    return specs;
}

std::vector<std::string> run_figure(int id, const std::string& out_dir, FileFormat format) {
    const std::string ext = format == FileFormat::Csv ? ".csv" : ".json";
    std::vector<std::string> written;
    if (figure_is_sweep(id)) {
        for (const auto& spec : figure_sweeps(id)) {
            const std::string path = out_dir + "/" + spec.label + ext;
            write_sweep(path, spec, generate_sweep(spec), format);
            written.push_back(path);
        }
    } else {
        for (const auto& spec : figure_time_series(id)) {
            const std::string path = out_dir + "/" + spec.label + ext;
            write_time_series(path, spec, generate_time_series(spec), format);
            written.push_back(path);
        }
    }
    return written;
}

}  // namespace dimer
