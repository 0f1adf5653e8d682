// datasets.hpp — deterministic dataset generation: time series of the
// transfer/entanglement dynamics, steady-state sweeps, and the canonical
// figure presets (ids 2–11).
//
// Every emitted file carries its resolved configuration and an FNV-1a hash of
// the canonical config line, so regeneration is byte-for-byte reproducible.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dimer/model.hpp"
#include "dimer/transfer.hpp"

namespace dimer {

enum class FileFormat { Csv, Json };

// Which closed form fills the P / C columns of a time series. General uses the
// full three-term / four-coefficient solutions; the rest use the dedicated
// regime forms.
enum class CurveForm { General, Resonant, HighTemperature, LowTemperature };

struct TimePoint {
    double t = 0.0;
    double p = 0.0;                  // transfer probability column
    double c = 0.0;                  // concurrence column
    double s11 = 0.0, s22 = 0.0, s33 = 0.0, s44 = 0.0;
    std::complex<double> s32;
};

struct TimeSeriesSpec {
    DimerParams params;
    double t_max = 10.0;
    int n_points = 501;              // >= 2, uniform grid on [0, t_max]
    CurveForm p_form = CurveForm::General;
    CurveForm c_form = CurveForm::General;
    std::string label = "evolve";    // dataset name / filename stem
    std::vector<std::string> notes;  // emitted verbatim as header notes
};

std::vector<TimePoint> generate_time_series(const TimeSeriesSpec& spec);

struct SweepAxis {
    std::string name;                // one of: theta, tm, dt-bath, xi
    std::vector<double> values;
};

struct SweepRecord {
    double theta = 0.0;
    double t_mean = 0.0;
    double t_diff = 0.0;
    double xi = 0.0;
    double p_ss = 0.0;
    double c_ss = 0.0;
};

struct SweepSpec {
    DimerParams base;                // axis values override these per record
    std::vector<SweepAxis> axes;     // >= 1 axis; rows ordered lexicographically
    std::string label = "sweep";
    std::vector<std::string> notes;
};

std::vector<SweepRecord> generate_sweep(const SweepSpec& spec);

// Writers. CSV: header comments (# dataset / # config / # config_hash /
// # note), then `t,P,C,s11,s22,s33,s44,re_s32,im_s32` or
// `theta,t_mean,t_diff,xi,P_ss,C_ss`. JSON mirrors the same fields.
void write_time_series(std::ostream& out, const TimeSeriesSpec& spec,
                       const std::vector<TimePoint>& points, FileFormat format);
void write_time_series(const std::string& path, const TimeSeriesSpec& spec,
                       const std::vector<TimePoint>& points, FileFormat format);
void write_sweep(std::ostream& out, const SweepSpec& spec,
                 const std::vector<SweepRecord>& records, FileFormat format);
void write_sweep(const std::string& path, const SweepSpec& spec,
                 const std::vector<SweepRecord>& records, FileFormat format);

// Canonical config line (also what gets hashed) for each dataset kind.
std::string config_line(const TimeSeriesSpec& spec);
std::string config_line(const SweepSpec& spec);
std::uint64_t config_hash(const std::string& canonical);

// Figure presets. Time-series figures: 2 (resonant P), 3 (high-T P),
// 4 (low-T P), 7 (resonant C), 8 (high-T C), 9 (low-T C); sweep figures:
// 5 (P_ss vs T_mean), 6 (P_ss vs θ), 10 (C_ss vs T_mean), 11 (C_ss vs θ).
// Throws std::invalid_argument for other ids.
bool figure_is_sweep(int id);
std::vector<TimeSeriesSpec> figure_time_series(int id);
std::vector<SweepSpec> figure_sweeps(int id);

// Generates every curve of the figure into out_dir; returns the paths written.
std::vector<std::string> run_figure(int id, const std::string& out_dir, FileFormat format);

}  // namespace dimer
