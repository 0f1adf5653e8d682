// acceptance_main.cpp — the acceptance gate: one PASS/FAIL line per criterion.
//
// Each criterion is self-contained, prints exactly one line with its measured
// numbers against the pinned tolerance, and the process exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dimer/bloch.hpp"
#include "dimer/concurrence.hpp"
#include "dimer/datasets.hpp"
#include "dimer/density_matrix.hpp"
#include "dimer/integrate.hpp"
#include "dimer/liouvillian.hpp"
#include "dimer/model.hpp"
#include "dimer/steady.hpp"
#include "dimer/transfer.hpp"
#include "dimer/validate.hpp"
#include "dimer/wootters.hpp"

using namespace dimer;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("CRITERION %d: %s — %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

// --- criterion 1: dephasing cross-term identity over random parameter draws ---
void criterion_rate_identity() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(1234567);
    std::uniform_real_distribution<double> detuning(-20.0, 20.0);
    std::uniform_real_distribution<double> hopping(0.1, 10.0);
    std::uniform_real_distribution<double> coupling(0.0, 0.1);
    std::uniform_real_distribution<double> temperature(0.0, 100.0);
    std::uniform_real_distribution<double> relaxation(0.0, 5.0);

    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        DimerParams p = DimerParams::with_detuning(detuning(rng), hopping(rng));
        p.eta1 = coupling(rng);
        p.eta2 = coupling(rng);
        p.temp1 = temperature(rng);
        p.temp2 = temperature(rng);
        p.gamma1 = relaxation(rng);
        p.gamma2 = relaxation(rng);
        const Eigensystem eig = eigensystem(p);
        const RateSet r = effective_rates(p, eig);
        const double ct = std::cos(eig.theta);
        const double dev =
            std::abs(r.pi2 + r.pi3 - 2.0 * r.x23 - ct * ct * r.pi1) / std::max(1.0, r.pi1);
        worst = std::max(worst, dev);
    }
    const double elapsed = seconds_since(start);
    report(1, worst <= 1e-13 && elapsed < 1.0,
           fmt("dephasing cross-term identity, 1000 draws (max dev %.2e, tol 1e-13; %.3f s < 1 s)",
               worst, elapsed));
}

// --- criterion 2: symmetric steady transfer on resonance ---
void criterion_resonant_steady() {
    double worst = 0.0;
    for (const double tm : {0.0, 0.1, 10.0, 100.0}) {
        DimerParams p = DimerParams::with_detuning(0.0, 5.0);
        p.eta1 = p.eta2 = 0.005;
        p.set_temperatures(tm);
        worst = std::max(worst, std::abs(steady_transfer_probability(p) - 0.5));
    }
    report(2, worst <= 1e-12,
           fmt("P_ss = 1/2 on resonance for T_m in {0, 0.1, 10, 100} (max dev %.2e, tol 1e-12)",
               worst));
}

// --- criterion 3: zero-temperature steady transfer ---
void criterion_cold_steady() {
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double theta = 0.1 * k * kPi;
        const DimerParams p = DimerParams::with_mixing_angle(theta, 5.0);
        const double c = std::cos(0.5 * theta);
        worst = std::max(worst, std::abs(steady_transfer_probability(p) - c * c));
    }
    report(3, worst <= 1e-12,
           fmt("P_ss = cos^2(theta/2) at T = 0 over 9 angles (max dev %.2e, tol 1e-12)", worst));
}

// --- criterion 4: steady concurrence, three independent routes ---
void criterion_steady_concurrence() {
    const auto start = std::chrono::steady_clock::now();
    double worst_form = 0.0, worst_long = 0.0, worst_kernel = 0.0;
    for (int k = 1; k <= 9; ++k) {
        for (const double tm : {0.1, 1.0, 10.0, 100.0}) {
            DimerParams p = DimerParams::with_mixing_angle(0.1 * k * kPi, 5.0);
            p.eta1 = p.eta2 = 0.005;
            p.set_temperatures(tm);
            const Eigensystem eig = eigensystem(p);
            const RateSet r = effective_rates(p, eig);

            const double analytic = steady_concurrence(p);
            worst_form =
                std::max(worst_form, std::abs(analytic - std::sin(eig.theta) / r.n_eps));

            TauMoments donor;
            donor.t22 = 1.0;
            const double t_long = 25.0 / r.relaxation_sum();
            worst_long = std::max(
                worst_long,
                std::abs(2.0 * std::abs(tau23_evolution(donor, p, t_long)) - analytic));

            const Liouvillian lio = build_liouvillian(p);
            const DensityMatrix bare = steady_state(lio, DensityMatrix::donor_excited())
                                           .in_basis(Basis::Bare, eig.theta);
            worst_kernel =
                std::max(worst_kernel, std::abs(wootters_concurrence(bare) - analytic));
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass =
        worst_form <= 1e-7 && worst_long <= 1e-7 && worst_kernel <= 1e-7 && elapsed < 10.0;
    report(4, pass,
           fmt("C_ss = sin(theta)/N on the 9x4 grid: formula dev %.2e, long-time dev %.2e, "
               "kernel dev %.2e (tol 1e-7; %.2f s < 10 s)",
               worst_form, worst_long, worst_kernel, elapsed));
}

// --- criterion 5: closed forms versus adaptive propagation on the default grid ---
void criterion_cross_validation() {
    const auto start = std::chrono::steady_clock::now();
    const ValidationReport r = cross_validate(ValidationGrid::default_grid());
    const double elapsed = seconds_since(start);
    const double worst_dynamics =
        std::max({r.population.max_dev, r.coherence.max_dev, r.transfer.max_dev,
                  r.concurrence.max_dev});
    const bool pass = r.pass && worst_dynamics < 1e-6 && elapsed < 60.0;
    report(5, pass,
           fmt("analytic vs numeric on the default grid, %d points: dynamics dev %.2e < 1e-6, "
               "steady dev %.2e < 1e-7 (%.2f s < 60 s)",
               r.points, worst_dynamics,
               std::max(r.steady_transfer.max_dev, r.steady_concurrence.max_dev), elapsed));
}

// --- criterion 6: invariants along propagated trajectories ---
void criterion_invariants() {
    double trace = 0.0, herm = 0.0, eig_floor = 0.0, off_x = 0.0;
    for (const double theta : {0.1 * kPi, 0.5 * kPi, 0.8 * kPi}) {
        for (const double tm : {0.1, 100.0}) {
            DimerParams p = DimerParams::with_mixing_angle(theta, 5.0);
            p.eta1 = p.eta2 = 0.005;
            p.set_temperatures(tm, 0.5 * tm);
            const Liouvillian lio = build_liouvillian(p);
            propagate_sampled(DensityMatrix::donor_excited(), lio, {2.5, 5.0, 10.0},
                              [&](std::size_t, const DensityMatrix& state) {
                                  trace = std::max(trace, state.trace_error());
                                  herm = std::max(herm, state.hermiticity_error());
                                  eig_floor = std::min(eig_floor, state.min_eigenvalue());
                                  const DensityMatrix bare =
                                      state.in_basis(Basis::Bare, lio.eig.theta);
                                  for (int i = 0; i < 4; ++i)
                                      for (int j = 0; j < 4; ++j)
                                          if (i != j && i + j != 3)
                                              off_x = std::max(off_x, std::abs(bare(i, j)));
                              });
        }
    }
    const bool pass = trace < 1e-10 && herm < 1e-10 && eig_floor > -1e-9 && off_x < 1e-9;
    report(6, pass,
           fmt("propagation invariants: trace drift %.2e < 1e-10, hermiticity %.2e < 1e-10, "
               "min eigenvalue %.2e > -1e-9, off-X leakage %.2e < 1e-9",
               trace, herm, eig_floor, off_x));
}

// --- criterion 7: insensitivity to the bath temperature difference ---
void criterion_temperature_difference() {
    auto p_ss = [](double tm, double dt) {
        DimerParams p = DimerParams::with_mixing_angle(0.3 * kPi, 5.0);
        p.eta1 = p.eta2 = 0.005;
        p.set_temperatures(tm, dt);
        return steady_transfer_probability(p);
    };
    const double dev_hot = std::abs(p_ss(100.0, 100.0) - p_ss(100.0, 0.0));
    const double dev_cold = std::abs(p_ss(0.01, 0.01) - p_ss(0.01, 0.0));
    const bool pass = dev_hot < 1e-3 && dev_cold < 1e-6;
    report(7, pass,
           fmt("P_ss shift from dT = T_m: %.2e < 1e-3 at T_m = 100, %.2e < 1e-6 at T_m = 0.01",
               dev_hot, dev_cold));
}

// --- criterion 8: figure datasets — determinism plus qualitative checks ---
void criterion_figures() {
    // a) regeneration is byte-for-byte deterministic
    bool deterministic = true;
    const fs::path dir_a = fs::temp_directory_path() / "dimer_accept_fig_a";
    const fs::path dir_b = fs::temp_directory_path() / "dimer_accept_fig_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    for (int id = 2; id <= 11; ++id) {
        const auto paths_a = run_figure(id, dir_a.string(), FileFormat::Csv);
        const auto paths_b = run_figure(id, dir_b.string(), FileFormat::Csv);
        if (paths_a.size() != paths_b.size()) deterministic = false;
        for (std::size_t i = 0; deterministic && i < paths_a.size(); ++i) {
            std::ifstream a(paths_a[i], std::ios::binary), b(paths_b[i], std::ios::binary);
            std::ostringstream sa, sb;
            sa << a.rdbuf();
            sb << b.rdbuf();
            if (sa.str() != sb.str() || sa.str().empty()) deterministic = false;
        }
    }
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);

    // b) resonant transfer curves end near 1/2
    double tail_dev = 0.0;
    for (const TimeSeriesSpec& spec : figure_time_series(2)) {
        const auto points = generate_time_series(spec);
        tail_dev = std::max(tail_dev, std::abs(points.back().p - 0.5));
    }
    const bool tails_ok = tail_dev < 1e-2;

    // c) high-temperature steady-transfer sweep flat at 1/2
    double flat_dev = 0.0;
    for (const SweepSpec& spec : figure_sweeps(6)) {
        if (spec.base.mean_temperature() != 100.0) continue;
        for (const SweepRecord& rec : generate_sweep(spec))
            flat_dev = std::max(flat_dev, std::abs(rec.p_ss - 0.5));
    }
    const bool flat_ok = flat_dev < 1e-2;

    // d) low-temperature concurrence approaches sin(theta)
    double limit_dev = 0.0;
    for (const TimeSeriesSpec& spec : figure_time_series(9)) {
        const Eigensystem eig = eigensystem(spec.params);
        const double st = std::sin(eig.theta);
        const double gamma_mean = 0.5 * (spec.params.gamma1 + spec.params.gamma2);
        const double t_long = 1000.0 / (st * st * gamma_mean);
        limit_dev =
            std::max(limit_dev, std::abs(concurrence_transient(t_long, spec.params) - st));
    }
    const bool limit_ok = limit_dev < 1e-2;

    const bool pass = deterministic && tails_ok && flat_ok && limit_ok;
    report(8, pass,
           fmt("figure datasets [regeneration %s; resonant tails %s (dev %.2e); high-T "
               "flatness %s (max |P_ss - 1/2| = %.2e vs 1e-2, holds only for theta within "
               "[0.39pi, 0.61pi]); low-T concurrence limit %s (dev %.2e)]",
               deterministic ? "PASS" : "FAIL", tails_ok ? "PASS" : "FAIL", tail_dev,
               flat_ok ? "PASS" : "FAIL", flat_dev, limit_ok ? "PASS" : "FAIL", limit_dev));
}

// --- criterion 9: Wootters concurrence versus the X-state formula ---
void criterion_wootters_oracle() {
    std::mt19937 rng(987654321);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double w[4];
        double sum = 0.0;
        for (double& v : w) sum += (v = unit(rng) + 1e-9);
        Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
        for (int k = 0; k < 4; ++k) rho(k, k) = w[k] / sum;
        const std::complex<double> inner = std::polar(
            0.999 * unit(rng) * std::sqrt(rho(1, 1).real() * rho(2, 2).real()),
            2.0 * kPi * unit(rng));
        const std::complex<double> outer = std::polar(
            0.999 * unit(rng) * std::sqrt(rho(0, 0).real() * rho(3, 3).real()),
            2.0 * kPi * unit(rng));
        rho(1, 2) = inner;
        rho(2, 1) = std::conj(inner);
        rho(0, 3) = outer;
        rho(3, 0) = std::conj(outer);
        const DensityMatrix state(rho, Basis::Bare);
        worst = std::max(worst,
                         std::abs(wootters_concurrence(state) - x_state_concurrence(state)));
    }
    report(9, worst < 1e-10,
           fmt("Wootters vs X-state formula on 10^4 random X-states (max dev %.2e, tol 1e-10)",
               worst));
}

}  // namespace

int main() {
    criterion_rate_identity();
    criterion_resonant_steady();
    criterion_cold_steady();
    criterion_steady_concurrence();
    criterion_cross_validation();
    criterion_invariants();
    criterion_temperature_difference();
    criterion_figures();
    criterion_wootters_oracle();
    std::printf("ACCEPTANCE: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
