// validate.hpp — systematic agreement check between the closed-form solutions
// and the Liouvillian route over a parameter grid.
//
// For every (θ, T_mean, ΔT) point the donor-excited state is propagated
// numerically and compared against the analytic moments, transfer probability
// and concurrence on a shared time grid; steady-state values are compared
// against the kernel projection. The report records the worst deviation per
// quantity and where it occurred.

#pragma once

#include <string>
#include <vector>

#include "dimer/integrate.hpp"
#include "dimer/model.hpp"

namespace dimer {

struct ValidationGrid {
    std::vector<double> thetas;                    // mixing angles, each in (0, π)
    std::vector<double> mean_temperatures;         // T_mean values, >= 0
    std::vector<double> temperature_differences;   // ΔT values (T_{1,2} = T_mean ± ΔT/2)
    std::vector<double> times;                     // ascending sample times, first >= 0
    double xi = 5.0;
    double gamma = 1.0;                            // γ1 = γ2
    double eta = 0.005;                            // η1 = η2 (χ = 0.01·T convention)

    // When true, temperature_differences entries are fractions of T_mean
    // (so {0, 0.5} means ΔT ∈ {0, T_mean/2} at every grid point).
    bool differences_relative = false;

    // θ ∈ {0.1π, …, 0.9π}, T_mean ∈ {0.1, 1, 10, 100}, ΔT ∈ {0, T_mean/2},
    // t ∈ [0, 10] in steps of 0.25, ξ = 5, γ = 1, η = 0.005.
    static ValidationGrid default_grid();
};

struct DeviationStat {
    double max_dev = 0.0;
    double at_theta = 0.0;
    double at_t_mean = 0.0;
    double at_t_diff = 0.0;
    double at_time = -1.0;   // −1 for steady-state quantities
};

struct ValidationTolerances {
    double dynamics = 1e-6;  // populations, coherence, P(t), C(t)
    double steady = 1e-7;    // P_ss, C_ss
};

struct ValidationReport {
    DeviationStat population;          // max over s11..s44
    DeviationStat coherence;           // |Δ⟨σ32⟩|
    DeviationStat transfer;            // |ΔP(t)|
    DeviationStat concurrence;         // |ΔC(t)|
    DeviationStat steady_transfer;     // |ΔP_ss|
    DeviationStat steady_concurrence;  // |ΔC_ss|
    ValidationTolerances tolerances;
    int points = 0;                    // grid points evaluated
    bool pass = false;

    std::string to_text() const;       // flat key=value lines
    std::string to_json() const;
};

// Throws std::invalid_argument on an empty grid axis or invalid entries.
ValidationReport cross_validate(const ValidationGrid& grid,
                                const ValidationTolerances& tolerances = {},
                                const IntegratorConfig& config = {});

}  // namespace dimer
