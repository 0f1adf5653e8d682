// model.hpp — dimer parameters, single-excitation eigensystem, bath-induced rates.
//
// Two coupled two-level sites exchange one excitation through a coherent
// hopping ξ while each site sees its own Ohmic bath (relaxation γ_l plus
// diagonal dephasing with strength χ_l = 2 η_l T_l). Everything downstream is
// expressed in the single-excitation eigenbasis
//   |1⟩=|ee⟩, |2⟩=cos(θ/2)|eg⟩+sin(θ/2)|ge⟩, |3⟩=−sin(θ/2)|eg⟩+cos(θ/2)|ge⟩, |4⟩=|gg⟩
// with mixing angle tan θ = 2ξ/Δω, θ ∈ (0, π), and eigensplitting ε = 2ξ/sin θ.

#pragma once

#include <array>
#include <optional>

namespace dimer {

struct DimerParams {
    double xi = 5.0;                     // inter-site hopping, > 0
    double gamma1 = 1.0;                 // site-1 relaxation rate, >= 0
    double gamma2 = 1.0;                 // site-2 relaxation rate, >= 0
    double eta1 = 0.0;                   // site-1 Ohmic dephasing coupling, >= 0
    double eta2 = 0.0;                   // site-2 Ohmic dephasing coupling, >= 0
    double temp1 = 0.0;                  // site-1 bath temperature, >= 0
    double temp2 = 0.0;                  // site-2 bath temperature, >= 0
    std::optional<double> delta_omega;   // site detuning ω1 − ω2 (exclusive with theta)
    std::optional<double> theta;         // mixing angle in (0, π) (exclusive with delta_omega)
    std::optional<double> omega_mean;    // mean site energy; shifts E1/E4 only, no observable effect

    static DimerParams with_detuning(double delta_omega, double xi);
    static DimerParams with_mixing_angle(double theta, double xi);

    // Sets temp1/temp2 from a mean temperature and a difference: T_{1,2} = tm ± dt/2.
    void set_temperatures(double t_mean, double t_diff = 0.0);

    double mean_temperature() const { return 0.5 * (temp1 + temp2); }

    // Throws std::invalid_argument unless exactly one of delta_omega/theta is
    // set, xi > 0, θ ∈ (0, π) when given, and all rates/temperatures are >= 0.
    void validate() const;
};

struct Eigensystem {
    double theta = 0.0;                  // mixing angle in (0, π)
    double epsilon = 0.0;                // splitting E2 − E3 = 2√(Δω²/4 + ξ²) > 0
    std::array<double, 4> energies{};    // {E1, E2, E3, E4} = {ω_m, ε/2, −ε/2, −ω_m}
};

// Bath-induced rates entering the eigenbasis master equation. All follow from
// the spectral densities evaluated at the relevant transition frequencies:
// dephasing channels at ω→0 (χ_l = 2 η_l T_l), relaxation at ω = ε.
struct RateSet {
    double chi1 = 0.0;                   // site-1 dephasing strength 2 η1 T1
    double chi2 = 0.0;                   // site-2 dephasing strength 2 η2 T2
    double pi1 = 0.0;                    // |1⟩ dephasing: χ1 + χ2
    double pi2 = 0.0;                    // |2⟩ dephasing: cos⁴(θ/2)χ1 + sin⁴(θ/2)χ2
    double pi3 = 0.0;                    // |3⟩ dephasing: sin⁴(θ/2)χ1 + cos⁴(θ/2)χ2
    double gamma32 = 0.0;                // |3⟩→|2⟩ thermal pump: ¼sin²θ [γ1 n̄1(ε) + γ2 n̄2(ε)]
    double gamma23 = 0.0;                // |2⟩→|3⟩ decay: ¼sin²θ [γ1 (n̄1+1) + γ2 (n̄2+1)]
    double x12 = 0.0;                    // 1↔2 cross dephasing: cos²(θ/2)χ1 + sin²(θ/2)χ2
    double x13 = 0.0;                    // 1↔3 cross dephasing: sin²(θ/2)χ1 + cos²(θ/2)χ2
    double x23 = 0.0;                    // 2↔3 cross dephasing: ¼sin²θ (χ1 + χ2)
    double n1_eps = 0.0;                 // n̄1(ε)
    double n2_eps = 0.0;                 // n̄2(ε)
    double n_eps = 1.0;                  // thermal factor N(ε) = n̄1 + n̄2 + 1

    // Total population relaxation rate Γ = Γ23 + Γ32 (the 2↔3 Bloch sector
    // relaxes at 2Γ). Detailed balance fixes Γ23 − Γ32 = ¼sin²θ (γ1 + γ2).
    double relaxation_sum() const { return gamma23 + gamma32; }
    double relaxation_gap() const { return gamma23 - gamma32; }
};

// Mixing angle from the parameters: the branch of arctan(2ξ/Δω) lying in
// (0, π) — Δω > 0 maps below π/2, Δω < 0 above, Δω = 0 to π/2 exactly.
// Continuous across Δω = 0. Returns params.theta when set directly.
double mixing_angle(const DimerParams& params);

// Eigensystem of the single-excitation block. epsilon = 2√(Δω²/4 + ξ²)
// (equivalently 2ξ/sin θ); invariant under Δω → −Δω.
Eigensystem eigensystem(const DimerParams& params);

// Bose–Einstein occupation n̄(ω, T) = 1/(e^{ω/T} − 1). Exact 0 at T = 0;
// rejects omega <= 0 or T < 0.
double thermal_occupation(double omega, double temperature);

// All master-equation rates for the given parameters.
RateSet effective_rates(const DimerParams& params);
RateSet effective_rates(const DimerParams& params, const Eigensystem& eig);

}  // namespace dimer
