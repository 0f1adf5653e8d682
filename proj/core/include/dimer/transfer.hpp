// transfer.hpp — excitation transfer probability P(t) from the donor-excited
// initial state |eg⟩, in closed form.
//
// P(t) = [Γ32 sin²(θ/2) + Γ23 cos²(θ/2)]/Γ
//      + cosθ [Γ32 sin²(θ/2) − Γ23 cos²(θ/2)]/Γ · e^{−2Γt}
//      − ½ sin²θ cos(εt) e^{−(Γ + cos²θ·Π1)t},        Γ = Γ23 + Γ32.
// The three named regimes carry dedicated simplified forms.

#pragma once

#include "dimer/model.hpp"

namespace dimer {

enum class Regime {
    Resonant,         // Δω = 0: P(t) = ½(1 − cos(2ξt) e^{−N(2ξ)γt/2})
    HighTemperature,  // T ≫ ε: damped oscillation about ½
    LowTemperature,   // T ≈ 0: saturation at cos²(θ/2)
};

// General three-term closed form. Requires t >= 0; returns a value in [0, 1]
// (tiny negative excursions from cancellation at t = 0 clamp to 0; anything
// below −1e-12 or above 1 + 1e-12 throws InvariantViolation).
double transfer_probability(double t, const DimerParams& params);

// Dedicated closed form of the given regime. Resonant requires Δω = 0
// (θ = π/2); the simplified forms assume γ1 = γ2 and use mean couplings.
double transfer_probability_limit(Regime regime, double t, const DimerParams& params);

// Steady transfer probability P_ss = ½ + cosθ·(Γ23 − Γ32)/(2Γ); equals
// ½(1 + cosθ/N(ε)) for equal site couplings. Throws DegenerateRelaxation
// when Γ = 0.
double steady_transfer_probability(const DimerParams& params);

// High-temperature expansion ½(1 + ε cosθ/(2 T_m)); valid for T_m ≫ ε.
double steady_transfer_probability_high_t(const DimerParams& params);

}  // namespace dimer
