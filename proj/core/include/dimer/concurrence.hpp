// concurrence.hpp — closed-form entanglement dynamics between the two sites.
//
// States evolving from the single-excitation sector keep the X shape in the
// bare basis, so concurrence reduces to the X-state formula; from the
// donor-excited state it collapses further to C(t) = 2|⟨τ23(t)⟩| because the
// outer populations stay zero.

#pragma once

#include <complex>

#include "dimer/bloch.hpp"
#include "dimer/density_matrix.hpp"
#include "dimer/model.hpp"
#include "dimer/transfer.hpp"

namespace dimer {

// Concurrence of an X-shaped bare-basis density matrix:
//   C = max{0, 2(|ρ23| − √(ρ11 ρ44)), 2(|ρ14| − √(ρ22 ρ33))}.
// Throws NotXState if any off-X entry exceeds 1e-10 (use wootters_concurrence
// then), and expects a Bare-tagged matrix.
double x_state_concurrence(const DensityMatrix& rho);

// Inter-site coherence ⟨τ23(t)⟩ evolved from arbitrary initial bare moments:
// the four-coefficient solution combining relaxation (rate 2Γ), decoherence
// (rate Γ + cos²θ·Π1) and precession (frequency ε).
std::complex<double> tau23_evolution(const TauMoments& init, const DimerParams& params, double t);

// C(t) = 2|⟨τ23(t)⟩| from the donor-excited initial state.
double concurrence_transient(double t, const DimerParams& params);

// Dedicated closed form of the given regime (same conventions as
// transfer_probability_limit; Resonant requires Δω = 0).
double concurrence_limit(Regime regime, double t, const DimerParams& params);

// Steady concurrence C_ss = sinθ·(Γ23 − Γ32)/Γ; equals sinθ/N(ε) for equal
// site couplings. Throws DegenerateRelaxation when Γ = 0.
double steady_concurrence(const DimerParams& params);

}  // namespace dimer
