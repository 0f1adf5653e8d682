// steady.hpp — stationary state by spectral projection of the generator.
//
// The generator conserves ⟨σ11⟩ and ⟨σ44⟩, so its kernel is degenerate
// (dimension ≥ 3; two more stationary coherences appear at T = 0 with
// ω_m = Π1 = 0). The steady state reached from ρ0 is the biorthogonal
// projection of vec(ρ0) onto the kernel: with right/left null bases R, W it is
// R (W†R)⁻¹ W† vec(ρ0) — no long-time integration involved.

#pragma once

#include "dimer/density_matrix.hpp"
#include "dimer/liouvillian.hpp"

namespace dimer {

// Steady state reached from rho0 (either basis tag; result Basis::Eigen).
// Throws KernelResolutionFailure if the kernel dimension is ambiguous between
// tolerances 1e-10 and 1e-8 (relative to the spectral radius) or the
// biorthogonal projector is singular; InvariantViolation if the projected
// state fails the residual ‖L vec(ρ_ss)‖∞ < 1e-10 or state checks.
DensityMatrix steady_state(const Liouvillian& lio, const DensityMatrix& rho0);

}  // namespace dimer
