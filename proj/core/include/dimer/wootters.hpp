// wootters.hpp — concurrence of an arbitrary two-qubit state.
//
// Independent of the closed forms in concurrence.hpp: works for any density
// matrix via the spin-flipped product ρρ̃, ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y),
// evaluated through the Hermitian similarity √ρ·ρ̃·√ρ so only self-adjoint
// eigenproblems are solved.

#pragma once

#include "dimer/density_matrix.hpp"

namespace dimer {

// C(ρ) = max{0, √s1 − √s2 − √s3 − √s4} with s_i the (descending) eigenvalues
// of ρρ̃. Requires a Bare-tagged matrix (the flip acts site-locally). Throws
// NegativeEigenvalue if an intermediate eigenvalue falls below −1e-9.
double wootters_concurrence(const DensityMatrix& rho);

}  // namespace dimer
