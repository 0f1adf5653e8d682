// bloch.hpp — optical Bloch moments in the eigen and bare bases, and the
// closed-form solution of the population/coherence equations.
//
// Moment convention: ⟨σ_mn⟩ = ⟨n|ρ|m⟩, so s32 is the (row 2, col 3) matrix
// element of ρ in the eigenbasis (0-based (1,2)), and t23 is the (row |ge⟩,
// col |eg⟩) element in the bare basis. Within the single-excitation sector the
// only dynamical moments are the two middle populations and one coherence;
// s11 and s44 are conserved.

#pragma once

#include <complex>

#include "dimer/density_matrix.hpp"
#include "dimer/model.hpp"

namespace dimer {

struct SigmaMoments {
    double s11 = 0.0;                     // ⟨σ11⟩, conserved
    double s22 = 0.0;                     // ⟨σ22⟩
    double s33 = 0.0;                     // ⟨σ33⟩
    double s44 = 0.0;                     // ⟨σ44⟩, conserved
    std::complex<double> s32;             // ⟨σ32⟩ = ⟨2|ρ|3⟩; ⟨σ23⟩ is its conjugate

    // Moments of the donor-excited initial state |eg⟩ for mixing angle theta:
    // s22 = cos²(θ/2), s33 = sin²(θ/2), s32 = −sin(θ)/2.
    static SigmaMoments donor_excited(double theta);

    // Populations in [0,1] summing to 1 (1e-12) and |s32|² ≤ s22·s33 + 1e-12.
    void validate() const;
};

struct TauMoments {
    double t11 = 0.0;                     // ⟨τ11⟩ (|ee⟩ population)
    double t22 = 0.0;                     // ⟨τ22⟩ (|eg⟩ population)
    double t33 = 0.0;                     // ⟨τ33⟩ (|ge⟩ population)
    double t44 = 0.0;                     // ⟨τ44⟩ (|gg⟩ population)
    std::complex<double> t23;             // ⟨τ23⟩ = ⟨ge-row, eg-col⟩ element; t32 = conj(t23)

    void validate() const;
};

// Linear basis change between the two moment sets (exact, θ-dependent).
SigmaMoments sigma_from_tau(const TauMoments& tau, double theta);
TauMoments tau_from_sigma(const SigmaMoments& sigma, double theta);

// Closed-form solution of the Bloch equations at time t >= 0:
//   s22/s33 relax toward the Γ32:Γ23 split of their initial sum at rate 2Γ,
//   s32 precesses at ε and decays at Γ + cos²θ·Π1, s11/s44 stay put.
// Handles Γ = 0 (populations frozen) without branching artifacts.
SigmaMoments bloch_transient(const SigmaMoments& init, const RateSet& rates,
                             const Eigensystem& eig, double t);

// t → ∞ limit. Throws DegenerateRelaxation when Γ23 + Γ32 = 0.
SigmaMoments bloch_steady(const SigmaMoments& init, const RateSet& rates);

// Embeddings between moments and single-excitation density matrices.
// to_density_matrix places the conserved populations on the diagonal and the
// coherence in the middle block (all other coherences zero).
DensityMatrix to_density_matrix(const SigmaMoments& sigma);
DensityMatrix to_density_matrix(const TauMoments& tau);
SigmaMoments sigma_moments_of(const DensityMatrix& rho, double theta);
TauMoments tau_moments_of(const DensityMatrix& rho, double theta);

}  // namespace dimer
