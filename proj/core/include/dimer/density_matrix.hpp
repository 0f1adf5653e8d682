// density_matrix.hpp — validated 4×4 density matrix with a basis tag.
//
// Two orderings are used throughout:
//   Bare  : |ee⟩, |eg⟩, |ge⟩, |gg⟩ (site product basis)
//   Eigen : |1⟩, |2⟩, |3⟩, |4⟩    (single-excitation eigenbasis, see model.hpp)
// The bases are related by the real rotation U(θ) acting on the middle block;
// columns of U are the eigenstates expressed in bare coordinates.

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dimer {

enum class Basis { Bare, Eigen };

class DensityMatrix {
  public:
    // Validates on construction: Hermitian and unit trace to 1e-12 (relative),
    // eigenvalues >= −1e-9 (integrator error allowance). Throws
    // InvariantViolation otherwise. Positivity is monitored, never repaired.
    DensityMatrix(const Eigen::Matrix4cd& rho, Basis basis);

    const Eigen::Matrix4cd& matrix() const { return rho_; }
    Basis basis() const { return basis_; }

    std::complex<double> operator()(int row, int col) const { return rho_(row, col); }

    // Basis change with mixing angle theta; returns *this unchanged if already
    // in the target basis. Round trips are exact to rotation roundoff.
    DensityMatrix in_basis(Basis target, double theta) const;

    double trace_error() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

    // Pure bare basis state |index⟩⟨index| with index in {0:ee, 1:eg, 2:ge, 3:gg}.
    static DensityMatrix pure_bare(int index);
    // Pure eigenstate |index+1⟩⟨index+1| tagged Basis::Eigen.
    static DensityMatrix pure_eigenstate(int index);
    // Initial condition used by every transfer/entanglement scenario: site 1
    // excited, site 2 in its ground state (|eg⟩⟨eg|, bare).
    static DensityMatrix donor_excited();

  private:
    Eigen::Matrix4cd rho_;
    Basis basis_;
};

// Rotation from eigen to bare coordinates: ρ_bare = U ρ_eigen U†.
Eigen::Matrix4d eigenbasis_rotation(double theta);

// Probability that site 2 holds an excitation: ⟨ee|ρ|ee⟩ + ⟨ge|ρ|ge⟩.
// Requires a Bare-tagged matrix.
double acceptor_excitation_probability(const DensityMatrix& rho);

}  // namespace dimer
