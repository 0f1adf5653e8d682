// liouvillian.hpp — the master-equation generator as a 16×16 superoperator.
//
// Built term by term from the eigenbasis equation of motion (unitary part,
// three dephasing channels Π_n, the 2↔3 relaxation pair Γ23/Γ32, and the
// three cross-dephasing couplings X_mn), acting on the column-major
// vectorisation vec(ρ) through vec(AρB) = (Bᵀ ⊗ A)·vec(ρ). Deliberately
// independent of the closed-form solutions so the two routes can be compared.

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "dimer/model.hpp"

namespace dimer {

using Matrix16cd = Eigen::Matrix<std::complex<double>, 16, 16>;
using Vector16cd = Eigen::Matrix<std::complex<double>, 16, 1>;

struct Liouvillian {
    Matrix16cd matrix = Matrix16cd::Zero();  // generator on vec(ρ), eigenbasis
    Eigensystem eig;
    RateSet rates;
};

Liouvillian build_liouvillian(const DimerParams& params);

// Column-major stacking and its inverse.
Vector16cd vectorize(const Eigen::Matrix4cd& rho);
Eigen::Matrix4cd unvectorize(const Vector16cd& vec);

// dρ/dt for an eigenbasis density matrix.
Eigen::Matrix4cd apply(const Liouvillian& lio, const Eigen::Matrix4cd& rho);

// Kronecker product of 4×4 blocks (helper shared with tests).
Matrix16cd kron4(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b);

}  // namespace dimer
