#include "dimer/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

constexpr double kHermTol = 1e-12;    // relative Hermiticity bound
constexpr double kTraceTol = 1e-12;   // |tr ρ − 1| bound
constexpr double kEigFloor = -1e-9;   // positivity floor (integrator allowance)

}  // namespace

DensityMatrix::DensityMatrix(const Eigen::Matrix4cd& rho, Basis basis)
    : rho_(rho), basis_(basis) {
    const double scale = std::max(1.0, rho_.cwiseAbs().maxCoeff());
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol * scale)
        throw InvariantViolation("DensityMatrix: not Hermitian (defect " + std::to_string(herm) + ")");
    const double tr_err = std::abs(rho_.trace() - std::complex<double>(1.0, 0.0));
    if (tr_err > kTraceTol)
        throw InvariantViolation("DensityMatrix: trace differs from 1 by " + std::to_string(tr_err));
    const double lo = min_eigenvalue();
    if (lo < kEigFloor)
        throw InvariantViolation("DensityMatrix: eigenvalue " + std::to_string(lo) +
                                 " below positivity floor");
}

double DensityMatrix::trace_error() const {
    return std::abs(rho_.trace() - std::complex<double>(1.0, 0.0));
}

double DensityMatrix::hermiticity_error() const {
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (rho_ + rho_.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::in_basis(Basis target, double theta) const {
    if (target == basis_) return *this;
    const Eigen::Matrix4d u = eigenbasis_rotation(theta);
    if (target == Basis::Bare) return DensityMatrix(u * rho_ * u.transpose(), Basis::Bare);
    return DensityMatrix(u.transpose() * rho_ * u, Basis::Eigen);
}

DensityMatrix DensityMatrix::pure_bare(int index) {
    if (index < 0 || index > 3) throw std::invalid_argument("pure_bare: index out of range");
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(index, index) = 1.0;
    return DensityMatrix(rho, Basis::Bare);
}

DensityMatrix DensityMatrix::pure_eigenstate(int index) {
    if (index < 0 || index > 3) throw std::invalid_argument("pure_eigenstate: index out of range");
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(index, index) = 1.0;
    return DensityMatrix(rho, Basis::Eigen);
}

DensityMatrix DensityMatrix::donor_excited() { return pure_bare(1); }

Eigen::Matrix4d eigenbasis_rotation(double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    Eigen::Matrix4d u = Eigen::Matrix4d::Identity();
    u(1, 1) = c;
    u(1, 2) = -s;
    u(2, 1) = s;
    u(2, 2) = c;
    return u;
}

double acceptor_excitation_probability(const DensityMatrix& rho) {
    if (rho.basis() != Basis::Bare)
        throw std::invalid_argument("acceptor_excitation_probability: needs a Bare-tagged matrix");
    return rho(0, 0).real() + rho(2, 2).real();
}

}  // namespace dimer
