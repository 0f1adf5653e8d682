#include "dimer/wootters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

constexpr double kEigFloor = -1e-9;

// Clamps the tiny negative eigenvalues a valid state may acquire from roundoff
// or integrator error; genuine negativity is a bug upstream.
double floor_eigenvalue(double lambda, const char* where) {
    if (lambda < kEigFloor)
        throw NegativeEigenvalue(std::string(where) + ": eigenvalue " + std::to_string(lambda));
    return std::max(0.0, lambda);
}

}  // namespace

double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.basis() != Basis::Bare)
        throw std::invalid_argument("wootters_concurrence: needs a Bare-tagged matrix");
    const Eigen::Matrix4cd& m = rho.matrix();

    Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();  // σ_y ⊗ σ_y
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const Eigen::Matrix4cd tilde = flip * m.conjugate() * flip;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
    Eigen::Vector4d lam = es.eigenvalues();
    for (int i = 0; i < 4; ++i) lam(i) = std::sqrt(floor_eigenvalue(lam(i), "wootters_concurrence(rho)"));
    const Eigen::Matrix4cd sqrt_rho =
        es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();

    // √ρ ρ̃ √ρ is Hermitian PSD with the same spectrum as ρρ̃.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es2(sqrt_rho * tilde * sqrt_rho,
                                                        Eigen::EigenvaluesOnly);
    Eigen::Vector4d s = es2.eigenvalues();
    std::array<double, 4> root;
    for (int i = 0; i < 4; ++i)
        root[i] = std::sqrt(floor_eigenvalue(s(i), "wootters_concurrence(rho*rho~)"));
    std::sort(root.begin(), root.end(), std::greater<>());
    return std::max(0.0, root[0] - root[1] - root[2] - root[3]);
}

}  // namespace dimer
