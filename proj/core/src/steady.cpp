#include "dimer/steady.hpp"

#include <cmath>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

constexpr double kKernelTol = 1e-10;     // eigenvalues below this are kernel
constexpr double kAmbiguousTol = 1e-8;   // ... and none may sit in (1e-10, 1e-8)
constexpr double kResidualTol = 1e-10;

using MatrixX = Eigen::MatrixXcd;

MatrixX null_basis(const Matrix16cd& gen, double scale, const char* side) {
    Eigen::ComplexEigenSolver<Matrix16cd> es(gen);
    if (es.info() != Eigen::Success)
        throw KernelResolutionFailure(std::string("steady_state: eigensolver failed on ") + side);
    int n_kernel = 0, n_loose = 0;
    for (int i = 0; i < 16; ++i) {
        const double mag = std::abs(es.eigenvalues()(i));
        if (mag <= kKernelTol * scale) ++n_kernel;
        if (mag <= kAmbiguousTol * scale) ++n_loose;
    }
    if (n_kernel == 0 || n_kernel != n_loose)
        throw KernelResolutionFailure("steady_state: kernel dimension ambiguous (" +
                                      std::to_string(n_kernel) + " vs " +
                                      std::to_string(n_loose) + " on " + side + ")");
    MatrixX basis(16, n_kernel);
    int col = 0;
    for (int i = 0; i < 16; ++i)
        if (std::abs(es.eigenvalues()(i)) <= kKernelTol * scale)
            basis.col(col++) = es.eigenvectors().col(i);
    return basis;
}

}  // namespace

DensityMatrix steady_state(const Liouvillian& lio, const DensityMatrix& rho0) {
    const DensityMatrix start = rho0.in_basis(Basis::Eigen, lio.eig.theta);

    const double scale = std::max(1.0, lio.matrix.cwiseAbs().maxCoeff());
    const MatrixX right = null_basis(lio.matrix, scale, "L");
    const MatrixX left = null_basis(lio.matrix.adjoint(), scale, "L†");
    if (left.cols() != right.cols())
        throw KernelResolutionFailure("steady_state: left/right kernel dimensions differ");

    // Conserved-quantity projection: coefficients of vec(ρ0) on the kernel in
    // the biorthogonal pairing ⟨w_i, r_j⟩.
    const MatrixX pairing = left.adjoint() * right;
    const Eigen::FullPivLU<MatrixX> lu(pairing);
    if (!lu.isInvertible())
        throw KernelResolutionFailure("steady_state: biorthogonal pairing is singular");
    const Vector16cd projected = right * lu.solve(left.adjoint() * vectorize(start.matrix()));

    const double residual = (lio.matrix * projected).cwiseAbs().maxCoeff();
    if (residual > kResidualTol * scale)
        throw InvariantViolation("steady_state: residual " + std::to_string(residual));

    Eigen::Matrix4cd rho = unvectorize(projected);
    rho = 0.5 * (rho + rho.adjoint());  // kernel vectors are only pairwise-conjugate to roundoff
    const double trace = rho.trace().real();
    if (std::abs(trace - 1.0) > 1e-8)
        throw InvariantViolation("steady_state: projected trace " + std::to_string(trace));
    rho /= trace;
    return DensityMatrix(rho, Basis::Eigen);
}

}  // namespace dimer
