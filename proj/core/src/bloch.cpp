#include "dimer/bloch.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

using std::complex;

constexpr double kMomentTol = 1e-12;

void check_population(double p, const char* name) {
    if (p < -kMomentTol || p > 1.0 + kMomentTol)
        throw InvariantViolation(std::string(name) + " outside [0,1]");
}

}  // namespace

SigmaMoments SigmaMoments::donor_excited(double theta) {
    SigmaMoments m;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    m.s22 = c * c;
    m.s33 = s * s;
    m.s32 = complex<double>(-c * s, 0.0);  // −sin(θ)/2
    return m;
}

void SigmaMoments::validate() const {
    check_population(s11, "s11");
    check_population(s22, "s22");
    check_population(s33, "s33");
    check_population(s44, "s44");
    if (std::abs(s11 + s22 + s33 + s44 - 1.0) > kMomentTol)
        throw InvariantViolation("sigma moments: populations do not sum to 1");
    if (std::norm(s32) > s22 * s33 + kMomentTol)
        throw InvariantViolation("sigma moments: |s32|^2 exceeds s22*s33");
}

void TauMoments::validate() const {
    check_population(t11, "t11");
    check_population(t22, "t22");
    check_population(t33, "t33");
    check_population(t44, "t44");
    if (std::abs(t11 + t22 + t33 + t44 - 1.0) > kMomentTol)
        throw InvariantViolation("tau moments: populations do not sum to 1");
    if (std::norm(t23) > t22 * t33 + kMomentTol)
        throw InvariantViolation("tau moments: |t23|^2 exceeds t22*t33");
}

SigmaMoments sigma_from_tau(const TauMoments& tau, double theta) {
    const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double st = std::sin(theta);
    const complex<double> t32 = std::conj(tau.t23);

    SigmaMoments m;
    m.s11 = tau.t11;
    m.s44 = tau.t44;
    m.s22 = c2 * tau.t22 + s2 * tau.t33 + st * tau.t23.real();
    m.s33 = s2 * tau.t22 + c2 * tau.t33 - st * tau.t23.real();
    // ⟨σ23⟩ = ½sinθ (t33 − t22) + cos²(θ/2) t23 − sin²(θ/2) t32; stored as s32 = conj.
    const complex<double> s23 = 0.5 * st * (tau.t33 - tau.t22) + c2 * tau.t23 - s2 * t32;
    m.s32 = std::conj(s23);
    return m;
}

TauMoments tau_from_sigma(const SigmaMoments& sigma, double theta) {
    const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double st = std::sin(theta);
    const complex<double> s23 = std::conj(sigma.s32);

    TauMoments m;
    m.t11 = sigma.s11;
    m.t44 = sigma.s44;
    m.t22 = c2 * sigma.s22 + s2 * sigma.s33 - st * sigma.s32.real();
    m.t33 = s2 * sigma.s22 + c2 * sigma.s33 + st * sigma.s32.real();
    m.t23 = -s2 * sigma.s32 + c2 * s23 + 0.5 * st * (sigma.s22 - sigma.s33);
    return m;
}

SigmaMoments bloch_transient(const SigmaMoments& init, const RateSet& rates,
                             const Eigensystem& eig, double t) {
    if (t < 0.0) throw std::invalid_argument("bloch_transient: t must be >= 0");
    init.validate();

    const double gamma = rates.relaxation_sum();
    SigmaMoments m;
    m.s11 = init.s11;
    m.s44 = init.s44;
    if (gamma > 0.0) {
        const double pop = init.s22 + init.s33;
        const double decay = std::exp(-2.0 * gamma * t);
        m.s22 = (pop * rates.gamma32 + (init.s22 * rates.gamma23 - init.s33 * rates.gamma32) * decay) / gamma;
        m.s33 = (pop * rates.gamma23 + (init.s33 * rates.gamma32 - init.s22 * rates.gamma23) * decay) / gamma;
    } else {
        m.s22 = init.s22;  // no relaxation channel: populations frozen
        m.s33 = init.s33;
    }
    const double cos2 = std::cos(eig.theta) * std::cos(eig.theta);
    const double rate = gamma + cos2 * rates.pi1;
    m.s32 = init.s32 * std::exp(-rate * t) *
            std::exp(complex<double>(0.0, -eig.epsilon * t));
    return m;
}

SigmaMoments bloch_steady(const SigmaMoments& init, const RateSet& rates) {
    init.validate();
    const double gamma = rates.relaxation_sum();
    if (gamma <= 0.0)
        throw DegenerateRelaxation("bloch_steady: gamma23 + gamma32 = 0, steady split undefined");
    SigmaMoments m;
    m.s11 = init.s11;
    m.s44 = init.s44;
    const double pop = init.s22 + init.s33;
    m.s22 = pop * rates.gamma32 / gamma;
    m.s33 = pop * rates.gamma23 / gamma;
    m.s32 = complex<double>(0.0, 0.0);
    return m;
}

DensityMatrix to_density_matrix(const SigmaMoments& sigma) {
    sigma.validate();
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = sigma.s11;
    rho(1, 1) = sigma.s22;
    rho(2, 2) = sigma.s33;
    rho(3, 3) = sigma.s44;
    rho(1, 2) = sigma.s32;              // ⟨σ32⟩ = ⟨2|ρ|3⟩
    rho(2, 1) = std::conj(sigma.s32);
    return DensityMatrix(rho, Basis::Eigen);
}

DensityMatrix to_density_matrix(const TauMoments& tau) {
    tau.validate();
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = tau.t11;
    rho(1, 1) = tau.t22;
    rho(2, 2) = tau.t33;
    rho(3, 3) = tau.t44;
    rho(2, 1) = tau.t23;                // ⟨τ23⟩ = ⟨ge|ρ|eg⟩
    rho(1, 2) = std::conj(tau.t23);
    return DensityMatrix(rho, Basis::Bare);
}

SigmaMoments sigma_moments_of(const DensityMatrix& rho, double theta) {
    const DensityMatrix eig = rho.in_basis(Basis::Eigen, theta);
    SigmaMoments m;
    m.s11 = eig(0, 0).real();
    m.s22 = eig(1, 1).real();
    m.s33 = eig(2, 2).real();
    m.s44 = eig(3, 3).real();
    m.s32 = eig(1, 2);
    return m;
}

TauMoments tau_moments_of(const DensityMatrix& rho, double theta) {
    const DensityMatrix bare = rho.in_basis(Basis::Bare, theta);
    TauMoments m;
    m.t11 = bare(0, 0).real();
    m.t22 = bare(1, 1).real();
    m.t33 = bare(2, 2).real();
    m.t44 = bare(3, 3).real();
    m.t23 = bare(2, 1);
    return m;
}

}  // namespace dimer
