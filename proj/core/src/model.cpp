#include "dimer/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dimer {

DimerParams DimerParams::with_detuning(double delta_omega, double xi) {
    DimerParams p;
    p.delta_omega = delta_omega;
    p.xi = xi;
    p.validate();
    return p;
}

DimerParams DimerParams::with_mixing_angle(double theta, double xi) {
    DimerParams p;
    p.theta = theta;
    p.xi = xi;
    p.validate();
    return p;
}

void DimerParams::set_temperatures(double t_mean, double t_diff) {
    temp1 = t_mean + 0.5 * t_diff;
    temp2 = t_mean - 0.5 * t_diff;
    if (temp1 < 0.0 || temp2 < 0.0)
        throw std::invalid_argument("set_temperatures: |t_diff| must not exceed 2·t_mean");
}

void DimerParams::validate() const {
    if (!(xi > 0.0)) throw std::invalid_argument("DimerParams: xi must be > 0");
    if (delta_omega.has_value() == theta.has_value())
        throw std::invalid_argument("DimerParams: set exactly one of delta_omega or theta");
    if (theta && !(*theta > 0.0 && *theta < std::numbers::pi))
        throw std::invalid_argument("DimerParams: theta must lie in (0, pi)");
    if (gamma1 < 0.0 || gamma2 < 0.0)
        throw std::invalid_argument("DimerParams: relaxation rates must be >= 0");
    if (eta1 < 0.0 || eta2 < 0.0)
        throw std::invalid_argument("DimerParams: dephasing couplings must be >= 0");
    if (temp1 < 0.0 || temp2 < 0.0)
        throw std::invalid_argument("DimerParams: temperatures must be >= 0");
}

double mixing_angle(const DimerParams& params) {
    params.validate();
    if (params.theta) return *params.theta;
    // atan2(2ξ, Δω) with 2ξ > 0 realises all three branches of arctan(2ξ/Δω)
    // in (0, π) at once and is continuous through Δω = 0.
    return std::atan2(2.0 * params.xi, *params.delta_omega);
}

Eigensystem eigensystem(const DimerParams& params) {
    Eigensystem eig;
    eig.theta = mixing_angle(params);
    eig.epsilon = params.delta_omega ? std::hypot(*params.delta_omega, 2.0 * params.xi)
                                     : 2.0 * params.xi / std::sin(eig.theta);
    const double omega_m = params.omega_mean.value_or(0.0);
    eig.energies = {omega_m, 0.5 * eig.epsilon, -0.5 * eig.epsilon, -omega_m};
    return eig;
}

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) throw std::invalid_argument("thermal_occupation: omega must be > 0");
    if (temperature < 0.0) throw std::invalid_argument("thermal_occupation: temperature must be >= 0");
    if (temperature == 0.0) return 0.0;
    // expm1 keeps full precision in the classical regime ω ≪ T; for ω ≫ T the
    // exponential overflows to +inf and the quotient underflows cleanly to 0.
    return 1.0 / std::expm1(omega / temperature);
}

RateSet effective_rates(const DimerParams& params) {
    return effective_rates(params, eigensystem(params));
}

RateSet effective_rates(const DimerParams& params, const Eigensystem& eig) {
    const double c2 = std::cos(0.5 * eig.theta) * std::cos(0.5 * eig.theta);
    const double s2 = std::sin(0.5 * eig.theta) * std::sin(0.5 * eig.theta);
    const double sin2 = std::sin(eig.theta) * std::sin(eig.theta);

    RateSet r;
    r.chi1 = 2.0 * params.eta1 * params.temp1;
    r.chi2 = 2.0 * params.eta2 * params.temp2;
    r.pi1 = r.chi1 + r.chi2;
    r.pi2 = c2 * c2 * r.chi1 + s2 * s2 * r.chi2;
    r.pi3 = s2 * s2 * r.chi1 + c2 * c2 * r.chi2;
    r.n1_eps = params.temp1 > 0.0 ? thermal_occupation(eig.epsilon, params.temp1) : 0.0;
    r.n2_eps = params.temp2 > 0.0 ? thermal_occupation(eig.epsilon, params.temp2) : 0.0;
    r.gamma32 = 0.25 * sin2 * (params.gamma1 * r.n1_eps + params.gamma2 * r.n2_eps);
    r.gamma23 = 0.25 * sin2 * (params.gamma1 * (r.n1_eps + 1.0) + params.gamma2 * (r.n2_eps + 1.0));
    r.x12 = c2 * r.chi1 + s2 * r.chi2;
    r.x13 = s2 * r.chi1 + c2 * r.chi2;
    r.x23 = 0.25 * sin2 * (r.chi1 + r.chi2);
    r.n_eps = r.n1_eps + r.n2_eps + 1.0;
    return r;
}

}  // namespace dimer
