#include "dimer/transfer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

constexpr double kClampTol = 1e-12;

double clamp_probability(double p, const char* where) {
    if (p < -kClampTol || p > 1.0 + kClampTol)
        throw InvariantViolation(std::string(where) + ": probability " + std::to_string(p) +
                                 " outside [0,1]");
    return std::min(1.0, std::max(0.0, p));
}

void require_nonnegative_time(double t, const char* where) {
    if (t < 0.0) throw std::invalid_argument(std::string(where) + ": t must be >= 0");
}

}  // namespace

double transfer_probability(double t, const DimerParams& params) {
    require_nonnegative_time(t, "transfer_probability");
    const Eigensystem eig = eigensystem(params);
    const RateSet r = effective_rates(params, eig);
    const double c2 = std::cos(0.5 * eig.theta) * std::cos(0.5 * eig.theta);
    const double s2 = std::sin(0.5 * eig.theta) * std::sin(0.5 * eig.theta);
    const double ct = std::cos(eig.theta);
    const double sin2 = std::sin(eig.theta) * std::sin(eig.theta);
    const double gamma = r.relaxation_sum();

    const double osc = -0.5 * sin2 * std::cos(eig.epsilon * t) *
                       std::exp(-(gamma + ct * ct * r.pi1) * t);
    double p;
    if (gamma > 0.0) {
        p = (r.gamma32 * s2 + r.gamma23 * c2) / gamma +
            ct * (r.gamma32 * s2 - r.gamma23 * c2) / gamma * std::exp(-2.0 * gamma * t) + osc;
    } else {
        // Γ = 0: populations frozen; only the coherence term evolves (pure dephasing).
        p = 0.5 * sin2 + osc;
    }
    return clamp_probability(p, "transfer_probability");
}

double transfer_probability_limit(Regime regime, double t, const DimerParams& params) {
    require_nonnegative_time(t, "transfer_probability_limit");
    const Eigensystem eig = eigensystem(params);
    const RateSet r = effective_rates(params, eig);
    const double gamma_mean = 0.5 * (params.gamma1 + params.gamma2);
    const double chi_mean = 0.5 * (r.chi1 + r.chi2);
    const double ct = std::cos(eig.theta);
    const double st = std::sin(eig.theta);

    double p = 0.0;
    switch (regime) {
        case Regime::Resonant: {
            if (std::abs(ct) > 1e-12)
                throw std::invalid_argument("transfer_probability_limit: Resonant requires delta_omega = 0");
            p = 0.5 * (1.0 - std::cos(eig.epsilon * t) *
                             std::exp(-0.5 * r.n_eps * gamma_mean * t));
            break;
        }
        case Regime::HighTemperature: {
            const double relax = st * st * r.n_eps * gamma_mean;
            p = 0.5 - 0.5 * ct * ct * std::exp(-relax * t) -
                0.5 * st * st * std::cos(eig.epsilon * t) *
                    std::exp(-(2.0 * ct * ct * chi_mean + 0.5 * relax) * t);
            break;
        }
        case Regime::LowTemperature: {
            const double c2 = std::cos(0.5 * eig.theta) * std::cos(0.5 * eig.theta);
            p = c2 * (1.0 - ct * std::exp(-st * st * gamma_mean * t)) -
                0.5 * st * st * std::cos(eig.epsilon * t) *
                    std::exp(-0.5 * st * st * gamma_mean * t);
            break;
        }
    }
    return clamp_probability(p, "transfer_probability_limit");
}

double steady_transfer_probability(const DimerParams& params) {
    const Eigensystem eig = eigensystem(params);
    const RateSet r = effective_rates(params, eig);
    const double gamma = r.relaxation_sum();
    if (gamma <= 0.0)
        throw DegenerateRelaxation("steady_transfer_probability: gamma23 + gamma32 = 0");
    const double p = 0.5 + 0.5 * std::cos(eig.theta) * r.relaxation_gap() / gamma;
    return clamp_probability(p, "steady_transfer_probability");
}

double steady_transfer_probability_high_t(const DimerParams& params) {
    const double t_mean = params.mean_temperature();
    if (!(t_mean > 0.0))
        throw std::invalid_argument("steady_transfer_probability_high_t: mean temperature must be > 0");
    const Eigensystem eig = eigensystem(params);
    const double p = 0.5 * (1.0 + eig.epsilon * std::cos(eig.theta) / (2.0 * t_mean));
    return clamp_probability(p, "steady_transfer_probability_high_t");
}

}  // namespace dimer
