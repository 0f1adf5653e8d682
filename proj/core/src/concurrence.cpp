#include "dimer/concurrence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

using std::complex;

constexpr double kOffXTol = 1e-10;
constexpr double kClampTol = 1e-12;

double clamp_concurrence(double c, const char* where) {
    if (c > 1.0 + kClampTol)
        throw InvariantViolation(std::string(where) + ": concurrence " + std::to_string(c) +
                                 " above 1");
    return std::min(1.0, std::max(0.0, c));
}

}  // namespace

double x_state_concurrence(const DensityMatrix& rho) {
    if (rho.basis() != Basis::Bare)
        throw std::invalid_argument("x_state_concurrence: needs a Bare-tagged matrix");
    const Eigen::Matrix4cd& m = rho.matrix();
    double off_x = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool on_x = (i == j) || (i + j == 3);
            if (!on_x) off_x = std::max(off_x, std::abs(m(i, j)));
        }
    if (off_x > kOffXTol)
        throw NotXState("x_state_concurrence: off-X entry of magnitude " + std::to_string(off_x) +
                        "; use wootters_concurrence");
    const double p11 = std::max(0.0, m(0, 0).real());
    const double p22 = std::max(0.0, m(1, 1).real());
    const double p33 = std::max(0.0, m(2, 2).real());
    const double p44 = std::max(0.0, m(3, 3).real());
    const double inner = 2.0 * (std::abs(m(1, 2)) - std::sqrt(p11 * p44));
    const double outer = 2.0 * (std::abs(m(0, 3)) - std::sqrt(p22 * p33));
    return clamp_concurrence(std::max({0.0, inner, outer}), "x_state_concurrence");
}

complex<double> tau23_evolution(const TauMoments& init, const DimerParams& params, double t) {
    if (t < 0.0) throw std::invalid_argument("tau23_evolution: t must be >= 0");
    init.validate();
    const Eigensystem eig = eigensystem(params);
    const RateSet r = effective_rates(params, eig);
    const double gamma = r.relaxation_sum();

    if (gamma <= 0.0) {
        // No relaxation channel: propagate through the Bloch pipeline, where
        // only the eigenbasis coherence dephases.
        SigmaMoments s = sigma_from_tau(init, eig.theta);
        s = bloch_transient(s, r, eig, t);
        return tau_from_sigma(s, eig.theta).t23;
    }

    const double c2 = std::cos(0.5 * eig.theta) * std::cos(0.5 * eig.theta);
    const double s2 = std::sin(0.5 * eig.theta) * std::sin(0.5 * eig.theta);
    const double st = std::sin(eig.theta);
    const double sin2 = st * st;
    const double rate = std::cos(eig.theta) * std::cos(eig.theta) * r.pi1 + gamma;

    const double relax = std::exp(-2.0 * gamma * t);
    const double dephase = std::exp(-rate * t);
    const complex<double> plus = std::exp(complex<double>(0.0, eig.epsilon * t));
    const complex<double> minus = std::exp(complex<double>(0.0, -eig.epsilon * t));
    const complex<double> split = plus * c2 - minus * s2;

    const complex<double> a = 0.5 * st * (r.gamma32 - r.gamma23) / gamma +
                              st * (c2 * r.gamma23 - s2 * r.gamma32) / gamma * relax -
                              0.5 * st * dephase * split;
    const complex<double> b = 0.5 * st * (r.gamma32 - r.gamma23) / gamma +
                              st * (s2 * r.gamma23 - c2 * r.gamma32) / gamma * relax +
                              0.5 * st * dephase * split;
    const complex<double> c = (s2 * s2 * minus + c2 * c2 * plus) * dephase + 0.5 * sin2 * relax;
    const complex<double> d = 0.5 * sin2 * (relax - dephase * std::cos(eig.epsilon * t));

    return a * init.t22 + b * init.t33 + c * init.t23 + d * std::conj(init.t23);
}

double concurrence_transient(double t, const DimerParams& params) {
    TauMoments donor;
    donor.t22 = 1.0;  // |eg⟩⟨eg|
    return clamp_concurrence(2.0 * std::abs(tau23_evolution(donor, params, t)),
                             "concurrence_transient");
}

double concurrence_limit(Regime regime, double t, const DimerParams& params) {
    if (t < 0.0) throw std::invalid_argument("concurrence_limit: t must be >= 0");
    const Eigensystem eig = eigensystem(params);
    const RateSet r = effective_rates(params, eig);
    const double gamma_mean = 0.5 * (params.gamma1 + params.gamma2);
    const double chi_mean = 0.5 * (r.chi1 + r.chi2);
    const double ct = std::cos(eig.theta);
    const double st = std::sin(eig.theta);
    const double c2 = std::cos(0.5 * eig.theta) * std::cos(0.5 * eig.theta);
    const double s2 = std::sin(0.5 * eig.theta) * std::sin(0.5 * eig.theta);
    const complex<double> plus = std::exp(complex<double>(0.0, eig.epsilon * t));
    const complex<double> minus = std::exp(complex<double>(0.0, -eig.epsilon * t));
    const complex<double> split = plus * c2 - minus * s2;

    double value = 0.0;
    switch (regime) {
        case Regime::Resonant: {
            if (std::abs(ct) > 1e-12)
                throw std::invalid_argument("concurrence_limit: Resonant requires delta_omega = 0");
            const double ng = r.n_eps * gamma_mean;
            value = std::abs(complex<double>(
                (1.0 - std::exp(-ng * t)) / r.n_eps,
                std::sin(eig.epsilon * t) * std::exp(-0.5 * ng * t)));
            break;
        }
        case Regime::HighTemperature: {
            const double relax = st * st * r.n_eps * gamma_mean;
            value = std::abs(0.5 * std::sin(2.0 * eig.theta) * std::exp(-relax * t) -
                             st * split *
                                 std::exp(-(2.0 * ct * ct * chi_mean + 0.5 * relax) * t));
            break;
        }
        case Regime::LowTemperature: {
            value = st * std::abs(1.0 - 2.0 * c2 * std::exp(-st * st * gamma_mean * t) +
                                  std::exp(-0.5 * st * st * gamma_mean * t) * split);
            break;
        }
    }
    return clamp_concurrence(value, "concurrence_limit");
}

double steady_concurrence(const DimerParams& params) {
    const Eigensystem eig = eigensystem(params);
    const RateSet r = effective_rates(params, eig);
    const double gamma = r.relaxation_sum();
    if (gamma <= 0.0) throw DegenerateRelaxation("steady_concurrence: gamma23 + gamma32 = 0");
    return clamp_concurrence(std::sin(eig.theta) * r.relaxation_gap() / gamma,
                             "steady_concurrence");
}

}  // namespace dimer
