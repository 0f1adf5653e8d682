#include "dimer/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

constexpr double kDriftTol = 1e-10;   // trace / Hermiticity drift bound
constexpr double kSafety = 0.9;
constexpr double kShrinkFloor = 0.2;
constexpr double kGrowCeil = 5.0;

// Dormand–Prince 5(4) tableau. The last stage row equals the 5th-order
// weights (FSAL), and err[] holds b5 − b4.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

double error_norm(const Vector16cd& err, const Vector16cd& y0, const Vector16cd& y1,
                  const IntegratorConfig& cfg) {
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) {
        const double scale =
            cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        const double q = std::abs(err(i)) / scale;
        sum += q * q;
    }
    return std::sqrt(sum / 16.0);
}

double initial_step(const Matrix16cd& gen, const Vector16cd& y0, double t_span,
                    const IntegratorConfig& cfg) {
    const Vector16cd f0 = gen * y0;
    double d0 = 0.0, d1 = 0.0;
    for (int i = 0; i < 16; ++i) {
        const double scale = cfg.abs_tol + cfg.rel_tol * std::abs(y0(i));
        d0 += std::norm(y0(i)) / (scale * scale);
        d1 += std::norm(f0(i)) / (scale * scale);
    }
    d0 = std::sqrt(d0 / 16.0);
    d1 = std::sqrt(d1 / 16.0);
    double h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    return std::min({h, t_span, cfg.max_step});
}

// Integrates y from t to t_end in place.
void advance(const Matrix16cd& gen, Vector16cd& y, double t, double t_end,
             const IntegratorConfig& cfg) {
    if (t_end <= t) return;
    double h = initial_step(gen, y, t_end - t, cfg);
    Vector16cd k1 = gen * y;
    while (t < t_end) {
        h = std::min(h, t_end - t);
        if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))
            throw StepSizeUnderflow("propagate: step " + std::to_string(h) + " underflow at t = " +
                                    std::to_string(t));

        const Vector16cd k2 = gen * (y + h * (kA21 * k1));
        const Vector16cd k3 = gen * (y + h * (kA31 * k1 + kA32 * k2));
        const Vector16cd k4 = gen * (y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
        const Vector16cd k5 = gen * (y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
        const Vector16cd k6 =
            gen * (y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
        const Vector16cd y1 = y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
        const Vector16cd k7 = gen * y1;
        const Vector16cd err =
            h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);

        const double en = error_norm(err, y, y1, cfg);
        if (en <= 1.0) {
            t += h;
            y = y1;
            k1 = k7;  // first-same-as-last
        }
        const double factor = en > 0.0 ? kSafety * std::pow(en, -0.2)
                                       : kGrowCeil;
        h = std::min(cfg.max_step, h * std::clamp(factor, kShrinkFloor, kGrowCeil));
    }
}

// Drift checks per the propagation contract, then exact re-Hermitisation and
// trace normalisation (adjustment ≤ the checked drift; positivity untouched).
DensityMatrix canonicalize(const Eigen::Matrix4cd& raw) {
    const double herm = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kDriftTol)
        throw InvariantViolation("propagate: Hermiticity drift " + std::to_string(herm));
    const std::complex<double> tr = raw.trace();
    if (std::abs(tr - std::complex<double>(1.0, 0.0)) > kDriftTol)
        throw InvariantViolation("propagate: trace drift " + std::to_string(std::abs(tr - 1.0)));
    Eigen::Matrix4cd rho = 0.5 * (raw + raw.adjoint());
    rho /= rho.trace().real();
    return DensityMatrix(rho, Basis::Eigen);  // constructor enforces the eigenvalue floor
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("IntegratorConfig: tolerances must be > 0");
    if (!(max_step > 0.0)) throw std::invalid_argument("IntegratorConfig: max_step must be > 0");
}

DensityMatrix propagate(const DensityMatrix& rho0, const Liouvillian& lio, double t,
                        const IntegratorConfig& config) {
    if (t < 0.0) throw std::invalid_argument("propagate: t must be >= 0");
    config.validate();
    const DensityMatrix start = rho0.in_basis(Basis::Eigen, lio.eig.theta);
    Vector16cd y = vectorize(start.matrix());
    advance(lio.matrix, y, 0.0, t, config);
    return canonicalize(unvectorize(y));
}

void propagate_sampled(const DensityMatrix& rho0, const Liouvillian& lio,
                       const std::vector<double>& times,
                       const std::function<void(std::size_t, const DensityMatrix&)>& observe,
                       const IntegratorConfig& config) {
    config.validate();
    if (times.empty()) throw std::invalid_argument("propagate_sampled: empty time grid");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0 || (i > 0 && times[i] <= times[i - 1]))
            throw std::invalid_argument("propagate_sampled: times must be ascending and >= 0");
    }
    const DensityMatrix start = rho0.in_basis(Basis::Eigen, lio.eig.theta);
    Vector16cd y = vectorize(start.matrix());
    double t = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        advance(lio.matrix, y, t, times[i], config);
        t = times[i];
        observe(i, canonicalize(unvectorize(y)));
    }
}

}  // namespace dimer
