// test_transfer.cpp — transfer probability: general form, regime limits, steady values.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dimer/errors.hpp"
#include "dimer/model.hpp"
#include "dimer/transfer.hpp"

using namespace dimer;

namespace {
constexpr double kPi = std::numbers::pi;

DimerParams reference_params() {
    DimerParams p = DimerParams::with_mixing_angle(0.3 * kPi, 5.0);
    p.eta1 = p.eta2 = 0.005;
    p.set_temperatures(10.0);
    return p;
}

DimerParams asymmetric_params() {
    DimerParams p = DimerParams::with_mixing_angle(0.3 * kPi, 5.0);
    p.gamma1 = 0.7;
    p.gamma2 = 2.2;
    p.eta1 = 0.003;
    p.eta2 = 0.011;
    p.temp1 = 14.0;
    p.temp2 = 6.0;
    return p;
}
}  // namespace

TEST_CASE("transfer probability starts at zero and stays in range") {
    for (const double theta : {0.1 * kPi, 0.5 * kPi, 0.85 * kPi}) {
        DimerParams p = DimerParams::with_mixing_angle(theta, 5.0);
        p.set_temperatures(10.0);
        CHECK(transfer_probability(0.0, p) == doctest::Approx(0.0).epsilon(1e-14));
        for (double t = 0.0; t <= 8.0; t += 0.37) {
            const double v = transfer_probability(t, p);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    CHECK_THROWS_AS(transfer_probability(-0.5, reference_params()), std::invalid_argument);
}

TEST_CASE("general transfer probability at pinned points") {
    const DimerParams a = reference_params();
    CHECK(transfer_probability(0.9, a) == doctest::Approx(0.52390809296744211).epsilon(1e-13));
    CHECK(transfer_probability(0.7, a) == doctest::Approx(0.66351861156394125).epsilon(1e-13));

    DimerParams b = DimerParams::with_mixing_angle(0.6 * kPi, 5.0);
    b.eta1 = b.eta2 = 0.005;
    b.set_temperatures(100.0);
    CHECK(transfer_probability(2.5, b) == doctest::Approx(0.49188448307821951).epsilon(1e-13));

    const DimerParams g = asymmetric_params();
    CHECK(transfer_probability(1.3, g) == doctest::Approx(0.74162334067137282).epsilon(1e-13));
}

TEST_CASE("resonant limit form") {
    DimerParams p = DimerParams::with_detuning(0.0, 5.0);
    p.set_temperatures(100.0);
    CHECK(transfer_probability_limit(Regime::Resonant, 0.2, p) ==
          doctest::Approx(0.52811278910059261).epsilon(1e-13));

    // Exact against the general solution on resonance (dephasing drops out).
    p.eta1 = p.eta2 = 0.005;
    p.set_temperatures(10.0);
    for (const double t : {0.3, 0.9, 2.7}) {
        CHECK(transfer_probability_limit(Regime::Resonant, t, p) ==
              doctest::Approx(transfer_probability(t, p)).epsilon(1e-12));
    }

    CHECK_THROWS_AS(transfer_probability_limit(Regime::Resonant, 1.0, reference_params()),
                    std::invalid_argument);
    CHECK_THROWS_AS(transfer_probability_limit(Regime::Resonant, -1.0, p),
                    std::invalid_argument);
}

TEST_CASE("low-temperature limit form is exact at T = 0") {
    for (const double theta : {0.1 * kPi, 0.5 * kPi, 0.77 * kPi}) {
        const DimerParams p = DimerParams::with_mixing_angle(theta, 5.0);
        for (const double t : {0.4, 1.7, 6.0}) {
            CHECK(transfer_probability_limit(Regime::LowTemperature, t, p) ==
                  doctest::Approx(transfer_probability(t, p)).epsilon(1e-12));
        }
    }

    // Saturation value cos²(θ/2).
    const DimerParams narrow = DimerParams::with_mixing_angle(0.1 * kPi, 5.0);
    CHECK(transfer_probability_limit(Regime::LowTemperature, 1e4, narrow) ==
          doctest::Approx(0.97552825814757679).epsilon(1e-13));
}

TEST_CASE("high-temperature limit form approaches the general solution") {
    DimerParams p = DimerParams::with_mixing_angle(0.6 * kPi, 5.0);
    p.eta1 = p.eta2 = 0.005;
    p.set_temperatures(1000.0);
    for (const double t : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(std::abs(transfer_probability_limit(Regime::HighTemperature, t, p) -
                       transfer_probability(t, p)) < 2e-3);
    }
}

TEST_CASE("pure dephasing branch of the general form") {
    DimerParams p = DimerParams::with_mixing_angle(0.3 * kPi, 5.0);
    p.gamma1 = p.gamma2 = 0.0;
    p.eta1 = p.eta2 = 0.01;
    p.set_temperatures(10.0);
    const Eigensystem eig = eigensystem(p);
    const RateSet r = effective_rates(p, eig);
    const double st = std::sin(eig.theta);
    const double ct = std::cos(eig.theta);
    for (const double t : {0.0, 0.4, 1.3, 7.7}) {
        const double expect =
            0.5 * st * st *
            (1.0 - std::cos(eig.epsilon * t) * std::exp(-ct * ct * r.pi1 * t));
        CHECK(transfer_probability(t, p) == doctest::Approx(expect).epsilon(1e-14));
    }
    CHECK_THROWS_AS(steady_transfer_probability(p), DegenerateRelaxation);
}

TEST_CASE("steady transfer probability") {
    CHECK(steady_transfer_probability(reference_params()) ==
          doctest::Approx(0.66156973262694754).epsilon(1e-14));
    CHECK(steady_transfer_probability(asymmetric_params()) ==
          doctest::Approx(0.68814336743076208).epsilon(1e-14));

    // At θ = π/2 the split is symmetric regardless of temperature.
    DimerParams res = DimerParams::with_detuning(0.0, 5.0);
    for (const double tm : {0.0, 0.1, 10.0, 100.0}) {
        res.set_temperatures(tm);
        CHECK(std::abs(steady_transfer_probability(res) - 0.5) < 1e-12);
    }

    // At T = 0 the population settles entirely into the lower eigenstate.
    for (int k = 1; k <= 9; ++k) {
        const double theta = 0.1 * k * kPi;
        const DimerParams cold = DimerParams::with_mixing_angle(theta, 5.0);
        const double c = std::cos(0.5 * theta);
        CHECK(steady_transfer_probability(cold) == doctest::Approx(c * c).epsilon(1e-12));
    }
}

TEST_CASE("high-temperature steady approximation") {
    DimerParams p = reference_params();
    p.set_temperatures(100.0);
    const double approx = steady_transfer_probability_high_t(p);
    CHECK(approx == doctest::Approx(0.51816356320013402).epsilon(1e-13));
    CHECK(std::abs(approx - steady_transfer_probability(p)) < 1e-4);

    DimerParams zero = reference_params();
    zero.set_temperatures(0.0);
    CHECK_THROWS_AS(steady_transfer_probability_high_t(zero), std::invalid_argument);
}
