// test_validate.cpp — the closed-form/numeric cross-validation harness itself.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <nlohmann/json.hpp>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dimer/validate.hpp"

using namespace dimer;

namespace {
constexpr double kPi = std::numbers::pi;

ValidationGrid tiny_grid() {
    ValidationGrid grid;
    grid.thetas = {0.3 * kPi};
    grid.mean_temperatures = {10.0};
    grid.temperature_differences = {0.0};
    grid.times = {0.0, 0.5, 1.0};
    return grid;
}
}  // namespace

TEST_CASE("tiny grid agrees far below the tolerances") {
    const ValidationReport report = cross_validate(tiny_grid());
    CHECK(report.pass);
    CHECK(report.points == 1);
    CHECK(report.population.max_dev < 1e-8);
    CHECK(report.coherence.max_dev < 1e-6);
    CHECK(report.transfer.max_dev < 1e-6);
    CHECK(report.concurrence.max_dev < 1e-6);
    CHECK(report.steady_transfer.max_dev < 1e-10);
    CHECK(report.steady_concurrence.max_dev < 1e-10);
    CHECK(report.population.at_theta == doctest::Approx(0.3 * kPi));
    CHECK(report.steady_transfer.at_time == -1.0);
}

TEST_CASE("relative temperature differences expand against the mean") {
    ValidationGrid grid = tiny_grid();
    grid.temperature_differences = {0.0, 0.5};
    grid.differences_relative = true;  // ΔT = T_mean/2 at the second entry
    const ValidationReport report = cross_validate(grid);
    CHECK(report.pass);
    CHECK(report.points == 2);
}

TEST_CASE("report text and json carry the verdict") {
    const ValidationReport report = cross_validate(tiny_grid());
    const std::string text = report.to_text();
    CHECK(text.find("pass=true") != std::string::npos);
    CHECK(text.find("points=1") != std::string::npos);
    CHECK(text.find("population.max_dev=") != std::string::npos);

    const nlohmann::json j = nlohmann::json::parse(report.to_json());
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("points").get<int>() == 1);
    CHECK(j.at("population").at("max_dev").get<double>() == report.population.max_dev);
    CHECK(j.at("population").at("tolerance").get<double>() == report.tolerances.dynamics);
    CHECK(j.at("steady_transfer").at("tolerance").get<double>() == report.tolerances.steady);
}

TEST_CASE("impossible tolerances flip the verdict") {
    ValidationTolerances tight;
    tight.dynamics = 1e-15;
    tight.steady = 1e-16;
    const ValidationReport report = cross_validate(tiny_grid(), tight);
    CHECK_FALSE(report.pass);
    const std::string text = report.to_text();
    CHECK(text.find("pass=false") != std::string::npos);
}

TEST_CASE("empty axes are rejected") {
    ValidationGrid grid = tiny_grid();
    grid.thetas.clear();
    CHECK_THROWS_AS(cross_validate(grid), std::invalid_argument);

    grid = tiny_grid();
    grid.times.clear();
    CHECK_THROWS_AS(cross_validate(grid), std::invalid_argument);
}

TEST_CASE("default grid shape") {
    const ValidationGrid grid = ValidationGrid::default_grid();
    CHECK(grid.thetas.size() == 9);
    CHECK(grid.mean_temperatures.size() == 4);
    CHECK(grid.temperature_differences.size() == 2);
    CHECK(grid.times.size() == 41);
    CHECK(grid.differences_relative);
    CHECK(grid.thetas.front() == doctest::Approx(0.1 * kPi));
    CHECK(grid.thetas.back() == doctest::Approx(0.9 * kPi));
    CHECK(grid.times.front() == 0.0);
    CHECK(grid.times.back() == doctest::Approx(10.0));
}
