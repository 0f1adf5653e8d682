#include "dimer/validate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dimer/bloch.hpp"
#include "dimer/concurrence.hpp"
#include "dimer/steady.hpp"
#include "dimer/transfer.hpp"
#include "dimer/wootters.hpp"

namespace dimer {

namespace {

struct Point {
    double theta, t_mean, t_diff;
};

void track(DeviationStat& stat, double dev, const Point& p, double time) {
    if (dev > stat.max_dev) {
        stat.max_dev = dev;
        stat.at_theta = p.theta;
        stat.at_t_mean = p.t_mean;
        stat.at_t_diff = p.t_diff;
        stat.at_time = time;
    }
}

void append(std::ostringstream& out, const char* name, const DeviationStat& s, double tol) {
    out << name << ".max_dev=" << s.max_dev << '\n'
        << name << ".tolerance=" << tol << '\n'
        << name << ".at.theta=" << s.at_theta << '\n'
        << name << ".at.t_mean=" << s.at_t_mean << '\n'
        << name << ".at.t_diff=" << s.at_t_diff << '\n'
        << name << ".at.time=" << s.at_time << '\n';
}

nlohmann::ordered_json stat_json(const DeviationStat& s, double tol) {
    return {{"max_dev", s.max_dev},
            {"tolerance", tol},
            {"at", {{"theta", s.at_theta},
                    {"t_mean", s.at_t_mean},
                    {"t_diff", s.at_t_diff},
                    {"time", s.at_time}}}};
}

}  // namespace

ValidationGrid ValidationGrid::default_grid() {
    ValidationGrid g;
    for (int i = 1; i <= 9; ++i) g.thetas.push_back(0.1 * i * std::numbers::pi);
    g.mean_temperatures = {0.1, 1.0, 10.0, 100.0};
    g.temperature_differences = {0.0, 0.5};
    g.differences_relative = true;
    for (int i = 0; i <= 40; ++i) g.times.push_back(0.25 * i);
    return g;
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    out.precision(17);
    out << "points=" << points << '\n' << "pass=" << (pass ? "true" : "false") << '\n';
    append(out, "population", population, tolerances.dynamics);
    append(out, "coherence", coherence, tolerances.dynamics);
    append(out, "transfer", transfer, tolerances.dynamics);
    append(out, "concurrence", concurrence, tolerances.dynamics);
    append(out, "steady_transfer", steady_transfer, tolerances.steady);
    append(out, "steady_concurrence", steady_concurrence, tolerances.steady);
    return out.str();
}

std::string ValidationReport::to_json() const {
    nlohmann::ordered_json j{
        {"points", points},
        {"pass", pass},
        {"population", stat_json(population, tolerances.dynamics)},
        {"coherence", stat_json(coherence, tolerances.dynamics)},
        {"transfer", stat_json(transfer, tolerances.dynamics)},
        {"concurrence", stat_json(concurrence, tolerances.dynamics)},
        {"steady_transfer", stat_json(steady_transfer, tolerances.steady)},
        {"steady_concurrence", stat_json(steady_concurrence, tolerances.steady)},
    };
    return j.dump(2);
}

ValidationReport cross_validate(const ValidationGrid& grid, const ValidationTolerances& tolerances,
                                const IntegratorConfig& config) {
    if (grid.thetas.empty() || grid.mean_temperatures.empty() ||
        grid.temperature_differences.empty() || grid.times.empty())
        throw std::invalid_argument("cross_validate: every grid axis must be non-empty");
    config.validate();

    ValidationReport report;
    report.tolerances = tolerances;

    for (const double theta : grid.thetas) {
        for (const double t_mean : grid.mean_temperatures) {
            for (const double t_diff_in : grid.temperature_differences) {
                const double t_diff = grid.differences_relative ? t_diff_in * t_mean : t_diff_in;
                const Point point{theta, t_mean, t_diff};

                DimerParams params = DimerParams::with_mixing_angle(theta, grid.xi);
                params.gamma1 = params.gamma2 = grid.gamma;
                params.eta1 = params.eta2 = grid.eta;
                params.set_temperatures(t_mean, t_diff);

                const Eigensystem eig = eigensystem(params);
                const RateSet rates = effective_rates(params, eig);
                const Liouvillian lio = build_liouvillian(params);
                const SigmaMoments init = SigmaMoments::donor_excited(theta);

                propagate_sampled(
                    DensityMatrix::donor_excited(), lio, grid.times,
                    [&](std::size_t i, const DensityMatrix& state) {
                        const double t = grid.times[i];
                        const SigmaMoments ana = bloch_transient(init, rates, eig, t);
                        const SigmaMoments num = sigma_moments_of(state, theta);
                        const double pop_dev =
                            std::max({std::abs(ana.s11 - num.s11), std::abs(ana.s22 - num.s22),
                                      std::abs(ana.s33 - num.s33), std::abs(ana.s44 - num.s44)});
                        track(report.population, pop_dev, point, t);
                        track(report.coherence, std::abs(ana.s32 - num.s32), point, t);

                        const DensityMatrix bare = state.in_basis(Basis::Bare, theta);
                        track(report.transfer,
                              std::abs(transfer_probability(t, params) -
                                       acceptor_excitation_probability(bare)),
                              point, t);
                        track(report.concurrence,
                              std::abs(concurrence_transient(t, params) -
                                       wootters_concurrence(bare)),
                              point, t);
                    },
                    config);

                const DensityMatrix ss = steady_state(lio, DensityMatrix::donor_excited());
                const DensityMatrix ss_bare = ss.in_basis(Basis::Bare, theta);
                track(report.steady_transfer,
                      std::abs(steady_transfer_probability(params) -
                               acceptor_excitation_probability(ss_bare)),
                      point, -1.0);
                track(report.steady_concurrence,
                      std::abs(steady_concurrence(params) - wootters_concurrence(ss_bare)),
                      point, -1.0);
                ++report.points;
            }
        }
    }

    report.pass = report.population.max_dev <= tolerances.dynamics &&
                  report.coherence.max_dev <= tolerances.dynamics &&
                  report.transfer.max_dev <= tolerances.dynamics &&
                  report.concurrence.max_dev <= tolerances.dynamics &&
                  report.steady_transfer.max_dev <= tolerances.steady &&
                  report.steady_concurrence.max_dev <= tolerances.steady;
    return report;
}

}  // namespace dimer
