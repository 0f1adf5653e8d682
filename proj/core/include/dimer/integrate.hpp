// integrate.hpp — adaptive propagation of vec(ρ) under the Liouvillian.
//
// Embedded Dormand–Prince 5(4) pair with PI-free step control: accept when the
// mixed absolute/relative RMS error is ≤ 1, grow/shrink by err^(−1/5) within
// [0.2, 5]. The generator is linear, so Runge–Kutta preserves trace and
// Hermiticity to roundoff; both are still monitored, and positivity is checked
// but never repaired.

#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "dimer/density_matrix.hpp"
#include "dimer/liouvillian.hpp"

namespace dimer {

struct IntegratorConfig {
    double rel_tol = 1e-9;                                    // relative tolerance, > 0
    double abs_tol = 1e-11;                                   // absolute tolerance, > 0
    double max_step = std::numeric_limits<double>::infinity();  // step ceiling, > 0

    void validate() const;
};

// Evolves rho0 to time t (>= 0). Accepts either basis tag (converted
// internally to the eigenbasis); the result is tagged Basis::Eigen.
// Throws StepSizeUnderflow if step control stalls, InvariantViolation if
// trace/Hermiticity drift past 1e-10 or an eigenvalue falls below −1e-9.
DensityMatrix propagate(const DensityMatrix& rho0, const Liouvillian& lio, double t,
                        const IntegratorConfig& config = {});

// Same integration, sampling the state at each time in ascending `times`
// (first entry may be 0). Calls `observe(index, state)` per sample.
void propagate_sampled(const DensityMatrix& rho0, const Liouvillian& lio,
                       const std::vector<double>& times,
                       const std::function<void(std::size_t, const DensityMatrix&)>& observe,
                       const IntegratorConfig& config = {});

}  // namespace dimer
