// errors.hpp — exception types thrown by the dimer library.

#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

// Both phonon relaxation channels vanish (gamma1 = gamma2 = 0); the relaxation
// steady state is undefined.
struct DegenerateRelaxation : std::runtime_error {
    explicit DegenerateRelaxation(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive step control stalled: the accepted step fell below the floor the
// error controller can represent for the requested tolerances.
struct StepSizeUnderflow : std::runtime_error {
    explicit StepSizeUnderflow(const std::string& what) : std::runtime_error(what) {}
};

// A monitored conserved quantity (trace, Hermiticity, positivity floor,
// probability range) drifted past its documented bound.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

// The numerical null space of the generator could not be resolved at the
// documented tolerances (ambiguous dimension or singular projector).
struct KernelResolutionFailure : std::runtime_error {
    explicit KernelResolutionFailure(const std::string& what) : std::runtime_error(what) {}
};

// A matrix that must be positive semidefinite produced an eigenvalue below the
// tolerance floor.
struct NegativeEigenvalue : std::runtime_error {
    explicit NegativeEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

// A density matrix passed to an X-structure-only routine has off-X entries;
// use the general Wootters routine instead.
struct NotXState : std::invalid_argument {
    explicit NotXState(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dimer
