#pragma once

#include <stdexcept>
#include <string>

namespace chol {

/// Base class for all errors raised by the solver library.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Query outside the domain of a sampled datum or a field provider.
struct OutOfRangeError : SolverError {
    using SolverError::SolverError;
};

/// Initial datum fails a validity requirement (non-finite energy, bad grids).
struct InvalidDatumError : SolverError {
    using SolverError::SolverError;
};

/// Internal grid construction failure (non-monotone cumulative integral).
struct GridError : SolverError {
    using SolverError::SolverError;
};

/// Lagrangian positions decreasing beyond tolerance; indicates stepper failure.
struct OrderViolationError : SolverError {
    using SolverError::SolverError;
};

/// Time stepper could not complete a step (e.g. Picard non-convergence).
struct StepFailureError : SolverError {
    StepFailureError(const std::string& msg, double t, double dt, int iterations, double residual)
        : SolverError(msg), t(t), dt(dt), iterations(iterations), residual(residual) {}
    double t;
    double dt;
    int iterations;
    double residual;
};

/// File or serialization failure.
struct IoError : SolverError {
    using SolverError::SolverError;
};

}  // namespace chol
