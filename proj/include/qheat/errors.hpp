#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qheat {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

class ResolutionError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Newton failed to converge inside a time step.
class SolverDivergenceError : public Error {
public:
    SolverDivergenceError(const std::string& msg, int step, double residual)
        : Error(msg), step_index(step), last_residual(residual) {}
    int step_index;
    double last_residual;
};

class SolverError : public Error {
public:
    using Error::Error;
};

/// Conjugate gradient stalled; carries the residual trace.
class IllConditioningError : public Error {
public:
    IllConditioningError(const std::string& msg, std::vector<double> trace)
        : Error(msg), residual_trace(std::move(trace)) {}
    std::vector<double> residual_trace;
};

/// Relinearization fixed point (or its nonlinear verification) failed.
class LocalControlFailureError : public Error {
public:
    LocalControlFailureError(const std::string& msg, std::vector<double> history)
        : Error(msg), iterate_history(std::move(history)) {}
    std::vector<double> iterate_history;
};

class HypothesisViolationError : public Error {
public:
    using Error::Error;
};

class PlanningFailureError : public Error {
public:
    using Error::Error;
};

/// A staircase step exceeded its control-deviation budget; retry with more steps.
class StepFailureError : public Error {
public:
    StepFailureError(const std::string& msg, int step, double deviation)
        : Error(msg), step_index(step), deviation(deviation) {}
    int step_index;
    double deviation;
};

/// Horizon-doubling search for tracking exhausted its cap.
class TrackingFailureError : public Error {
public:
    TrackingFailureError(const std::string& msg, std::vector<double> handoff_errors)
        : Error(msg), handoff_error_history(std::move(handoff_errors)) {}
    std::vector<double> handoff_error_history;
};

class ConstructionFailureError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace qheat
