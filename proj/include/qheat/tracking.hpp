#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qheat/hum.hpp"
#include "qheat/staircase.hpp"

namespace qheat {

/// Gradient-smallness check that gates the stabilization estimate:
/// lhs = M_a * ||grad ybar||_inf, rhs = a0 / (2 C) with the Poincare
/// constant C = L/pi. The energy derivation yields the decay rate
/// a0 / (2 C^2); both the rhs and the rate are reported because the two
/// differ by one power of C.
struct ConditionReport {
    double M_a = 0.0;
    double grad_sup = 0.0;
    double poincare_constant = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double decay_rate_bound = 0.0;  // a0/(2 C^2)
    bool pass = false;
    std::string norm_note;
};

/// A target trajectory manufactured by the forward solver, carrying its
/// reference control and the admissibility report.
struct TargetTrajectory {
    Trajectory ybar;
    ControlSchedule vbar;
    Field ybar0;
    std::optional<Field> vbar_constant;  // set when the reference control is constant in time
    double grad_sup = 0.0;
    double eta = 0.0;        // min of vbar over the whole domain
    double eta_omega = 0.0;  // min restricted to omega
    ConditionReport condition;
};

TargetTrajectory make_target(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                             const Field& ybar0, const Field& vbar_value, double dt, double T);

ConditionReport check_gradient_condition(const DiffusionLaw& law, const TargetTrajectory& target,
                                         const Grid& grid);

struct StabilizationResult {
    Trajectory state;
    double lambda_hat = 0.0;  // fitted decay rate of ||y - ybar||_L2
    std::vector<std::pair<double, double>> error_table;  // (t, e(t))
    double initial_error = 0.0;
    double final_error = 0.0;
};

/// Phase 1 of the tracker: run the plant under v = vbar and measure the decay
/// of the tracking error; the rate is the least-squares slope of -log e over
/// the second half of the window (floored away from round-off).
StabilizationResult stabilization_phase(const DiffusionLaw& law, const Grid& grid,
                                        const ControlMask& mask, const Field& y0,
                                        const TargetTrajectory& target, double duration);

struct TrackOptions {
    double tau = 0.5;
    double dt = 0.01;
    double eps = 1e-8;
    double term_tol = 1e-6;
    double pos_tol = 1e-9;
    double T_cap = 64.0;
    bool allow_doubling = true;
    bool require_condition = true;  // refuse targets that fail the gradient condition
    LocalControlOptions local;
};

struct TrackResult {
    GlobalControlResult global;
    double T_used = 0.0;
    double lambda_hat = 0.0;
    std::vector<std::pair<double, double>> decay;
    ConditionReport condition;
    double control_deviation = 0.0;  // ||vtilde - vbar||_inf on the terminal window
    double handoff_error = 0.0;      // e(T - tau)
    std::vector<double> attempts;    // horizons tried by the doubling search
};

/// Theorem-style tracking: stabilize under vbar on [0, T-tau], then steer
/// exactly on [T-tau, T]; the glued control is nonnegative as soon as the
/// terminal deviation stays below the positivity margin eta. When doubling is
/// allowed the horizon grows until that margin condition holds.
TrackResult track_trajectory(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                             const Field& y0, const TargetTrajectory& target, double T,
                             const TrackOptions& opts = {});

/// Re-manufactures the target over a longer horizon (requires a constant
/// reference control).
TargetTrajectory extend_target(const DiffusionLaw& law, const Grid& grid,
                               const ControlMask& mask, const TargetTrajectory& target,
                               double T);

}  // namespace qheat
