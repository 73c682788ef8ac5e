#pragma once

#include <vector>

#include "qheat/hum.hpp"
#include "qheat/steady.hpp"

namespace qheat {

struct StaircaseOptions {
    double window = 1.0;   // horizon of each local step
    double dt = 0.01;
    double eps = 1e-8;
    double fp_tol = 1e-8;
    double term_tol = 1e-6;
    double pos_tol = 1e-9;
    double safety = 0.5;   // fraction of eta/gain used as the increment threshold
    int nbar_cap = 256;
    LocalControlOptions local;
};

/// Plan for chaining local controls along a path of steady states.
struct StairCasePlan {
    SteadyPath path;  // resampled at nbar segments
    int nbar = 0;
    double eta = 0.0;        // positivity margin of the steady controls
    double eta_omega = 0.0;
    double radius = 0.0;     // R
    double gain = 0.0;       // measured control deviation per unit increment
    double threshold = 0.0;  // increment budget the plan satisfied
    std::vector<double> increments;
};

StairCasePlan plan_staircase(const SteadyPath& path, const DiffusionLaw& law, const Grid& grid,
                             const ControlMask& mask, const StaircaseOptions& opts = {});

struct StepLog {
    int k = 0;
    double increment = 0.0;          // ||ybar_k - ybar_{k-1}|| C2 proxy
    double control_deviation = 0.0;  // ||v_k - vbar_k||_inf
    double min_control = 0.0;
    double terminal_error = 0.0;     // ||y(k) - ybar_k||_L2
    int fp_iterations = 0;
    int defect_iterations = 0;
};

struct GlobalControlResult {
    ControlSchedule control;
    Trajectory trajectory;
    double horizon = 0.0;
    double min_control = 0.0;
    double terminal_error = 0.0;
    std::vector<StepLog> step_log;
};

/// Runs the planned chain; every step is a unit-window local control toward
/// the next steady state held constant in time, with the per-step deviation
/// bound ||v_k - vbar_k||_inf <= eta enforced so the assembled control stays
/// nonnegative.
GlobalControlResult run_staircase(const StairCasePlan& plan, const DiffusionLaw& law,
                                  const Grid& grid, const ControlMask& mask,
                                  const StaircaseOptions& opts = {});

/// plan + run with automatic nbar doubling on step failure.
GlobalControlResult run_staircase_adaptive(const SteadyPath& path, const DiffusionLaw& law,
                                           const Grid& grid, const ControlMask& mask,
                                           StaircaseOptions opts, StairCasePlan* plan_out = nullptr);

struct NonnegReport {
    double min_global = 0.0;
    double min_on_omega = 0.0;
    double arg_time = 0.0;
    double arg_coord = 0.0;
};

NonnegReport verify_nonnegativity(const GlobalControlResult& result, const Grid& grid,
                                  const ControlMask& mask);

}  // namespace qheat
