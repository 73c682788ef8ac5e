#pragma once

#include <vector>

#include "qheat/control_mask.hpp"
#include "qheat/forward.hpp"
#include "qheat/linearization.hpp"

namespace qheat {

struct HumOptions {
    double eps = 1e-8;      // penalty on the terminal norm
    double cg_tol = 1e-10;  // relative residual
    int cg_max_iter = 500;
};

/// Output of the penalized dual synthesis: the control is exactly rho * p
/// where p is the adjoint run from the optimal terminal datum.
struct HumResult {
    ControlSchedule control;       // u = rho * p on every ladder level
    Trajectory state;              // controlled linear solution from z0
    Field terminal_adjoint;        // p_T
    Trajectory adjoint;            // full backward solution
    double terminal_norm = 0.0;    // ||z(t1)||_L2 of the controlled solution
    double free_terminal_norm = 0.0;
    int cg_iterations = 0;
    double cg_residual = 0.0;
    double eps = 0.0;
    double cost_ratio = 0.0;       // ||u||_{L2(omega x window)} / ||z0||_L2
};

/// Penalized dual synthesis of a null control for the frozen linearized
/// system: solves (Gram + eps I) pT = -z_free(t1) by conjugate gradient,
/// where Gram pT = terminal state reached from zero data under u = rho p.
HumResult hum_null_control(const Linearization& lin, const Grid& grid, const ControlMask& mask,
                           const Field& z0, const HumOptions& opts = {});

/// Gram operator action (exposed for the symmetry/optimality tests).
Field hum_gramian_apply(const std::vector<Tridiagonal>& mats, const TimeGrid& tg,
                        const Grid& grid, const ControlMask& mask, const Field& pT);

enum class FixedPointSeed { Zero, ConstantInitial };

struct LocalControlOptions {
    double eps = 1e-8;
    double fp_tol = 1e-8;
    int fp_max_iter = 30;
    double target_tol = 1e-6;   // terminal L2 error the nonlinear re-solve must meet
    int defect_max_iter = 8;    // outer corrections driven by the nonlinear defect
    FixedPointSeed seed = FixedPointSeed::Zero;
    double cg_tol = 1e-10;
    int cg_max_iter = 500;
    NewtonOptions newton;
};

/// Target slice handed to the local controller: state and reference control
/// share one ladder over the window.
struct TargetWindow {
    Trajectory ybar;
    ControlSchedule vbar;
};

struct LocalControlResult {
    ControlSchedule control;      // v = vbar + u
    Trajectory state;             // nonlinear solve under v from y0
    double terminal_error = 0.0;  // ||y(t1) - ybar(t1)||_L2
    double control_deviation = 0.0;  // ||v - vbar||_inf over the window
    int fp_iterations = 0;
    int defect_iterations = 0;
    std::vector<double> fp_history;      // sup changes of the relinearization iterates
    std::vector<double> defect_history;  // terminal errors after each outer correction
};

/// Exact steering of the quasilinear system to the target slice: a
/// relinearization fixed point around the dual synthesis, then (when needed)
/// outer defect corrections that reuse the same dual solve against the
/// genuine nonlinear terminal defect.
LocalControlResult exact_control_to_trajectory(const DiffusionLaw& law, const Grid& grid,
                                               const ControlMask& mask, const Field& y0,
                                               const TargetWindow& target,
                                               const LocalControlOptions& opts = {});

}  // namespace qheat
