#pragma once

#include "qheat/control_mask.hpp"
#include "qheat/diffusion_law.hpp"
#include "qheat/grid.hpp"
#include "qheat/trajectory.hpp"

namespace qheat {

struct NewtonOptions {
    double tolerance = 1e-10;  // residual sup-norm
    int max_iterations = 50;
};

/// Implicit-Euler solve of y_t = D2 Phi(y) + v*rho in Kirchhoff form:
/// each step solves y - dt*(D2 Phi(y) + v_k*rho) = y_prev by Newton with a
/// tridiagonal Jacobian. The source uses the schedule field at the step's
/// starting level, so field k acts on (t_k, t_{k+1}).
Trajectory solve_forward(const DiffusionLaw& law, const Grid& grid, const Field& y0,
                         const ControlSchedule& control, const ControlMask& mask,
                         const NewtonOptions& opts = {});

/// Convenience overload: constant-in-time control field over [t_start, t_start+T].
Trajectory solve_forward(const DiffusionLaw& law, const Grid& grid, const Field& y0,
                         const Field& control_value, const ControlMask& mask, double t_start,
                         double dt, double T, const NewtonOptions& opts = {});

struct ComparisonReport {
    bool holds = true;
    double worst_violation = 0.0;  // most negative of hi - lo (0 when ordered)
    int arg_level = -1;
    int arg_index = -1;
};

/// Pointwise check hi >= lo - tol over the shared ladder.
ComparisonReport check_comparison(const Trajectory& hi, const Trajectory& lo,
                                  double tol = 1e-9);

}  // namespace qheat
