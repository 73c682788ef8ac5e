#include "qheat/forward.hpp"

#include <cmath>
#include <string>

#include "qheat/tridiag.hpp"

namespace qheat {

namespace {

// Residual of one implicit step: F(y) = y - y_prev - dt*(D2 Phi(y) + src).
void step_residual(const DiffusionLaw& law, const Grid& grid, const Field& y,
                   const Field& y_prev, const Field& src, double dt, Field& out) {
    const int n = grid.interior_count;
    const double h2 = grid.spacing * grid.spacing;
    thread_local Field phi;
    phi.resize(n);
    for (int i = 0; i < n; ++i) phi[i] = law.phi(y[i]);
    for (int i = 0; i < n; ++i) {
        const double left = (i > 0) ? phi[i - 1] : 0.0;
        const double right = (i + 1 < n) ? phi[i + 1] : 0.0;
        const double lap = (right - 2.0 * phi[i] + left) / h2;
        out[i] = y[i] - y_prev[i] - dt * (lap + src[i]);
    }
}

}  // namespace

Trajectory solve_forward(const DiffusionLaw& law, const Grid& grid, const Field& y0,
                         const ControlSchedule& control, const ControlMask& mask,
                         const NewtonOptions& opts) {
    const int n = grid.interior_count;
    if (static_cast<int>(y0.size()) != n) throw DimensionError("solve_forward: y0 size mismatch");
    if (static_cast<int>(mask.rho.size()) != n) throw DimensionError("solve_forward: mask size mismatch");
    for (double v : y0) {
        if (!std::isfinite(v)) throw InvalidParameterError("solve_forward: y0 must be finite");
    }
    const TimeGrid tg = control.tg;
    if (!(tg.dt > 0.0)) throw InvalidParameterError("solve_forward: dt must be positive");

    Trajectory traj;
    traj.tg = tg;
    traj.states.reserve(tg.levels());
    traj.states.push_back(y0);

    const double h2 = grid.spacing * grid.spacing;
    Field y = y0, resid(n), src(n);
    Tridiagonal jac(n);
    for (int k = 0; k < tg.steps; ++k) {
        const Field& vk = control.at(k);
        for (int i = 0; i < n; ++i) src[i] = vk[i] * mask.rho[i];
        const Field& y_prev = traj.states.back();
        y = y_prev;  // warm start
        double res_norm = 0.0;
        bool converged = false;
        for (int it = 0; it <= opts.max_iterations; ++it) {
            step_residual(law, grid, y, y_prev, src, tg.dt, resid);
            res_norm = sup_norm(resid);
            if (res_norm <= opts.tolerance) {
                converged = true;
                break;
            }
            if (it == opts.max_iterations) break;
            // J = I - dt * D2 diag(a(y))
            for (int i = 0; i < n; ++i) {
                jac.diag[i] = 1.0 + 2.0 * tg.dt * law.a(y[i]) / h2;
                if (i > 0) jac.lower[i] = -tg.dt * law.a(y[i - 1]) / h2;
                if (i + 1 < n) jac.upper[i] = -tg.dt * law.a(y[i + 1]) / h2;
            }
            const Field delta = jac.solve(resid);
            for (int i = 0; i < n; ++i) y[i] -= delta[i];
        }
        if (!converged) {
            throw SolverDivergenceError(
                "solve_forward: Newton did not converge at step " + std::to_string(k) +
                    " (residual " + std::to_string(res_norm) + ")",
                k, res_norm);
        }
        traj.states.push_back(y);
    }
    return traj;
}

Trajectory solve_forward(const DiffusionLaw& law, const Grid& grid, const Field& y0,
                         const Field& control_value, const ControlMask& mask, double t_start,
                         double dt, double T, const NewtonOptions& opts) {
    const TimeGrid tg = make_time_grid(t_start, dt, T);
    return solve_forward(law, grid, y0, ControlSchedule::constant(tg, control_value), mask, opts);
}

ComparisonReport check_comparison(const Trajectory& hi, const Trajectory& lo, double tol) {
    if (hi.levels() != lo.levels()) throw DimensionError("check_comparison: ladder mismatch");
    ComparisonReport rep;
    double worst = 0.0;
    for (int k = 0; k < hi.levels(); ++k) {
        const Field& a = hi.at(k);
        const Field& b = lo.at(k);
        if (a.size() != b.size()) throw DimensionError("check_comparison: field size mismatch");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double gap = a[i] - b[i];
            if (gap < worst) {
                worst = gap;
                rep.arg_level = k;
                rep.arg_index = static_cast<int>(i);
            }
        }
    }
    rep.worst_violation = worst;
    rep.holds = worst >= -tol;
    return rep;
}

}  // namespace qheat
