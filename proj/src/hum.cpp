#include "qheat/hum.hpp"

#include <cmath>
#include <string>

namespace qheat {

namespace {

ControlSchedule masked_adjoint_control(const TimeGrid& tg, const ControlMask& mask,
                                       const Trajectory& adjoint) {
    ControlSchedule u;
    u.tg = tg;
    u.fields.resize(adjoint.levels());
    for (int k = 0; k < adjoint.levels(); ++k) {
        const Field& p = adjoint.at(k);
        Field f(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) f[i] = mask.rho[i] * p[i];
        u.fields[k] = std::move(f);
    }
    u.recompute_stats();
    return u;
}

double schedule_l2_cost(const Grid& grid, const ControlSchedule& u) {
    // L2(Q) norm over active levels
    double s = 0.0;
    for (int k = 0; k < u.tg.steps; ++k) {
        for (double v : u.at(k)) s += v * v;
    }
    return std::sqrt(u.tg.dt * grid.spacing * s);
}

}  // namespace

Field hum_gramian_apply(const std::vector<Tridiagonal>& mats, const TimeGrid& tg,
                        const Grid& grid, const ControlMask& mask, const Field& pT) {
    const Trajectory adjoint = solve_adjoint_discrete(mats, tg, pT);
    const ControlSchedule u = masked_adjoint_control(tg, mask, adjoint);
    const Field zero(pT.size(), 0.0);
    const Trajectory z = run_linear_forward(mats, tg, zero, u, mask);
    (void)grid;
    return z.terminal();
}

HumResult hum_null_control(const Linearization& lin, const Grid& grid, const ControlMask& mask,
                           const Field& z0, const HumOptions& opts) {
    if (!(opts.eps > 0.0)) throw InvalidParameterError("hum: penalty eps must be positive");
    const int n = grid.interior_count;
    if (static_cast<int>(z0.size()) != n) throw DimensionError("hum: z0 size mismatch");
    for (double v : z0) {
        if (!std::isfinite(v)) throw InvalidParameterError("hum: z0 must be finite");
    }
    const TimeGrid tg = lin.time_grid();
    const std::vector<Tridiagonal> mats = assemble_step_matrices(lin.alpha, lin.drift, grid);

    const ControlSchedule no_control = ControlSchedule::zero(tg, n);
    const Trajectory z_free = run_linear_forward(mats, tg, z0, no_control, mask);

    // CG on (Gram + eps I) pT = -z_free(T), in the h-weighted inner product.
    Field b = scale(z_free.terminal(), -1.0);
    Field x(n, 0.0);
    Field r = b;  // x = 0 start
    Field d = r;
    double rr = inner(grid, r, r);
    const double b_norm = std::sqrt(inner(grid, b, b));
    const double stop = opts.cg_tol * std::max(b_norm, 1e-300);
    int iters = 0;
    std::vector<double> trace;
    if (b_norm > 0.0) {
        double stall_best = std::sqrt(rr);
        int stall_count = 0;
        while (std::sqrt(rr) > stop && iters < opts.cg_max_iter) {
            Field Ad = hum_gramian_apply(mats, tg, grid, mask, d);
            for (int i = 0; i < n; ++i) Ad[i] += opts.eps * d[i];
            const double dAd = inner(grid, d, Ad);
            if (!(dAd > 0.0)) {
                throw IllConditioningError("hum: conjugate gradient lost positivity", trace);
            }
            const double alpha = rr / dAd;
            for (int i = 0; i < n; ++i) {
                x[i] += alpha * d[i];
                r[i] -= alpha * Ad[i];
            }
            const double rr_new = inner(grid, r, r);
            const double beta = rr_new / rr;
            for (int i = 0; i < n; ++i) d[i] = r[i] + beta * d[i];
            rr = rr_new;
            ++iters;
            const double rn = std::sqrt(rr);
            trace.push_back(rn);
            if (rn < 0.5 * stall_best) {
                stall_best = rn;
                stall_count = 0;
            } else if (++stall_count > 60) {
                throw IllConditioningError(
                    "hum: conjugate gradient stagnated at relative residual " +
                        std::to_string(rn / std::max(b_norm, 1e-300)),
                    trace);
            }
        }
        if (std::sqrt(rr) > stop) {
            throw IllConditioningError("hum: conjugate gradient hit the iteration cap", trace);
        }
    }

    HumResult res;
    res.eps = opts.eps;
    res.cg_iterations = iters;
    res.cg_residual = std::sqrt(rr);
    res.terminal_adjoint = x;
    res.adjoint = solve_adjoint_discrete(mats, tg, x);
    res.control = masked_adjoint_control(tg, mask, res.adjoint);
    res.state = run_linear_forward(mats, tg, z0, res.control, mask);
    res.terminal_norm = l2_norm(grid, res.state.terminal());
    res.free_terminal_norm = l2_norm(grid, z_free.terminal());
    const double z0n = l2_norm(grid, z0);
    res.cost_ratio = (z0n > 0.0) ? schedule_l2_cost(grid, res.control) / z0n : 0.0;
    return res;
}

LocalControlResult exact_control_to_trajectory(const DiffusionLaw& law, const Grid& grid,
                                               const ControlMask& mask, const Field& y0,
                                               const TargetWindow& target,
                                               const LocalControlOptions& opts) {
    const int n = grid.interior_count;
    const TimeGrid tg = target.ybar.tg;
    if (!target.vbar.tg.matches(tg)) {
        throw DimensionError("exact_control_to_trajectory: target ladders differ");
    }
    if (static_cast<int>(y0.size()) != n) {
        throw DimensionError("exact_control_to_trajectory: y0 size mismatch");
    }
    const Field z0 = subtract(y0, target.ybar.initial());

    HumOptions hum_opts;
    hum_opts.eps = opts.eps;
    hum_opts.cg_tol = opts.cg_tol;
    hum_opts.cg_max_iter = opts.cg_max_iter;

    // Relinearization fixed point: freeze w, synthesize, replace w by the
    // controlled linear solution.
    Trajectory w;
    w.tg = tg;
    w.states.assign(tg.levels(), (opts.seed == FixedPointSeed::ConstantInitial)
                                     ? z0
                                     : Field(n, 0.0));
    LocalControlResult out;
    HumResult hum;
    bool fp_converged = false;
    for (int j = 0; j < opts.fp_max_iter; ++j) {
        const Linearization lin = build_linearization(law, grid, target.ybar, w);
        hum = hum_null_control(lin, grid, mask, z0, hum_opts);
        double diff = 0.0;
        for (int k = 0; k < tg.levels(); ++k) {
            for (int i = 0; i < n; ++i) {
                diff = std::max(diff, std::abs(hum.state.at(k)[i] - w.at(k)[i]));
            }
        }
        w = hum.state;
        out.fp_history.push_back(diff);
        out.fp_iterations = j + 1;
        if (diff <= opts.fp_tol) {
            fp_converged = true;
            break;
        }
    }
    if (!fp_converged) {
        throw LocalControlFailureError(
            "exact_control_to_trajectory: relinearization fixed point did not converge "
            "(initial deviation too large for the local regime)",
            out.fp_history);
    }

    ControlSchedule u = hum.control;
    out.control = ControlSchedule::sum(target.vbar, u);
    out.state = solve_forward(law, grid, y0, out.control, mask, opts.newton);
    out.terminal_error = l2_norm(grid, subtract(out.state.terminal(), target.ybar.terminal()));

    // Outer defect corrections: aim the dual solve at the genuine nonlinear
    // terminal defect, which absorbs the discretization mismatch between the
    // frozen-coefficient model and the Kirchhoff-form solver.
    while (out.terminal_error > opts.target_tol && out.defect_iterations < opts.defect_max_iter) {
        Trajectory z_nl;
        z_nl.tg = tg;
        z_nl.states.resize(tg.levels());
        for (int k = 0; k < tg.levels(); ++k) {
            z_nl.states[k] = subtract(out.state.at(k), target.ybar.at(k));
        }
        const Linearization lin = build_linearization(law, grid, target.ybar, z_nl);
        const std::vector<Tridiagonal> mats = assemble_step_matrices(lin.alpha, lin.drift, grid);

        // (Gram + eps I) q = -defect
        const Field defect = subtract(out.state.terminal(), target.ybar.terminal());
        Field b = scale(defect, -1.0);
        Field x(n, 0.0), r = b, d = r;
        double rr = inner(grid, r, r);
        const double b_norm = std::sqrt(rr);
        const double stop = opts.cg_tol * std::max(b_norm, 1e-300);
        int it = 0;
        while (std::sqrt(rr) > stop && it < opts.cg_max_iter) {
            Field Ad = hum_gramian_apply(mats, tg, grid, mask, d);
            for (int i = 0; i < n; ++i) Ad[i] += opts.eps * d[i];
            const double dAd = inner(grid, d, Ad);
            if (!(dAd > 0.0)) break;
            const double alpha = rr / dAd;
            for (int i = 0; i < n; ++i) {
                x[i] += alpha * d[i];
                r[i] -= alpha * Ad[i];
            }
            const double rr_new = inner(grid, r, r);
            for (int i = 0; i < n; ++i) d[i] = r[i] + (rr_new / rr) * d[i];
            rr = rr_new;
            ++it;
        }
        const Trajectory adj = solve_adjoint_discrete(mats, tg, x);
        const ControlSchedule du = masked_adjoint_control(tg, mask, adj);
        u = ControlSchedule::sum(u, du);
        out.control = ControlSchedule::sum(target.vbar, u);
        out.state = solve_forward(law, grid, y0, out.control, mask, opts.newton);
        out.terminal_error =
            l2_norm(grid, subtract(out.state.terminal(), target.ybar.terminal()));
        out.defect_history.push_back(out.terminal_error);
        ++out.defect_iterations;
    }
    if (out.terminal_error > opts.target_tol) {
        throw LocalControlFailureError(
            "exact_control_to_trajectory: terminal error " +
                std::to_string(out.terminal_error) + " above target tolerance after " +
                std::to_string(out.defect_iterations) + " defect corrections",
            out.defect_history);
    }

    out.control_deviation = u.sup_norm_value;
    return out;
}

}  // namespace qheat
