#include "qheat/staircase.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qheat {

namespace {

TargetWindow steady_target_window(const SteadyState& s, double t_start,
                                  const StaircaseOptions& opts, int n) {
    const TimeGrid tg = make_time_grid(t_start, opts.dt, opts.window);
    TargetWindow tw;
    tw.ybar.tg = tg;
    tw.ybar.states.assign(tg.levels(), s.state);
    tw.vbar = ControlSchedule::constant(tg, s.control);
    (void)n;
    return tw;
}

LocalControlOptions local_options(const StaircaseOptions& opts) {
    LocalControlOptions lo = opts.local;
    lo.eps = opts.eps;
    lo.fp_tol = opts.fp_tol;
    lo.target_tol = opts.term_tol;
    return lo;
}

}  // namespace

StairCasePlan plan_staircase(const SteadyPath& path, const DiffusionLaw& law, const Grid& grid,
                             const ControlMask& mask, const StaircaseOptions& opts) {
    const PathModulus base = path_modulus(path, grid, mask);
    if (!(base.eta > 0.0)) {
        throw HypothesisViolationError(
            "plan_staircase: positivity margin of the steady controls is " +
            std::to_string(base.eta) +
            "; the chain needs every steady control bounded below by a positive margin");
    }

    StairCasePlan plan;
    plan.eta = base.eta;
    plan.eta_omega = base.eta_omega;

    for (int nbar = 1; nbar <= opts.nbar_cap; nbar *= 2) {
        const SteadyPath sampled =
            (nbar == path.segments) ? path
                                    : build_path(law, grid, mask, path.vbar0, path.vbar1, nbar,
                                                 path.rule);
        const PathModulus pm = path_modulus(sampled, grid, mask);
        plan.path = sampled;
        plan.nbar = nbar;
        plan.radius = pm.radius;
        plan.increments.clear();
        for (int j = 0; j < nbar; ++j) plan.increments.push_back(pm.rows[j].increment_c2);

        if (pm.max_increment <= 1e-14) {
            // constant path: one trivial step
            plan.gain = 0.0;
            plan.threshold = std::numeric_limits<double>::infinity();
            return plan;
        }

        // measure the local-control gain on the first segment
        bool probe_ok = true;
        double gain = 0.0;
        try {
            const TargetWindow tw = steady_target_window(sampled.samples[1], 0.0, opts,
                                                         grid.interior_count);
            const LocalControlResult probe = exact_control_to_trajectory(
                law, grid, mask, sampled.samples[0].state, tw, local_options(opts));
            gain = probe.control_deviation / pm.rows[0].increment_c2;
        } catch (const LocalControlFailureError&) {
            probe_ok = false;  // increment too large for the local regime
        }
        if (probe_ok) {
            plan.gain = gain;
            plan.threshold = (gain > 0.0) ? opts.safety * plan.eta / gain
                                          : std::numeric_limits<double>::infinity();
            if (pm.max_increment <= plan.threshold) return plan;
        }
    }
    throw PlanningFailureError("plan_staircase: step cap " + std::to_string(opts.nbar_cap) +
                               " reached without satisfying the increment budget");
}

GlobalControlResult run_staircase(const StairCasePlan& plan, const DiffusionLaw& law,
                                  const Grid& grid, const ControlMask& mask,
                                  const StaircaseOptions& opts) {
    const int n = grid.interior_count;
    const int nbar = plan.nbar;
    const int steps_per_window = make_time_grid(0.0, opts.dt, opts.window).steps;

    GlobalControlResult res;
    res.horizon = nbar * opts.window;
    const TimeGrid global_tg{0.0, opts.dt, nbar * steps_per_window};
    res.control.tg = global_tg;
    res.control.fields.assign(global_tg.levels(), Field(n, 0.0));

    Field current = plan.path.samples[0].state;
    for (int k = 1; k <= nbar; ++k) {
        const SteadyState& target = plan.path.samples[k];
        const TargetWindow tw = steady_target_window(target, (k - 1) * opts.window, opts, n);
        LocalControlResult step;
        try {
            step = exact_control_to_trajectory(law, grid, mask, current, tw,
                                               local_options(opts));
        } catch (const LocalControlFailureError& e) {
            throw StepFailureError("run_staircase: step " + std::to_string(k) +
                                       " failed (" + e.what() + "); double the step count",
                                   k, plan.increments[k - 1]);
        }
        if (step.control_deviation > plan.eta) {
            throw StepFailureError(
                "run_staircase: step " + std::to_string(k) + " control deviation " +
                    std::to_string(step.control_deviation) +
                    " exceeds the positivity margin; double the step count",
                k, step.control_deviation);
        }

        StepLog log;
        log.k = k;
        log.increment = plan.increments[k - 1];
        log.control_deviation = step.control_deviation;
        log.terminal_error = step.terminal_error;
        log.fp_iterations = step.fp_iterations;
        log.defect_iterations = step.defect_iterations;
        double mn = step.control.fields[0][0];
        for (const auto& f : step.control.fields)
            for (double v : f) mn = std::min(mn, v);
        log.min_control = mn;
        res.step_log.push_back(log);

        // splice the step schedule into the global ladder; the seam level is
        // owned by the later step (its field acts on the next interval)
        const int base_level = (k - 1) * steps_per_window;
        for (int kk = 0; kk <= steps_per_window; ++kk) {
            if (kk == steps_per_window && k < nbar) continue;  // next step overwrites
            res.control.fields[base_level + kk] = step.control.at(kk);
        }
        current = step.state.terminal();
    }
    res.control.recompute_stats();
    res.min_control = res.control.min_value;

    // confirming global re-solve under the assembled control
    res.trajectory =
        solve_forward(law, grid, plan.path.samples[0].state, res.control, mask, opts.local.newton);
    res.terminal_error =
        l2_norm(grid, subtract(res.trajectory.terminal(), plan.path.samples[nbar].state));
    return res;
}

GlobalControlResult run_staircase_adaptive(const SteadyPath& path, const DiffusionLaw& law,
                                           const Grid& grid, const ControlMask& mask,
                                           StaircaseOptions opts, StairCasePlan* plan_out) {
    StairCasePlan plan = plan_staircase(path, law, grid, mask, opts);
    for (;;) {
        try {
            GlobalControlResult res = run_staircase(plan, law, grid, mask, opts);
            if (plan_out) *plan_out = plan;
            return res;
        } catch (const StepFailureError&) {
            const int next = plan.nbar * 2;
            if (next > opts.nbar_cap) throw;
            const SteadyPath refined =
                build_path(law, grid, mask, path.vbar0, path.vbar1, next, path.rule);
            const PathModulus pm = path_modulus(refined, grid, mask);
            plan.path = refined;
            plan.nbar = next;
            plan.radius = pm.radius;
            plan.increments.clear();
            for (int j = 0; j < next; ++j) plan.increments.push_back(pm.rows[j].increment_c2);
        }
    }
}

NonnegReport verify_nonnegativity(const GlobalControlResult& result, const Grid& grid,
                                  const ControlMask& mask) {
    NonnegReport rep;
    bool first = true, first_omega = true;
    for (int k = 0; k < result.control.levels(); ++k) {
        const Field& f = result.control.at(k);
        for (int i = 0; i < static_cast<int>(f.size()); ++i) {
            if (first || f[i] < rep.min_global) {
                rep.min_global = f[i];
                rep.arg_time = result.control.tg.time_at(k);
                rep.arg_coord = grid.coords[i];
                first = false;
            }
            if (mask.omega.contains(grid.coords[i])) {
                if (first_omega || f[i] < rep.min_on_omega) {
                    rep.min_on_omega = f[i];
                    first_omega = false;
                }
            }
        }
    }
    return rep;
}

}  // namespace qheat
