#include "qheat/linearized.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qheat {

CoefficientField CoefficientField::from_interior(const TimeGrid& tg,
                                                 const std::vector<Field>& interior) {
    if (static_cast<int>(interior.size()) != tg.levels()) {
        throw DimensionError("coefficient field: level count mismatch");
    }
    CoefficientField c;
    c.tg = tg;
    c.values.resize(interior.size());
    for (std::size_t k = 0; k < interior.size(); ++k) {
        const auto& f = interior[k];
        std::vector<double> ext(f.size() + 2);
        ext.front() = f.empty() ? 0.0 : f.front();
        ext.back() = f.empty() ? 0.0 : f.back();
        std::copy(f.begin(), f.end(), ext.begin() + 1);
        c.values[k] = std::move(ext);
    }
    return c;
}

CoefficientField CoefficientField::constant(const TimeGrid& tg, int n, double value) {
    CoefficientField c;
    c.tg = tg;
    c.values.assign(tg.levels(), std::vector<double>(n + 2, value));
    return c;
}

std::vector<Tridiagonal> assemble_step_matrices(const CoefficientField& alpha,
                                                const CoefficientField& drift,
                                                const Grid& grid) {
    const TimeGrid tg = alpha.tg;
    if (!tg.matches(drift.tg)) throw DimensionError("step matrices: coefficient ladders differ");
    const int n = grid.interior_count;
    const double h = grid.spacing;
    const double h2 = h * h;
    std::vector<Tridiagonal> mats;
    mats.reserve(tg.steps);
    for (int k = 0; k < tg.steps; ++k) {
        // implicit Euler: coefficients at the new time level k+1
        const auto& a = alpha.values[k + 1];
        const auto& g = drift.values[k + 1];
        if (static_cast<int>(a.size()) != n + 2 || static_cast<int>(g.size()) != n + 2) {
            throw DimensionError("step matrices: coefficient width must be n+2");
        }
        Tridiagonal M(n);
        for (int i = 0; i < n; ++i) {
            const int node = i + 1;  // extended index
            const double a_w = 0.5 * (a[node - 1] + a[node]);
            const double a_e = 0.5 * (a[node] + a[node + 1]);
            M.diag[i] = 1.0 + tg.dt * (a_w + a_e) / h2;
            if (i > 0) M.lower[i] = tg.dt * (-a_w / h2 - g[node - 1] / (2.0 * h));
            if (i + 1 < n) M.upper[i] = tg.dt * (-a_e / h2 + g[node + 1] / (2.0 * h));
        }
        mats.push_back(std::move(M));
    }
    return mats;
}

Trajectory run_linear_forward(const std::vector<Tridiagonal>& mats, const TimeGrid& tg,
                              const Field& z0, const ControlSchedule& u,
                              const ControlMask& mask) {
    if (static_cast<int>(mats.size()) != tg.steps) {
        throw DimensionError("linear forward: matrix count does not match ladder");
    }
    if (!u.tg.matches(tg)) throw DimensionError("linear forward: control ladder mismatch");
    const int n = static_cast<int>(z0.size());
    Trajectory traj;
    traj.tg = tg;
    traj.states.reserve(tg.levels());
    traj.states.push_back(z0);
    Field rhs(n);
    for (int k = 0; k < tg.steps; ++k) {
        const Field& prev = traj.states.back();
        const Field& uk = u.at(k);
        for (int i = 0; i < n; ++i) rhs[i] = prev[i] + tg.dt * uk[i] * mask.rho[i];
        traj.states.push_back(mats[k].solve(rhs));
    }
    return traj;
}

LinearizedResult solve_linearized(const CoefficientField& alpha, const CoefficientField& drift,
                                  const Grid& grid, const Field& z0, const ControlSchedule& u,
                                  const ControlMask& mask, double a0_hint) {
    LinearizedResult res;
    res.step_matrices = assemble_step_matrices(alpha, drift, grid);

    double drift_max = 0.0;
    double alpha_min = std::numeric_limits<double>::infinity();
    for (const auto& lvl : drift.values)
        for (double v : lvl) drift_max = std::max(drift_max, std::abs(v));
    for (const auto& lvl : alpha.values)
        for (double v : lvl) alpha_min = std::min(alpha_min, v);
    const double a0 = a0_hint > 0.0 ? a0_hint : alpha_min;
    if (drift_max > 0.0) {
        res.drift_dt_bound = grid.spacing * a0 / (2.0 * drift_max);
        if (alpha.tg.dt > res.drift_dt_bound) {
            res.warnings.push_back(
                "dt " + std::to_string(alpha.tg.dt) + " exceeds the drift stability bound " +
                std::to_string(res.drift_dt_bound) + "; the step matrix may lose the M-matrix sign pattern");
        }
    }
    res.trajectory = run_linear_forward(res.step_matrices, alpha.tg, z0, u, mask);
    return res;
}

Trajectory solve_adjoint_discrete(const std::vector<Tridiagonal>& mats, const TimeGrid& tg,
                                  const Field& pT) {
    if (static_cast<int>(mats.size()) != tg.steps) {
        throw DimensionError("adjoint: matrix count does not match ladder");
    }
    Trajectory adj;
    adj.tg = tg;
    adj.backward = true;
    adj.states.assign(tg.levels(), Field());
    adj.states[tg.steps] = pT;
    for (int k = tg.steps - 1; k >= 0; --k) {
        adj.states[k] = mats[k].solve_transposed(adj.states[k + 1]);
    }
    return adj;
}

double duality_pairing(const Grid& grid, const ControlSchedule& u, const ControlMask& mask,
                       const Trajectory& adjoint) {
    if (!u.tg.matches(adjoint.tg)) throw DimensionError("duality pairing: ladder mismatch");
    double total = 0.0;
    for (int k = 0; k < u.tg.steps; ++k) {
        const Field& uk = u.at(k);
        const Field& pk = adjoint.at(k);
        double s = 0.0;
        for (std::size_t i = 0; i < uk.size(); ++i) s += uk[i] * mask.rho[i] * pk[i];
        total += u.tg.dt * grid.spacing * s;
    }
    return total;
}

}  // namespace qheat
