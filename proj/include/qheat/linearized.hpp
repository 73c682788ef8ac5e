#pragma once

#include <string>
#include <vector>

#include "qheat/control_mask.hpp"
#include "qheat/grid.hpp"
#include "qheat/trajectory.hpp"
#include "qheat/tridiag.hpp"

namespace qheat {

/// Space-time coefficient sampled on grid nodes including the two boundary
/// nodes (length n+2 per level, indices 0 and n+1 are the boundary values).
struct CoefficientField {
    TimeGrid tg;
    std::vector<std::vector<double>> values;

    double at(int k, int node) const { return values[k][node]; }

    /// Extends interior-node data by copying the nearest interior value to
    /// the boundary nodes.
    static CoefficientField from_interior(const TimeGrid& tg,
                                          const std::vector<Field>& interior);
    static CoefficientField constant(const TimeGrid& tg, int n, double value);
};

struct LinearizedResult {
    Trajectory trajectory;
    std::vector<Tridiagonal> step_matrices;  // M_k maps z_{k+1} -> implicit system
    std::vector<std::string> warnings;
    double drift_dt_bound = 0.0;  // documented M-matrix bound h*a0/(2 max|drift|)
};

/// Implicit-Euler solve of z_t - d/dx(alpha dz/dx) + d/dx(drift * z) = u*rho.
/// Diffusion uses face-averaged alpha, the drift flux uses the face-interpolated
/// product; one tridiagonal solve per step; the step matrices are retained so
/// the adjoint can be formed as their exact transposes.
LinearizedResult solve_linearized(const CoefficientField& alpha, const CoefficientField& drift,
                                  const Grid& grid, const Field& z0, const ControlSchedule& u,
                                  const ControlMask& mask, double a0_hint = 0.0);

/// Assembles the step matrices only (no solve); mats[k] advances level k -> k+1
/// using the coefficients at level k+1.
std::vector<Tridiagonal> assemble_step_matrices(const CoefficientField& alpha,
                                                const CoefficientField& drift,
                                                const Grid& grid);

/// Forward sweep with precomputed matrices: M_k z_{k+1} = z_k + dt*source_k,
/// where source_k = u_k * rho (masked).
Trajectory run_linear_forward(const std::vector<Tridiagonal>& mats, const TimeGrid& tg,
                              const Field& z0, const ControlSchedule& u,
                              const ControlMask& mask);

/// Backward transpose sweep: M_k^T p_k = p_{k+1}, from p(T) = pT. This is the
/// exact discrete adjoint of run_linear_forward, so the summation-by-parts
/// duality identity holds to round-off.
Trajectory solve_adjoint_discrete(const std::vector<Tridiagonal>& mats, const TimeGrid& tg,
                                  const Field& pT);

/// Duality pairing sum_k dt * <u_k * rho, p_k> (active levels k = 0..steps-1).
double duality_pairing(const Grid& grid, const ControlSchedule& u, const ControlMask& mask,
                       const Trajectory& adjoint);

}  // namespace qheat
