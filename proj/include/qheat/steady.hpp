#pragma once

#include <functional>
#include <vector>

#include "qheat/control_mask.hpp"
#include "qheat/diffusion_law.hpp"
#include "qheat/grid.hpp"

namespace qheat {

/// A steady state: -D2 Phi(ybar) = vbar*rho with zero boundary values.
struct SteadyState {
    Field state;    // ybar
    Field control;  // vbar
    double residual = 0.0;
};

/// Solves the steady problem through the Kirchhoff transform: one tridiagonal
/// Poisson solve for w = Phi(ybar), then the pointwise inverse, then a short
/// Newton polish on the untransformed residual.
SteadyState solve_steady(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                         const Field& vbar);

/// sup_i | D2 Phi(ybar)_i + vbar_i rho_i |
double steady_residual(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                       const SteadyState& s);

using ControlPathRule = std::function<Field(double)>;

/// Sampled path of steady states gamma(s) = Lambda(lambda(s)), s on [0,1].
struct SteadyPath {
    Field vbar0, vbar1;
    ControlPathRule rule;  // lambda(s); defaults to the affine blend
    int segments = 0;      // m
    std::vector<double> s_values;
    std::vector<SteadyState> samples;  // size m+1
};

SteadyPath build_path(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                      const Field& vbar0, const Field& vbar1, int segments,
                      ControlPathRule rule = nullptr);

struct PathModulusRow {
    int sample = 0;
    double s = 0.0;
    double increment_c2 = 0.0;  // ||gamma(s_{j+1}) - gamma(s_j)|| proxy, 0 on last row
    double min_control = 0.0;
    double min_control_on_omega = 0.0;
};

struct PathModulus {
    std::vector<PathModulusRow> rows;
    double eta = 0.0;        // min of the steady controls over the whole domain
    double eta_omega = 0.0;  // min restricted to omega
    double radius = 0.0;     // R: max C^2 proxy norm of the sampled states
    double max_increment = 0.0;
};

PathModulus path_modulus(const SteadyPath& path, const Grid& grid, const ControlMask& mask);

/// Test oracle: damped Picard iteration on the untransformed equation with
/// integral-mean face coefficients (by quadrature of a, no use of Phi/Phi^-1).
Field steady_picard_oracle(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                           const Field& vbar, double damping = 0.7, double tol = 1e-12,
                           int max_iter = 500);

}  // namespace qheat
