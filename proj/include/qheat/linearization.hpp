#pragma once

#include "qheat/diffusion_law.hpp"
#include "qheat/grid.hpp"
#include "qheat/linearized.hpp"
#include "qheat/trajectory.hpp"

namespace qheat {

/// Frozen coefficients of the linearized deviation equation around a target
/// trajectory ybar, linearization point w:
///   alpha = a(w + ybar),  drift = beta * d(ybar)/dx,
///   beta = -(a(w + ybar) - a(ybar)) / w  (limit -a'(ybar) as w -> 0).
struct Linearization {
    CoefficientField alpha;
    CoefficientField drift;
    double a0 = 0.0;
    double sup_w = 0.0;
    double sup_grad_ybar = 0.0;
    double B = 0.0;  // 1 + |w|_{C11 proxy}^2 + |grad ybar|_inf^2, metadata only

    const TimeGrid& time_grid() const { return alpha.tg; }
};

Linearization build_linearization(const DiffusionLaw& law, const Grid& grid,
                                  const Trajectory& ybar, const Trajectory& w);

/// Ratio form of beta with the derivative-limit branch near w = 0.
double beta_coefficient(const DiffusionLaw& law, double w, double ybar);

}  // namespace qheat
