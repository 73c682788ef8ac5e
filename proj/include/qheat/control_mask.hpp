#pragma once

#include "qheat/fields.hpp"
#include "qheat/grid.hpp"

namespace qheat {

/// Quintic smoothstep 6t^5 - 15t^4 + 10t^3, clamped to [0,1].
double smoothstep_quintic(double t);

/// Spatial control profile rho: 1 on omega1, 0 outside omega, quintic
/// transition on the bands in between (two continuous derivatives at the
/// band edges, matching the smooth-cutoff hypothesis at grid scale).
struct ControlMask {
    Field rho;
    Interval omega;
    Interval omega1;

    double rho_at(int i) const { return rho[static_cast<std::size_t>(i)]; }

    /// Debug mask: rho identically 1 on the whole domain.
    static ControlMask uniform(const Grid& grid);
};

ControlMask build_control_mask(const Grid& grid, Interval omega, Interval omega1);

}  // namespace qheat
