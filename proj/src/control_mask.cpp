#include "qheat/control_mask.hpp"

#include <algorithm>
#include <string>

#include "qheat/errors.hpp"

namespace qheat {

double smoothstep_quintic(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

ControlMask ControlMask::uniform(const Grid& grid) {
    ControlMask m;
    m.rho.assign(grid.interior_count, 1.0);
    m.omega = {0.0, grid.length};
    m.omega1 = {0.0, grid.length};
    return m;
}

ControlMask build_control_mask(const Grid& grid, Interval omega, Interval omega1) {
    if (!(omega.lo > 0.0 && omega.hi < grid.length && omega.lo < omega.hi)) {
        throw GeometryError("control mask: omega must satisfy 0 < lo < hi < L");
    }
    if (!(omega1.lo > omega.lo && omega1.hi < omega.hi && omega1.lo < omega1.hi)) {
        throw GeometryError("control mask: closure of omega1 must lie inside omega");
    }
    // each transition band needs at least 2 interior grid points
    auto points_in = [&](double lo, double hi) {
        int c = 0;
        for (double x : grid.coords)
            if (x > lo && x < hi) ++c;
        return c;
    };
    if (points_in(omega.lo, omega1.lo) < 2 || points_in(omega1.hi, omega.hi) < 2) {
        throw ResolutionError("control mask: transition band thinner than 2 grid points");
    }

    ControlMask m;
    m.omega = omega;
    m.omega1 = omega1;
    m.rho.resize(grid.interior_count);
    for (int i = 0; i < grid.interior_count; ++i) {
        const double x = grid.coords[i];
        double v = 0.0;
        if (x <= omega.lo || x >= omega.hi) {
            v = 0.0;
        } else if (x >= omega1.lo && x <= omega1.hi) {
            v = 1.0;
        } else if (x < omega1.lo) {
            v = smoothstep_quintic((x - omega.lo) / (omega1.lo - omega.lo));
        } else {
            v = smoothstep_quintic((omega.hi - x) / (omega.hi - omega1.hi));
        }
        m.rho[i] = v;
    }
    return m;
}

}  // namespace qheat
