#include "qheat/grid.hpp"

#include <cmath>
#include <string>

#include "qheat/errors.hpp"

namespace qheat {

Grid build_grid(double length, int interior_count) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw InvalidParameterError("build_grid: domain length must be positive, got " +
                                    std::to_string(length));
    }
    if (interior_count < 3) {
        throw InvalidParameterError("build_grid: need at least 3 interior points, got " +
                                    std::to_string(interior_count));
    }
    Grid g;
    g.length = length;
    g.interior_count = interior_count;
    g.spacing = length / (interior_count + 1);
    g.coords.resize(interior_count);
    for (int i = 0; i < interior_count; ++i) {
        g.coords[i] = (i + 1) * g.spacing;
    }
    return g;
}

}  // namespace qheat
