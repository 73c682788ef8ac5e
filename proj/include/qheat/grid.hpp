#pragma once

#include <vector>

namespace qheat {

/// Open interval (lo, hi), used for the control regions.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return x > lo && x < hi; }
};

/// Uniform 1D mesh on (0, L) with n interior points and homogeneous
/// Dirichlet boundary. Fields live on the interior points only.
struct Grid {
    double length = 0.0;        // L
    int interior_count = 0;     // n
    double spacing = 0.0;       // h = L/(n+1)
    std::vector<double> coords; // x_i = i*h, i = 1..n

    int n() const { return interior_count; }
    double h() const { return spacing; }
};

Grid build_grid(double length, int interior_count);

}  // namespace qheat
