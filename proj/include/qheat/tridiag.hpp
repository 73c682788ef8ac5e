#pragma once

#include <vector>

#include "qheat/errors.hpp"

namespace qheat {

/// Tridiagonal matrix; lower[0] and upper[n-1] are unused.
struct Tridiagonal {
    std::vector<double> lower, diag, upper;

    explicit Tridiagonal(int n = 0) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}
    int size() const { return static_cast<int>(diag.size()); }

    std::vector<double> apply(const std::vector<double>& x) const;
    std::vector<double> apply_transposed(const std::vector<double>& x) const;
    /// Thomas elimination; throws SolverError on a vanishing pivot.
    std::vector<double> solve(const std::vector<double>& rhs) const;
    std::vector<double> solve_transposed(const std::vector<double>& rhs) const;
};

}  // namespace qheat
