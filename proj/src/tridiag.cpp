#include "qheat/tridiag.hpp"

#include <cmath>

namespace qheat {

std::vector<double> Tridiagonal::apply(const std::vector<double>& x) const {
    const int n = size();
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += lower[i] * x[i - 1];
        if (i + 1 < n) v += upper[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

std::vector<double> Tridiagonal::apply_transposed(const std::vector<double>& x) const {
    const int n = size();
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += upper[i - 1] * x[i - 1];
        if (i + 1 < n) v += lower[i + 1] * x[i + 1];
        y[i] = v;
    }
    return y;
}

std::vector<double> Tridiagonal::solve(const std::vector<double>& rhs) const {
    const int n = size();
    if (static_cast<int>(rhs.size()) != n) throw DimensionError("tridiagonal solve: size mismatch");
    std::vector<double> c(n), d(n);
    double piv = diag[0];
    if (std::abs(piv) < 1e-300) throw SolverError("tridiagonal solve: singular pivot");
    c[0] = upper[0] / piv;
    d[0] = rhs[0] / piv;
    for (int i = 1; i < n; ++i) {
        piv = diag[i] - lower[i] * c[i - 1];
        if (std::abs(piv) < 1e-300) throw SolverError("tridiagonal solve: singular pivot");
        c[i] = upper[i] / piv;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / piv;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

std::vector<double> Tridiagonal::solve_transposed(const std::vector<double>& rhs) const {
    // transpose swaps the roles of lower and upper
    const int n = size();
    if (static_cast<int>(rhs.size()) != n) throw DimensionError("tridiagonal solve: size mismatch");
    std::vector<double> c(n), d(n);
    double piv = diag[0];
    if (std::abs(piv) < 1e-300) throw SolverError("tridiagonal solve: singular pivot");
    c[0] = (n > 1 ? lower[1] : 0.0) / piv;
    d[0] = rhs[0] / piv;
    for (int i = 1; i < n; ++i) {
        piv = diag[i] - upper[i - 1] * c[i - 1];
        if (std::abs(piv) < 1e-300) throw SolverError("tridiagonal solve: singular pivot");
        c[i] = (i + 1 < n ? lower[i + 1] : 0.0) / piv;
        d[i] = (rhs[i] - upper[i - 1] * d[i - 1]) / piv;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

}  // namespace qheat
