#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qheat/errors.hpp"
#include "qheat/grid.hpp"

namespace qheat {

using Field = std::vector<double>;

inline double sup_norm(const Field& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

/// Discrete L2 norm: sqrt(h * sum f_i^2).
inline double l2_norm(const Grid& g, const Field& f) {
    double s = 0.0;
    for (double v : f) s += v * v;
    return std::sqrt(g.spacing * s);
}

inline double l1_norm(const Grid& g, const Field& f) {
    double s = 0.0;
    for (double v : f) s += std::abs(v);
    return g.spacing * s;
}

/// Discrete L2 inner product: h * sum a_i b_i.
inline double inner(const Grid& g, const Field& a, const Field& b) {
    if (a.size() != b.size()) throw DimensionError("inner: field sizes differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return g.spacing * s;
}

/// h * sum f_i: rectangle rule on interior nodes (trapezoid given zero boundary).
inline double integrate(const Grid& g, const Field& f) {
    double s = 0.0;
    for (double v : f) s += v;
    return g.spacing * s;
}

/// Second-difference Laplacian with zero Dirichlet ghost values.
inline Field laplacian_dirichlet(const Grid& g, const Field& f) {
    const int n = g.interior_count;
    const double h2 = g.spacing * g.spacing;
    Field out(n);
    for (int i = 0; i < n; ++i) {
        const double left = (i > 0) ? f[i - 1] : 0.0;
        const double right = (i + 1 < n) ? f[i + 1] : 0.0;
        out[i] = (right - 2.0 * f[i] + left) / h2;
    }
    return out;
}

/// Sup of first divided differences (f_{i+1}-f_i)/h, including the boundary
/// differences against the zero ghost values.
inline double sup_first_divided_difference(const Grid& g, const Field& f) {
    const int n = g.interior_count;
    double m = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double a = (i > 0) ? f[i - 1] : 0.0;
        const double b = (i < n) ? f[i] : 0.0;
        m = std::max(m, std::abs(b - a) / g.spacing);
    }
    return m;
}

/// Sup of second divided differences with zero ghost values.
inline double sup_second_divided_difference(const Grid& g, const Field& f) {
    return sup_norm(laplacian_dirichlet(g, f));
}

/// Discrete C^2 proxy norm: max of the sup norms of the field and of its
/// first and second divided differences. Stands in wherever a Holder-space
/// bound is needed but not computable on a grid.
inline double c2_proxy_norm(const Grid& g, const Field& f) {
    return std::max({sup_norm(f), sup_first_divided_difference(g, f),
                     sup_second_divided_difference(g, f)});
}

inline Field subtract(const Field& a, const Field& b) {
    if (a.size() != b.size()) throw DimensionError("subtract: field sizes differ");
    Field out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Field add(const Field& a, const Field& b) {
    if (a.size() != b.size()) throw DimensionError("add: field sizes differ");
    Field out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Field scale(const Field& a, double c) {
    Field out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

/// Centered gradient on interior nodes with zero ghost values.
inline Field gradient_centered(const Grid& g, const Field& f) {
    const int n = g.interior_count;
    Field out(n);
    for (int i = 0; i < n; ++i) {
        const double left = (i > 0) ? f[i - 1] : 0.0;
        const double right = (i + 1 < n) ? f[i + 1] : 0.0;
        out[i] = (right - left) / (2.0 * g.spacing);
    }
    return out;
}

/// Sup of the gradient including one-sided boundary stencils.
inline double gradient_sup(const Grid& g, const Field& f) {
    const int n = g.interior_count;
    double m = 0.0;
    if (n > 0) {
        m = std::max(std::abs(f[0]) / g.spacing, std::abs(f[n - 1]) / g.spacing);
    }
    const Field grad = gradient_centered(g, f);
    for (double v : grad) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace qheat
