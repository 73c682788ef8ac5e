#include "qheat/steady.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qheat/tridiag.hpp"

namespace qheat {

namespace {

Field masked_source(const ControlMask& mask, const Field& vbar) {
    Field q(vbar.size());
    for (std::size_t i = 0; i < vbar.size(); ++i) q[i] = vbar[i] * mask.rho[i];
    return q;
}

Tridiagonal poisson_matrix(const Grid& grid) {
    const int n = grid.interior_count;
    const double h2 = grid.spacing * grid.spacing;
    Tridiagonal A(n);
    for (int i = 0; i < n; ++i) {
        A.diag[i] = 2.0 / h2;
        if (i > 0) A.lower[i] = -1.0 / h2;
        if (i + 1 < n) A.upper[i] = -1.0 / h2;
    }
    return A;
}

double residual_sup(const DiffusionLaw& law, const Grid& grid, const Field& y, const Field& q) {
    Field phi(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) phi[i] = law.phi(y[i]);
    const Field lap = laplacian_dirichlet(grid, phi);
    double m = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) m = std::max(m, std::abs(lap[i] + q[i]));
    return m;
}

}  // namespace

SteadyState solve_steady(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                         const Field& vbar) {
    const int n = grid.interior_count;
    if (static_cast<int>(vbar.size()) != n) throw DimensionError("solve_steady: vbar size mismatch");
    for (double v : vbar) {
        if (!std::isfinite(v)) throw InvalidParameterError("solve_steady: vbar must be finite");
    }
    const Field q = masked_source(mask, vbar);
    const Tridiagonal A = poisson_matrix(grid);
    const Field w = A.solve(q);

    SteadyState s;
    s.control = vbar;
    s.state.resize(n);
    for (int i = 0; i < n; ++i) s.state[i] = law.phi_inverse(w[i]);

    // Newton polish on the untransformed residual F(y) = D2 Phi(y) + q;
    // the transform solve already puts us within round-off of the root.
    const double h2 = grid.spacing * grid.spacing;
    Tridiagonal jac(n);
    for (int polish = 0; polish < 3; ++polish) {
        Field phi(n);
        for (int i = 0; i < n; ++i) phi[i] = law.phi(s.state[i]);
        Field f = laplacian_dirichlet(grid, phi);
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            f[i] += q[i];
            res = std::max(res, std::abs(f[i]));
        }
        if (res <= 1e-12) break;
        for (int i = 0; i < n; ++i) {
            jac.diag[i] = -2.0 * law.a(s.state[i]) / h2;
            if (i > 0) jac.lower[i] = law.a(s.state[i - 1]) / h2;
            if (i + 1 < n) jac.upper[i] = law.a(s.state[i + 1]) / h2;
        }
        const Field delta = jac.solve(f);
        for (int i = 0; i < n; ++i) s.state[i] -= delta[i];
    }
    s.residual = residual_sup(law, grid, s.state, q);
    return s;
}

double steady_residual(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                       const SteadyState& s) {
    return residual_sup(law, grid, s.state, masked_source(mask, s.control));
}

SteadyPath build_path(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                      const Field& vbar0, const Field& vbar1, int segments,
                      ControlPathRule rule) {
    if (segments < 1) throw InvalidParameterError("build_path: need at least one segment");
    SteadyPath p;
    p.vbar0 = vbar0;
    p.vbar1 = vbar1;
    if (rule) {
        p.rule = std::move(rule);
    } else {
        Field v0 = vbar0, v1 = vbar1;
        p.rule = [v0, v1](double s) {
            Field v(v0.size());
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = (1.0 - s) * v0[i] + s * v1[i];
            return v;
        };
    }
    p.segments = segments;
    p.s_values.resize(segments + 1);
    p.samples.reserve(segments + 1);
    for (int j = 0; j <= segments; ++j) {
        const double s = static_cast<double>(j) / segments;
        p.s_values[j] = s;
        p.samples.push_back(solve_steady(law, grid, mask, p.rule(s)));
    }
    return p;
}

PathModulus path_modulus(const SteadyPath& path, const Grid& grid, const ControlMask& mask) {
    PathModulus pm;
    const int m = path.segments;
    pm.rows.resize(m + 1);
    bool first = true;
    for (int j = 0; j <= m; ++j) {
        PathModulusRow& row = pm.rows[j];
        row.sample = j;
        row.s = path.s_values[j];
        const Field& vbar = path.samples[j].control;
        double mn = vbar[0];
        double mn_omega = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vbar.size(); ++i) {
            mn = std::min(mn, vbar[i]);
            if (mask.omega.contains(grid.coords[i])) mn_omega = std::min(mn_omega, vbar[i]);
        }
        row.min_control = mn;
        row.min_control_on_omega = std::isfinite(mn_omega) ? mn_omega : mn;
        if (j < m) {
            row.increment_c2 =
                c2_proxy_norm(grid, subtract(path.samples[j + 1].state, path.samples[j].state));
            pm.max_increment = std::max(pm.max_increment, row.increment_c2);
        }
        pm.radius = std::max(pm.radius, c2_proxy_norm(grid, path.samples[j].state));
        if (first) {
            pm.eta = row.min_control;
            pm.eta_omega = row.min_control_on_omega;
            first = false;
        } else {
            pm.eta = std::min(pm.eta, row.min_control);
            pm.eta_omega = std::min(pm.eta_omega, row.min_control_on_omega);
        }
    }
    return pm;
}

Field steady_picard_oracle(const DiffusionLaw& law, const Grid& grid, const ControlMask& mask,
                           const Field& vbar, double damping, double tol, int max_iter) {
    const int n = grid.interior_count;
    const double h2 = grid.spacing * grid.spacing;
    const Field q = masked_source(mask, vbar);

    // integral mean of a between two state values, by quadrature only
    auto face_coeff = [&law](double u, double v) {
        if (u == v) return law.a(u);
        return integrate_adaptive(law.a, u, v, 1e-15) / (v - u);
    };

    Field y(n, 0.0);
    for (int it = 0; it < max_iter; ++it) {
        Tridiagonal A(n);
        for (int i = 0; i < n; ++i) {
            const double yl = (i > 0) ? y[i - 1] : 0.0;
            const double yr = (i + 1 < n) ? y[i + 1] : 0.0;
            const double cw = face_coeff(yl, y[i]);
            const double ce = face_coeff(y[i], yr);
            A.diag[i] = (cw + ce) / h2;
            if (i > 0) A.lower[i] = -cw / h2;
            if (i + 1 < n) A.upper[i] = -ce / h2;
        }
        const Field y_new = A.solve(q);
        double change = 0.0;
        for (int i = 0; i < n; ++i) {
            const double next = (1.0 - damping) * y[i] + damping * y_new[i];
            change = std::max(change, std::abs(next - y[i]));
            y[i] = next;
        }
        if (change <= tol) break;
    }
    return y;
}

}  // namespace qheat
