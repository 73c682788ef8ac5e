#include "qheat/linearization.hpp"

#include <cmath>

namespace qheat {

double beta_coefficient(const DiffusionLaw& law, double w, double ybar) {
    if (std::abs(w) < 1e-12) return -law.a_prime(ybar);
    return -(law.a(w + ybar) - law.a(ybar)) / w;
}

Linearization build_linearization(const DiffusionLaw& law, const Grid& grid,
                                  const Trajectory& ybar, const Trajectory& w) {
    if (!ybar.tg.matches(w.tg) || ybar.levels() != w.levels()) {
        throw DimensionError("build_linearization: trajectory ladders differ");
    }
    const int n = grid.interior_count;
    const int levels = ybar.levels();
    Linearization lin;
    lin.alpha.tg = ybar.tg;
    lin.drift.tg = ybar.tg;
    lin.alpha.values.assign(levels, std::vector<double>(n + 2, 0.0));
    lin.drift.values.assign(levels, std::vector<double>(n + 2, 0.0));
    lin.a0 = law.a0;

    double sup_w = 0.0, sup_grad = 0.0, sup_wt = 0.0, sup_wx = 0.0;
    const double a_at_zero = law.a(0.0);  // both fields vanish on the boundary
    for (int k = 0; k < levels; ++k) {
        const Field& yb = ybar.at(k);
        const Field& wk = w.at(k);
        auto& al = lin.alpha.values[k];
        auto& dr = lin.drift.values[k];
        al[0] = a_at_zero;
        al[n + 1] = a_at_zero;
        for (int i = 0; i < n; ++i) {
            al[i + 1] = law.a(wk[i] + yb[i]);
            const double ybl = (i > 0) ? yb[i - 1] : 0.0;
            const double ybr = (i + 1 < n) ? yb[i + 1] : 0.0;
            const double grad = (ybr - ybl) / (2.0 * grid.spacing);
            dr[i + 1] = beta_coefficient(law, wk[i], yb[i]) * grad;
            sup_w = std::max(sup_w, std::abs(wk[i]));
            sup_grad = std::max(sup_grad, std::abs(grad));
            if (al[i + 1] < law.a0 - 1e-12) {
                throw InvalidParameterError("build_linearization: alpha fell below a0");
            }
        }
        sup_wx = std::max(sup_wx, sup_first_divided_difference(grid, wk));
        if (k > 0) {
            for (int i = 0; i < n; ++i) {
                sup_wt = std::max(sup_wt, std::abs(wk[i] - w.at(k - 1)[i]) / ybar.tg.dt);
            }
        }
    }
    lin.sup_w = sup_w;
    lin.sup_grad_ybar = sup_grad;
    const double w_c11 = std::max({sup_w, sup_wx, sup_wt});
    lin.B = 1.0 + w_c11 * w_c11 + sup_grad * sup_grad;
    return lin;
}

}  // namespace qheat
