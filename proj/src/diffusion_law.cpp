#include "qheat/diffusion_law.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qheat/errors.hpp"

namespace qheat {

namespace {

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

double DiffusionLaw::phi(double r) const {
    if (std::isnan(r)) throw InvalidParameterError("phi: NaN input");
    if (phi_closed) return (*phi_closed)(r);
    return integrate_adaptive(a, 0.0, r, 1e-13);
}

double DiffusionLaw::phi_inverse(double w) const {
    if (std::isnan(w)) throw InvalidParameterError("phi_inverse: NaN input");
    if (w == 0.0) return 0.0;
    // |Phi(r)| >= a0 |r| with matching sign, so the root lies in [0, w/a0].
    double lo = std::min(0.0, w / a0);
    double hi = std::max(0.0, w / a0);
    double r = w / a(0.0);
    if (r < lo || r > hi) r = 0.5 * (lo + hi);
    const double tol = 1e-15 * (1.0 + std::abs(w));
    double fr = phi(r) - w;
    double best_r = r;
    double best = std::abs(fr);
    for (int it = 0; it < 100; ++it) {
        if (std::abs(fr) <= tol) return r;
        if (fr > 0.0) hi = r; else lo = r;
        double step = fr / a(r);  // Phi' = a
        double next = r - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection safeguard
        if (next == r) break;
        r = next;
        fr = phi(r) - w;
        if (std::abs(fr) < best) {
            best = std::abs(fr);
            best_r = r;
        }
    }
    return best_r;  // converged to the floating-point floor
}

DiffusionLaw DiffusionLaw::constant(double c) {
    if (!(c > 0.0)) throw InvalidParameterError("constant law: coefficient must be positive");
    DiffusionLaw law;
    law.name = "constant";
    law.a = [c](double) { return c; };
    law.a_prime = [](double) { return 0.0; };
    law.a0 = c;
    law.deriv_bound = 0.0;
    law.phi_closed = [c](double r) { return c * r; };
    return law;
}

DiffusionLaw DiffusionLaw::two_plus_sine() {
    DiffusionLaw law;
    law.name = "two-plus-sine";
    law.a = [](double r) { return 2.0 + std::sin(r); };
    law.a_prime = [](double r) { return std::cos(r); };
    law.a0 = 1.0;
    law.deriv_bound = 1.0;
    law.phi_closed = [](double r) { return 2.0 * r + 1.0 - std::cos(r); };
    return law;
}

DiffusionLaw DiffusionLaw::rational_bump() {
    DiffusionLaw law;
    law.name = "rational-bump";
    law.a = [](double r) { return 1.0 + 1.0 / (1.0 + r * r); };
    law.a_prime = [](double r) {
        const double q = 1.0 + r * r;
        return -2.0 * r / (q * q);
    };
    law.a0 = 1.0;
    law.deriv_bound = 0.65;  // max at r = 1/sqrt(3), about 0.6495
    law.phi_closed = [](double r) { return r + std::atan(r); };
    return law;
}

DiffusionLaw make_law(const std::string& name, double param) {
    if (name == "constant") return DiffusionLaw::constant(param);
    if (name == "two-plus-sine") return DiffusionLaw::two_plus_sine();
    if (name == "rational-bump") return DiffusionLaw::rational_bump();
    throw InvalidParameterError("unknown diffusion law: " + name);
}

double kirchhoff(const DiffusionLaw& law, double r) { return law.phi(r); }

double kirchhoff_inverse(const DiffusionLaw& law, double w) { return law.phi_inverse(w); }

}  // namespace qheat
