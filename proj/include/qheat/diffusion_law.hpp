#pragma once

#include <functional>
#include <optional>
#include <string>

namespace qheat {

/// Diffusion nonlinearity a(.) with its bounds and Kirchhoff primitive
/// Phi(r) = integral of a over [0, r]. Phi is strictly increasing since
/// a >= a0 > 0, so the inverse is well defined on the whole line.
struct DiffusionLaw {
    std::string name;
    std::function<double(double)> a;
    std::function<double(double)> a_prime;
    double a0 = 0.0;           // uniform lower bound of a
    double deriv_bound = 0.0;  // M: bound on |a'|
    // Closed-form primitive when the law admits one; otherwise Phi falls
    // back to adaptive quadrature.
    std::optional<std::function<double(double)>> phi_closed;

    double phi(double r) const;
    double phi_inverse(double w) const;

    static DiffusionLaw constant(double c);
    static DiffusionLaw two_plus_sine();
    static DiffusionLaw rational_bump();
};

/// Builtin registry used by the CLI: "constant" (takes c), "two-plus-sine",
/// "rational-bump".
DiffusionLaw make_law(const std::string& name, double param = 1.0);

double kirchhoff(const DiffusionLaw& law, double r);
double kirchhoff_inverse(const DiffusionLaw& law, double w);

/// Adaptive Simpson quadrature to the requested absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol);

}  // namespace qheat
