#pragma once
// Closed-form reference shapes: Neumann oval, limacon and its rotation,
// Polubarinova-Kochina cardioid map, spheres.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace qd {

using cplx = std::complex<double>;

// ---- Neumann oval: boundary (x^2+y^2)^2 = a^2 (x^2+y^2) + 4 x^2. ----

// Conformal map of the unit disk onto the oval interior.
inline cplx oval_map(cplx z, double a) {
    double R = 0.5 * (a + std::sqrt(a * a + 4.0));
    return (R * R * R * R - 1.0) * z / (R * (R * R - z * z));
}

inline cplx oval_map_deriv(cplx z, double a) {
    double R = 0.5 * (a + std::sqrt(a * a + 4.0));
    cplx d = R * R - z * z;
    return (R * R * R * R - 1.0) * (R * R + z * z) / (R * d * d);
}

// Schwarz function of the oval. The radicand is a^4/4 + a^2 + zeta^2
// (a perfect square (a^2/2 + 1)^2 at zeta = +-1), branch positive at 0.
inline cplx oval_schwarz(cplx zeta, double a) {
    if (std::abs(zeta - 1.0) < 1e-12 || std::abs(zeta + 1.0) < 1e-12)
        throw std::domain_error("oval_schwarz: pole at zeta = +-1");
    cplx rad = std::sqrt(a * a * a * a / 4.0 + a * a + zeta * zeta);
    return (zeta * (a * a + 2.0) + 2.0 * zeta * rad) / (2.0 * (zeta * zeta - 1.0));
}

// Residues of the Schwarz function at zeta = +-1 have the closed form
// (a^2 + 2)/2; quadrature weights of the oval are pi times these.
inline double oval_residue_closed_form(double a) { return (a * a + 2.0) / 2.0; }

inline cplx oval_residue_numeric(double a, double at, int n = 4096) {
    // small-circle contour integral around zeta = at (+1 or -1)
    const double rho = 0.05, pi_ = 3.14159265358979323846;
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * pi_ * j / n;
        cplx z = at + rho * cplx(std::cos(th), std::sin(th));
        acc += oval_schwarz(z, a) * (z - at);
    }
    return acc / double(n);
}

// ---- Limacon w + sigma w^2 and Karp's rotated quadrature data. ----

inline void require_limacon_sigma(double s) {
    if (!(s > 0.0 && s < 0.5))
        throw std::domain_error("limacon: need 0 < sigma < 1/2");
}

// 2D quadrature formula: integral of analytic f = q0 f(0) + q1 f'(0).
inline std::pair<double, double> limacon_quadrature_2d(double sigma) {
    require_limacon_sigma(sigma);
    const double pi_ = 3.14159265358979323846;
    return {pi_ * (1.0 + 2.0 * sigma * sigma), pi_ * sigma};
}

// 4D quadrature weights of the rotated limacon:
// integral of harmonic u = a0 u(0) + a1 u_x1(0) + a2 u_x1x1(0).
inline std::tuple<double, double, double> karp_quadrature_4d(double sigma) {
    require_limacon_sigma(sigma);
    const double pi2 = 3.14159265358979323846 * 3.14159265358979323846;
    double s2 = sigma * sigma;
    return {pi2 * (1.0 + 6.0 * s2 + 2.0 * s2 * s2) / 2.0,
            pi2 * sigma * (1.0 + 2.0 * s2) / 2.0, pi2 * s2 / 12.0};
}

// ---- Sphere Schwarz potential. ----

// w(||x||) solving the Cauchy problem with data ||x||^2/2 and gradient x on
// the sphere of radius r in R^n.
inline double sphere_schwarz_potential(double x_norm, double r, int n) {
    if (x_norm <= 0.0) throw std::domain_error("sphere_schwarz_potential: ||x|| = 0");
    if (r <= 0.0 || n < 2) throw std::domain_error("sphere_schwarz_potential: bad r or n");
    if (n == 2) return r * r * (std::log(x_norm) + 0.5 - std::log(r));
    return n * r * r / (2.0 * (n - 2)) -
           std::pow(r, n) / ((n - 2) * std::pow(x_norm, n - 2));
}

// ---- Polubarinova-Kochina cardioid family zeta = a z^2 + b z. ----

inline cplx pk_cardioid_map(cplx z, double a, double b) { return a * z * z + b * z; }

inline cplx pk_cardioid_map_deriv(cplx z, double a, double b) { return 2.0 * a * z + b; }

// Schwarz function of the cardioid boundary, derived by eliminating z from
// zeta = a z^2 + b z and S = a/z^2 + b/z (branch with sqrt -> +b at zeta = 0).
inline cplx pk_cardioid_schwarz(cplx zeta, double a, double b) {
    if (!(a > 0.0 && b > 2.0 * a))
        throw std::domain_error("pk_cardioid_schwarz: need b > 2a > 0");
    cplx d = std::sqrt(b * b + 4.0 * a * zeta) - b;
    return 2.0 * a * b / d + 4.0 * a * a * a / (d * d);
}

} // namespace qd
