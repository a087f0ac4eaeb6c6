#pragma once
// Complete elliptic integrals via Carlson symmetric forms (duplication
// algorithm) plus an AGM evaluation of K used as a cross-check oracle.

#include <cmath>
#include <stdexcept>

namespace qd {

// Carlson R_F(x, y, z), x,y,z >= 0 with at most one zero.
inline double carlson_rf(double x, double y, double z) {
    const double tol = 1e-6; // series correction is O(tol^6)
    for (int it = 0; it < 200; ++it) {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        double mu = (x + y + z) / 3.0;
        double dx = 1 - x / mu, dy = 1 - y / mu, dz = 1 - z / mu;
        double eps = std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)});
        if (eps < tol) {
            double e2 = dx * dy - dz * dz, e3 = dx * dy * dz;
            return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 -
                    3.0 * e2 * e3 / 44.0) /
                   std::sqrt(mu);
        }
    }
    throw std::runtime_error("carlson_rf: no convergence");
}

// Carlson R_C(x, y) = R_F(x, y, y), y > 0.
inline double carlson_rc(double x, double y) { return carlson_rf(x, y, y); }

// Carlson R_J(x, y, z, p), p > 0.
inline double carlson_rj(double x, double y, double z, double p) {
    const double tol = 1e-6; // series correction is O(tol^6)
    double sum = 0.0, fac = 1.0;
    for (int it = 0; it < 200; ++it) {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * sy + sy * sz + sz * sx;
        double alpha = p * (sx + sy + sz) + sx * sy * sz;
        alpha *= alpha;
        double beta = p * (p + lam) * (p + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        double mu = (x + y + z + 2.0 * p) / 5.0;
        double dx = 1 - x / mu, dy = 1 - y / mu, dz = 1 - z / mu, dp = 1 - p / mu;
        double eps = std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz), std::fabs(dp)});
        if (eps < tol) {
            double ea = dx * (dy + dz) + dy * dz, eb = dx * dy * dz,
                   ec = dp * dp, ed = ea - 3.0 * ec, ee = eb + 2.0 * dp * (ea - ec);
            double series =
                1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * ee) +
                eb * (1.0 / 6.0 + dp * (-3.0 / 11.0 + dp * 3.0 / 26.0)) +
                dp * ea * (1.0 / 3.0 - dp * 3.0 / 22.0) - dp * ec / 3.0;
            return 3.0 * sum + fac * series / (mu * std::sqrt(mu));
        }
    }
    throw std::runtime_error("carlson_rj: no convergence");
}

// Complete elliptic integral of the third kind,
// Pi(n, m) = int_0^{pi/2} dtheta / ((1 - n sin^2) sqrt(1 - m sin^2)),
// for n < 1, m < 1.
inline double carlson_pi(double n, double m) {
    if (n >= 1.0 || m >= 1.0)
        throw std::domain_error("carlson_pi: requires n < 1 and m < 1");
    return carlson_rf(0.0, 1.0 - m, 1.0) +
           (n / 3.0) * carlson_rj(0.0, 1.0 - m, 1.0, 1.0 - n);
}

// Complete elliptic integral of the first kind K(m) via the
// arithmetic-geometric mean (independent oracle for carlson_pi(0, m)).
inline double agm_K(double m) {
    if (m >= 1.0) throw std::domain_error("agm_K: requires m < 1");
    double a = 1.0, b = std::sqrt(1.0 - m);
    for (int it = 0; it < 100 && std::fabs(a - b) > 1e-17 * a; ++it) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 3.14159265358979323846 / (2.0 * a);
}

} // namespace qd
