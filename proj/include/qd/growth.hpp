#pragma once
// Laplacian-growth trajectories: exact moment-space stepping with parameter
// inversion for the R^4 family, and the 2D cardioid family in closed form.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qd/conformal.hpp"
#include "qd/moments.hpp"

namespace qd {

struct GrowthState {
    double t = 0.0;
    double a = 0.0;
    double C = 1.0;
    double a0 = 0.0;
    double a1 = 0.0;
    double min_abs_df = 0.0;
    bool cusp = false;
};

namespace detail {
struct Forward {
    double a0, a1, min_abs_df;
};

inline Forward forward_map(double a, double C) {
    MapParams p(a, C);
    int n = std::max(2048, suggested_n(a));
    auto grid = laurent_coeffs(p, n);
    auto curve = boundary_curve(p, grid, n, /*check_simple=*/false);
    auto q = extract_quadrature_direct(curve, 2);
    return {q.a0, q.a1, curve.min_abs_df};
}
} // namespace detail

// Two-dimensional Newton solve for (a, C) given target (a0, a1).
inline MapParams invert_parameters(double target_a0, double target_a1, MapParams seed) {
    double a = seed.a, C = seed.C;
    auto residual = [&](double aa, double cc, double& r0, double& r1) {
        auto f = detail::forward_map(aa, cc);
        r0 = f.a0 - target_a0;
        r1 = f.a1 - target_a1;
    };
    double r0, r1;
    residual(a, C, r0, r1);
    double res = std::fabs(r0) + std::fabs(r1);
    const double tol = 1e-8 * target_a0;
    for (int it = 0; it < 50 && res > tol; ++it) {
        double ha = std::max(1e-6, 1e-6 * a), hc = 1e-6 * C;
        double r0a, r1a, r0c, r1c;
        residual(std::min(a + ha, 0.995), C, r0a, r1a);
        residual(a, C + hc, r0c, r1c);
        double j00 = (r0a - r0) / ha, j01 = (r0c - r0) / hc;
        double j10 = (r1a - r1) / ha, j11 = (r1c - r1) / hc;
        double det = j00 * j11 - j01 * j10;
        if (std::fabs(det) < 1e-300)
            throw std::runtime_error("invert_parameters: singular Jacobian");
        // solve J [da dC]^T = -[r0 r1]^T
        double da = (j01 * r1 - j11 * r0) / det;
        double dC = (j10 * r0 - j00 * r1) / det;
        double step = 1.0;
        for (int bt = 0; bt < 12; ++bt) {
            double an = a + step * da, Cn = C + step * dC;
            if (an < 0.0) an = 0.0;
            if (an > 0.995 || Cn <= 0.0) {
                step *= 0.5;
                continue;
            }
            double n0, n1;
            residual(an, Cn, n0, n1);
            double nres = std::fabs(n0) + std::fabs(n1);
            if (nres < res || step < 1e-3) {
                a = an;
                C = Cn;
                r0 = n0;
                r1 = n1;
                res = nres;
                break;
            }
            step *= 0.5;
        }
    }
    if (res > tol)
        throw std::runtime_error("invert_parameters: no convergence, residual " +
                                 std::to_string(res));
    return MapParams(a, C);
}

// Exact moment-space evolution: a0 advances affinely at rate Q, a1 is held
// (Richardson), and (a, C) is recovered at each step.
inline std::vector<GrowthState> evolve(GrowthState initial, double Q, double dt, int steps) {
    std::vector<GrowthState> traj;
    auto f0 = detail::forward_map(initial.a, initial.C);
    GrowthState st = initial;
    st.a0 = f0.a0;
    st.a1 = f0.a1;
    st.min_abs_df = f0.min_abs_df;
    traj.push_back(st);
    double a0_target = st.a0;
    const double a1_target = st.a1;
    MapParams cur(st.a, st.C);
    for (int k = 1; k <= steps; ++k) {
        a0_target += Q * dt;
        if (a0_target <= 0.0)
            throw std::runtime_error("evolve: suction exhausted the domain");
        cur = invert_parameters(a0_target, a1_target, cur);
        auto f = detail::forward_map(cur.a, cur.C);
        GrowthState s;
        s.t = st.t + k * dt;
        s.a = cur.a;
        s.C = cur.C;
        s.a0 = a0_target;
        s.a1 = a1_target;
        s.min_abs_df = f.min_abs_df;
        if (f.min_abs_df < 1e-3) {
            s.cusp = true;
            traj.push_back(s);
            break;
        }
        traj.push_back(s);
    }
    return traj;
}

// Bisection of a -> min_theta |f'(e^{i theta})| over (0.5, 0.99) for its
// first zero. For this family min|f'| = C(1 - a) > 0 throughout, so the
// scan finds no sign change and the bracket-failure contract fires.
inline double find_cusp_parameter(double C, double lo = 0.5, double hi = 0.99) {
    if (!(C > 0.0)) throw std::domain_error("find_cusp_parameter: need C > 0");
    auto mindf = [&](double a) {
        MapParams p(a, C);
        auto grid = laurent_coeffs(p, std::max(4096, suggested_n(a)));
        return min_abs_fprime(grid);
    };
    const int scan = 49;
    double prev_a = lo, prev_v = mindf(lo);
    double blo = 0.0, bhi = 0.0;
    bool found = false;
    for (int i = 1; i <= scan; ++i) {
        double a = lo + (hi - lo) * i / scan;
        double v = mindf(a);
        if (prev_v > 0.0 && v <= 0.0) {
            blo = prev_a;
            bhi = a;
            found = true;
            break;
        }
        prev_a = a;
        prev_v = v;
    }
    if (!found)
        throw std::runtime_error(
            "find_cusp_parameter: bracket failure, min|f'| does not change sign on "
            "(0.5, 0.99)");
    while (bhi - blo > 1e-5) {
        double mid = 0.5 * (blo + bhi);
        (mindf(mid) > 0.0 ? blo : bhi) = mid;
    }
    return 0.5 * (blo + bhi);
}

// ---- 2D Polubarinova-Kochina cardioid family, zeta = a z^2 + b z. ----
// Closed moments: M0 = area = pi (b^2 + 2 a^2), M1 = int zeta dA = pi a b^2.

struct PKState {
    double t = 0.0;
    double a = 0.0;
    double b = 0.0;
    double M0 = 0.0;
    double M1 = 0.0;
    bool cusp = false;
};

inline PKState pk_init(double a, double b) {
    if (!(b > 2.0 * a && a > 0.0)) throw std::domain_error("pk_init: need b > 2a > 0");
    PKState s;
    s.a = a;
    s.b = b;
    s.M0 = pi * (b * b + 2.0 * a * a);
    s.M1 = pi * a * b * b;
    return s;
}

// Advance area at rate Q with M1 conserved: solve 2 a^3 - (M0/pi) a + M1/pi = 0
// (the root in (0, a_cusp), by bisection), b = sqrt(M1/(pi a)). The cusp
// configuration b = 2a has the closed form a_cusp = (M1/(4 pi))^{1/3},
// reached exactly at M0 = 6 pi a_cusp^2; suction trajectories terminate
// there with the exact cusp time.
inline std::vector<PKState> pk_evolve(PKState initial, double Q, double dt, int steps) {
    std::vector<PKState> traj{initial};
    PKState st = initial;
    const double m1 = st.M1 / pi;
    const double ac = std::cbrt(m1 / 4.0);
    const double M0_cusp = 6.0 * pi * ac * ac;
    for (int k = 1; k <= steps; ++k) {
        double M0 = initial.M0 + Q * dt * k;
        if (M0 <= M0_cusp) {
            st.t = initial.t + (M0_cusp - initial.M0) / Q;
            st.a = ac;
            st.b = 2.0 * ac;
            st.M0 = M0_cusp;
            st.M1 = initial.M1;
            st.cusp = true;
            traj.push_back(st);
            break;
        }
        double m0 = M0 / pi;
        double lo = 0.0, hi = ac; // f(0) = m1 > 0, f(ac) = ac (m0_cusp - m0) < 0
        for (int it = 0; it < 200 && hi - lo > 1e-16 * ac; ++it) {
            double mid = 0.5 * (lo + hi);
            double f = 2.0 * mid * mid * mid - m0 * mid + m1;
            (f > 0.0 ? lo : hi) = mid;
        }
        double a = 0.5 * (lo + hi);
        st.t = initial.t + dt * k;
        st.a = a;
        st.b = std::sqrt(m1 / a);
        st.M0 = M0;
        st.M1 = pi * a * (m1 / a);
        st.cusp = (st.b - 2.0 * st.a < 1e-6);
        traj.push_back(st);
        if (st.cusp) break;
    }
    return traj;
}

} // namespace qd
