#pragma once
// The segment-integral function F(w), its Sokhotski-Plemelj jump across
// (-inf, -1/a], and analytic continuation over the infinite branch ladder.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qd/conformal.hpp"
#include "qd/quadrature.hpp"

namespace qd {

// G(z) = (1 + a/z)(1/z + a)(1/z) = (z + a)(1 + a z)/z^3.
inline cplx eval_G(cplx z, double a) {
    if (std::abs(z) < 1e-300) throw std::domain_error("eval_G: pole at z = 0");
    return (z + a) * (1.0 + a * z) / (z * z * z);
}

// Principal branch of sqrt(G), single-valued off [-a, 0] and (-inf, -1/a].
inline cplx sqrtG_principal(cplx z, double a) { return sqrt_radical(z, a) / z; }

namespace detail {
// q(xi) = sqrt((1 - a xi)(a - xi) xi) on [0, a], continued off the segment
// with principal square roots of each factor.
inline cplx qdens(cplx xi, double a) {
    return std::sqrt(1.0 - a * xi) * std::sqrt(a - xi) * std::sqrt(xi);
}

inline double dist_to_segment(cplx xi0, double a) {
    double x = xi0.real(), y = xi0.imag();
    double dx = 0.0;
    if (x < 0.0) dx = -x;
    else if (x > a) dx = x - a;
    return std::hypot(dx, y);
}
} // namespace detail

// w-independent constant of the xi-form:
// C0 = (1/pi) int_0^a q(xi)/xi dxi = (2a/pi) int cos^2 sqrt(1-a^2 sin^2).
inline double xi_form_C0(double a, int n = 2048) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        double ph = (j + 0.5) * (0.5 * pi) / n;
        double sp = std::sin(ph), cp = std::cos(ph);
        acc += cp * cp * std::sqrt(1.0 - a * a * sp * sp);
    }
    acc *= 0.5 * pi / n;
    return (2.0 * a / pi) * acc;
}

// F(w) = (1/(pi i)) int_{-inf}^{-1/a} sqrt(G(z))/(z - w) dz, principal sheet.
// Substituting z = -1/s^2 gives the compact segment form
//   F(w) = (2/pi) int_0^{sqrt a} sqrt((1 - a s^2)(a - s^2)) / (1 + w s^2) ds,
// evaluated with s = sqrt(a) sin(phi) (smooth even periodic integrand).
// Near the cut (xi0 = -1/w close to [0, a]) the partial-fraction form
//   F(w) = C0 - (1/pi) int_0^a q(xi)/(xi - xi0) dxi
// is used with singularity subtraction.
inline cplx eval_F(cplx w, double a, int n = 2048) {
    if (!(a > 0.0 && a < 1.0)) throw std::domain_error("eval_F: need 0 < a < 1");
    if (w.imag() == 0.0 && w.real() <= -1.0 / a + 1e-10)
        throw std::domain_error("eval_F: w on the cut (-inf, -1/a]");
    cplx xi0 = (std::abs(w) < 1e-300) ? cplx(1e300, 0.0) : -1.0 / w;
    double dist = detail::dist_to_segment(xi0, a);
    if (dist > 0.25 * a) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            double ph = (j + 0.5) * (0.5 * pi) / n;
            double sp = std::sin(ph), cp = std::cos(ph);
            double s2 = a * sp * sp;
            acc += cp * cp * std::sqrt(1.0 - a * a * sp * sp) / (1.0 + w * s2);
        }
        acc *= 0.5 * pi / n;
        return (2.0 * a / pi) * acc;
    }
    if (xi0.real() > 0.0 && xi0.real() < a) {
        // subtraction of the near pole; principal logs are valid since the
        // shifted segment stays in one half-plane
        cplx q0 = detail::qdens(xi0, a);
        auto integrand = [&](double xi) {
            return (detail::qdens(cplx(xi, 0.0), a) - q0) / (cplx(xi, 0.0) - xi0);
        };
        cplx sub = integrate(integrand, 0.0, a, 1e-12);
        cplx lg = std::log(a - xi0) - std::log(-xi0);
        return xi_form_C0(a) - (sub + q0 * lg) / pi;
    }
    // pole off the segment but nearby: plain adaptive quadrature
    auto integrand = [&](double xi) {
        return detail::qdens(cplx(xi, 0.0), a) / (cplx(xi, 0.0) - xi0);
    };
    return xi_form_C0(a) - integrate(integrand, 0.0, a, 1e-12) / pi;
}

// Independent evaluation from the pre-deformation contour over |z| = 1.
inline cplx eval_F_circle(cplx w, double a, int n = 8192) {
    if (std::abs(std::abs(w) - 1.0) < 1e-8)
        throw std::domain_error("eval_F_circle: w on the contour");
    return circle_mean([&](cplx z) { return sqrt_radical(z, a) / (z - w); }, n);
}

// The xi-segment representation F = C0 - (w/pi) int_0^a q(xi)/(1 + w xi) dxi,
// evaluated by adaptive quadrature (distinct route from eval_F's smooth form).
inline cplx xi_form(cplx w, double a, double tol = 1e-11) {
    if (std::abs(w) < 1e-300) return cplx(xi_form_C0(a), 0.0);
    cplx xi0 = -1.0 / w;
    if (detail::dist_to_segment(xi0, a) < 1e-8)
        throw std::domain_error("xi_form: -1/w on [0, a]");
    if (detail::dist_to_segment(xi0, a) > 0.25 * a ||
        !(xi0.real() > 0.0 && xi0.real() < a)) {
        auto integrand = [&](double xi) {
            return detail::qdens(cplx(xi, 0.0), a) / (1.0 + w * xi);
        };
        return xi_form_C0(a) - w / pi * integrate(integrand, 0.0, a, tol);
    }
    cplx q0 = detail::qdens(xi0, a);
    auto integrand = [&](double xi) {
        return (detail::qdens(cplx(xi, 0.0), a) - q0) / (cplx(xi, 0.0) - xi0);
    };
    cplx sub = integrate(integrand, 0.0, a, tol);
    cplx lg = std::log(a - xi0) - std::log(-xi0);
    return xi_form_C0(a) - (sub + q0 * lg) / pi;
}

// Richardson/Neville extrapolated jump F(x + i 0) - F(x - i 0), x < -1/a.
// Contract: equals -2 sqrt(G(x)) with the principal root of the negative
// real value G(x) (i.e. +i sqrt|G|).
inline cplx jump(double x, double a) {
    if (!(x < -1.0 / a)) throw std::domain_error("jump: need x < -1/a strictly");
    const double eps[3] = {1e-2, 1e-3, 1e-4};
    cplx d[3];
    for (int i = 0; i < 3; ++i)
        d[i] = eval_F(cplx(x, eps[i]), a) - eval_F(cplx(x, -eps[i]), a);
    if (std::abs(d[2] - d[1]) > 2.0 * std::abs(d[1] - d[0]) + 1e-12)
        throw std::runtime_error("jump: extrapolation diverging");
    // Neville polynomial extrapolation to eps = 0
    cplx t[3] = {d[0], d[1], d[2]};
    for (int lvl = 1; lvl < 3; ++lvl)
        for (int i = 0; i < 3 - lvl; ++i)
            t[i] = t[i + 1] + (t[i + 1] - t[i]) * eps[i + lvl] / (eps[i] - eps[i + lvl]);
    return t[0];
}

// Sheet bookkeeping: F_sheet(w) = F0(w) + 2 m s sqrt(G(w)) with principal
// sqrt(G); crossing (-inf, -1/a] does m += s then s = -s; crossing [-a, 0]
// does s = -s. Both rules are involutions, so continuation does not depend
// on the traversal direction of a crossing.
struct SheetState {
    int m = 0;
    int s = +1;
};

inline cplx sheet_value(cplx w, const SheetState& st, double a) {
    return eval_F(w, a) + 2.0 * double(st.m) * double(st.s) * sqrtG_principal(w, a);
}

inline std::pair<SheetState, cplx> continue_along(const std::vector<cplx>& path,
                                                  SheetState state, double a) {
    if (path.size() < 2) throw std::invalid_argument("continue_along: empty path");
    const cplx bp[3] = {cplx(0.0), cplx(-a), cplx(-1.0 / a)};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        cplx p = path[i], q = path[i + 1];
        cplx d = q - p;
        double L2 = std::norm(d);
        for (auto b : bp) {
            double t = L2 > 0.0 ? std::clamp(((b.real() - p.real()) * d.real() +
                                              (b.imag() - p.imag()) * d.imag()) /
                                                 L2,
                                             0.0, 1.0)
                                : 0.0;
            if (std::abs(p + t * d - b) < 1e-6)
                throw std::runtime_error("continue_along: path too close to a branch point");
        }
        if ((p.imag() > 0) == (q.imag() > 0)) continue;
        if (p.imag() == 0.0 || q.imag() == 0.0)
            throw std::runtime_error("continue_along: path point on the real axis");
        double t = p.imag() / (p.imag() - q.imag());
        double xc = p.real() + t * (q.real() - p.real());
        if (xc <= -1.0 / a) {
            state.m += state.s;
            state.s = -state.s;
        } else if (xc >= -a && xc <= 0.0) {
            state.s = -state.s;
        }
    }
    return {state, sheet_value(path.back(), state, a)};
}

// Canonical loops based at w0 (kept off the real axis except at the
// intended cut crossings by starting the circles at a half-step angle).
inline std::vector<cplx> loop_gamma1(cplx w0, double a, int n = 64) {
    // encircles -1/a once: one crossing of (-inf, -1/a]
    cplx c(-1.0 / a, 0.0);
    double r = 0.3 * std::min(1.0 / a - 1.0, 1.0);
    std::vector<cplx> path;
    path.push_back(w0);
    for (int j = 0; j <= n; ++j) {
        double th = 2.0 * pi * (j + 0.5) / n;
        path.push_back(c + r * cplx(std::cos(th), std::sin(th)));
    }
    path.push_back(w0);
    return path;
}

inline std::vector<cplx> loop_gamma2(cplx w0, double a, int n = 64) {
    // encircles 0 with radius < a: one crossing of [-a, 0]
    double r = 0.5 * a;
    std::vector<cplx> path;
    path.push_back(w0);
    for (int j = 0; j <= n; ++j) {
        double th = 2.0 * pi * (j + 0.5) / n;
        path.push_back(r * cplx(std::cos(th), std::sin(th)));
    }
    path.push_back(w0);
    return path;
}

inline std::vector<cplx> concat_loops(const std::vector<std::vector<cplx>>& loops) {
    std::vector<cplx> path;
    for (auto& l : loops) {
        if (path.empty())
            path = l;
        else
            path.insert(path.end(), l.begin() + 1, l.end());
    }
    return path;
}

} // namespace qd
