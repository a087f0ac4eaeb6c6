#pragma once
// Quadrature helpers: periodic trapezoid means and adaptive Gauss-Kronrod.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace qd {

inline constexpr double pi = 3.14159265358979323846;

// Mean of f(exp(i*theta)) over the unit circle (spectrally accurate for
// functions analytic in an annulus around |z| = 1).
template <class F>
auto circle_mean(F&& f, int n) {
    using R = decltype(f(std::complex<double>{}));
    R acc{};
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * pi * j / n;
        acc += f(std::complex<double>(std::cos(th), std::sin(th)));
    }
    return acc / double(n);
}

// Trapezoid over [lo, hi] with n+1 nodes.
template <class F>
auto trapezoid(F&& f, double lo, double hi, int n) {
    using R = decltype(f(0.0));
    double h = (hi - lo) / n;
    R acc = 0.5 * (f(lo) + f(hi));
    for (int j = 1; j < n; ++j) acc += f(lo + j * h);
    return acc * h;
}

namespace detail {
// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double gk_x[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double gk_wk[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double gk_wg[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

template <class F, class R>
void gk15(F& f, double a, double b, R& kron, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    R fc = f(c);
    R g = gk_wg[0] * fc, k = gk_wk[0] * fc;
    for (int j = 1; j < 8; ++j) {
        R s = f(c - h * gk_x[j]) + f(c + h * gk_x[j]);
        k += gk_wk[j] * s;
        if (j % 2 == 0) g += gk_wg[j / 2] * s;
    }
    kron = k * h;
    err = std::abs(k - g) * std::abs(h);
}

template <class F, class R>
R adapt(F& f, double a, double b, double tol, int depth) {
    R v;
    double err;
    gk15<F, R>(f, a, b, v, err);
    if (err <= tol || depth >= 48) return v;
    double c = 0.5 * (a + b);
    return adapt<F, R>(f, a, c, 0.5 * tol, depth + 1) +
           adapt<F, R>(f, c, b, 0.5 * tol, depth + 1);
}
} // namespace detail

// Adaptive Gauss-Kronrod integral of f over [a, b] to absolute tolerance tol.
template <class F>
auto integrate(F&& f, double a, double b, double tol = 1e-12) {
    using R = decltype(f(0.0));
    return detail::adapt<F, R>(f, a, b, tol, 0);
}

} // namespace qd
