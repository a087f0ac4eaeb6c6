#pragma once
// Harmonic moments by contour reduction and quadrature-coefficient
// extraction along two independent routes (boundary moments vs the Laurent
// expansion of the singular part of the Schwarz potential).

#include <cmath>
#include <functional>
#include <vector>

#include "qd/conformal.hpp"
#include "qd/quadrature.hpp"

namespace qd {

// Trace any boundary map z -> f(z), |z| = 1, into a BoundaryCurve.
template <class F, class DF>
BoundaryCurve trace_map(F&& f, DF&& df, int m) {
    BoundaryCurve c{MapParams(0.0, 1.0)};
    c.m = m;
    c.zeta.resize(m);
    c.dfd.resize(m);
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * pi * j / m;
        cplx z(std::cos(th), std::sin(th));
        c.zeta[j] = f(z);
        c.dfd[j] = df(z);
    }
    c.min_abs_df = polyline_min(c.dfd);
    c.simple = polyline_simple(c.zeta);
    return c;
}

// Area moment int_D zeta^k conj(zeta)^m dA by Green's theorem:
// (1/(2i(m+1))) contour integral of zeta^k conj(zeta)^{m+1} dzeta.
inline cplx complex_moment(const BoundaryCurve& curve, int k, int m) {
    const int M = curve.m;
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * pi * j / M;
        cplx z(std::cos(th), std::sin(th));
        cplx zeta = curve.zeta[j];
        cplx zb = std::conj(zeta);
        cplx zbp = std::pow(zb, m + 1);
        cplx zp = (k == 0) ? cplx(1.0) : std::pow(zeta, k);
        acc += zp * zbp * curve.dfd[j] * cplx(0.0, 1.0) * z;
    }
    acc *= 2.0 * pi / M;
    return acc / (cplx(0.0, 2.0) * double(m + 1));
}

// Moments of the axially symmetric harmonics U_k = Im(zeta^k)/y over the
// R^4 body swept by the profile domain:
// M_k = 4 pi int_{D+} Im(zeta^k) y dx dy = pi (Re m(k,1) - Re m(k+1,0)).
inline std::vector<double> harmonic_moments_4d(const BoundaryCurve& curve, int K) {
    std::vector<double> M(K + 1, 0.0);
    for (int k = 1; k <= K; ++k) {
        cplx mk1 = complex_moment(curve, k, 1);
        cplx mk10 = complex_moment(curve, k + 1, 0);
        M[k] = pi * (mk1.real() - mk10.real());
    }
    return M;
}

struct QuadratureData {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    bool has_a2 = false;
    std::vector<double> residuals; // index k = 3..K, |M_k| / (a0 L^{k-1})
    int Kmax = 0;
    bool is_quadrature_domain = false;
};

inline QuadratureData extract_quadrature_direct(const BoundaryCurve& curve, int K = 8) {
    auto M = harmonic_moments_4d(curve, K);
    QuadratureData q;
    q.Kmax = K;
    q.a0 = M[1];
    q.a1 = M[2] / 2.0;
    double L = 0.0;
    for (auto& z : curve.zeta) L = std::max(L, std::abs(z));
    q.residuals.assign(K + 1, 0.0);
    q.is_quadrature_domain = true;
    for (int k = 3; k <= K; ++k) {
        q.residuals[k] = std::fabs(M[k]) / (q.a0 * std::pow(L, k - 1));
        if (q.residuals[k] > 1e-4) q.is_quadrature_domain = false;
    }
    return q;
}

// Laurent route: the singular part of the Schwarz potential of the swept
// body is A ||x||^-2 + B d/dx1 ||x||^-2; with V(zeta) = (i/4) g(z(zeta)),
// the coefficients c_{-2}, c_{-3} of V at zeta = 0 give A = 2i c_{-2},
// B = -i c_{-3}, and the quadrature weights a0 = -pi^2 A, a1 = +pi^2 B.
// Constants locked against the ball and rotated-limacon closed forms.
template <class F, class DF, class G>
QuadratureData laurent_bridge(F&& f, DF&& df, G&& g, double rho = 0.3, int n = 2048) {
    cplx cm2 = 0.0, cm3 = 0.0;
    double wind = 0.0;
    cplx prev = f(cplx(rho, 0.0));
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * pi * j / n;
        cplx z = rho * cplx(std::cos(th), std::sin(th));
        cplx fz = f(z), V = cplx(0.0, 0.25) * g(z), w = V * df(z) * z;
        cm2 += w * fz;
        cm3 += w * fz * fz;
        wind += std::arg(fz / prev);
        prev = fz;
    }
    wind += std::arg(f(cplx(rho, 0.0)) / prev);
    if (std::fabs(wind - 2.0 * pi) > 1e-6)
        throw std::runtime_error("laurent_bridge: image loop fails to wind once around 0");
    cm2 /= double(n);
    cm3 /= double(n);
    cplx A = cplx(0.0, 2.0) * cm2;
    cplx B = cplx(0.0, -1.0) * cm3;
    QuadratureData q;
    q.a0 = -pi * pi * A.real();
    q.a1 = pi * pi * B.real();
    q.is_quadrature_domain = true;
    return q;
}

inline QuadratureData extract_quadrature_laurent(const MapParams& p, const CircleGrid& grid) {
    return laurent_bridge([&](cplx z) { return eval_f(z, p, grid); },
                          [&](cplx z) { return eval_fprime(z, p, grid); },
                          [&](cplx z) { return eval_g(z, p); });
}

} // namespace qd
