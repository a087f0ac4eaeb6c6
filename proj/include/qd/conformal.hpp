#pragma once
// The conformal map family f : D -> C built from
//   h(z) = C (z^2 - 1)/z * sqrt((z+a)/z * (1+az)),
// its Laurent coefficients on |z| = 1, boundary traces, the decomposition
// constants A0/A1, and univalence diagnostics.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qd/fft.hpp"
#include "qd/quadrature.hpp"

namespace qd {

struct MapParams {
    double a;
    double C;
    MapParams(double a_, double C_) : a(a_), C(C_) {
        if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("MapParams: need 0 <= a < 1");
        if (!(C > 0.0)) throw std::domain_error("MapParams: need C > 0");
    }
};

// Branch of sqrt((z+a)(1+az)/z) as a product of principal square roots.
// Single-valued off [-a, 0] and (-inf, -1/a]; positive at z = 1; equal to
// |z + a| on the unit circle.
inline cplx sqrt_radical(cplx z, double a) {
    return std::sqrt(z + a) * std::sqrt(1.0 + a * z) / std::sqrt(z);
}

inline cplx eval_h(cplx z, const MapParams& p) {
    auto near = [&](cplx w) { return std::abs(z - w) < 1e-14; };
    if (near(cplx(0.0)) || near(cplx(-p.a)) ||
        (p.a > 0.0 && near(cplx(-1.0 / p.a))))
        throw std::domain_error("eval_h: z at a branch point");
    return p.C * (z - 1.0 / z) * sqrt_radical(z, p.a);
}

// g = h^2, rational.
inline cplx eval_g(cplx z, const MapParams& p) {
    if (std::abs(z) < 1e-300) throw std::domain_error("eval_g: pole at z = 0");
    cplx q = z * z - 1.0;
    return p.C * p.C * q * q * (z + p.a) * (1.0 + p.a * z) / (z * z * z);
}

struct CircleGrid {
    MapParams params;
    int n = 0;                  // sample count (power of two)
    std::vector<cplx> hvals;    // h(e^{i theta_j})
    std::vector<double> coeffs; // c_k for k = 1..n/2-1 (real; c_{-k} = -c_k, c_0 = 0)
    double tail = 0.0;          // |c_{n/2-1}|
};

// Smallest power-of-two sample count resolving the geometric tail c_k ~ a^k
// below the 1e-13 resolution threshold.
inline int suggested_n(double a) {
    if (a <= 0.0) return 256;
    double K = 14.0 / (-std::log10(a));
    int n = 256;
    while (n / 2 - 1 < K && n < 65536) n <<= 1;
    return n;
}

inline CircleGrid laurent_coeffs(const MapParams& p, int n) {
    if (n < 256 || !is_pow2(std::size_t(n)))
        throw std::invalid_argument("laurent_coeffs: n must be a power of two >= 256");
    CircleGrid g{p};
    g.n = n;
    g.hvals.resize(n);
    std::vector<cplx> buf(n);
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * pi * j / n;
        cplx z(std::cos(th), std::sin(th));
        // h on the circle: (z - 1/z) sqrt(...) = 2i sin(theta) |z + a|, but we
        // evaluate the generic branch formula (j = 0 gives z = 1, h = 0).
        cplx s = (j == 0) ? cplx(1.0 + p.a) : sqrt_radical(z, p.a);
        buf[j] = g.hvals[j] = p.C * (z - 1.0 / z) * s;
    }
    fft(buf);
    const int K = n / 2 - 1;
    g.coeffs.resize(K + 1, 0.0);
    for (int k = 1; k <= K; ++k) {
        cplx ck = buf[k] / double(n);
        cplx cmk = buf[n - k] / double(n);
        if (std::abs(ck.imag()) > 1e-12 || std::abs(ck + cmk) > 1e-12)
            throw std::runtime_error("laurent_coeffs: symmetry invariant violated");
        g.coeffs[k] = ck.real();
    }
    if (std::abs(buf[0]) / double(n) > 1e-14)
        throw std::runtime_error("laurent_coeffs: c_0 not zero");
    g.tail = std::fabs(g.coeffs[K]);
    if (g.tail > 1e-13)
        throw std::runtime_error("laurent_coeffs: grid too coarse (tail above 1e-13)");
    return g;
}

// f by Laurent series, valid on |w| <= 1.
inline cplx eval_f(cplx w, const MapParams&, const CircleGrid& grid) {
    cplx acc = 0.0, wp = w;
    for (std::size_t k = 1; k < grid.coeffs.size(); ++k) {
        acc += grid.coeffs[k] * wp;
        wp *= w;
    }
    return acc;
}

inline cplx eval_fprime(cplx w, const MapParams&, const CircleGrid& grid) {
    cplx acc = 0.0, wp = 1.0;
    for (std::size_t k = 1; k < grid.coeffs.size(); ++k) {
        acc += double(k) * grid.coeffs[k] * wp;
        wp *= w;
    }
    return acc;
}

// f by the Cauchy contour integral over |z| = r, with r deformed outward
// when w is on or near the unit circle.
inline cplx eval_f_contour(cplx w, const MapParams& p, int n = 4096) {
    double r = 1.0;
    if (std::abs(w) > 0.999) {
        double eps = (p.a > 0.0) ? std::min(0.25 * (1.0 / p.a - 1.0), 0.25) : 0.25;
        r = 1.0 + eps;
    }
    if (std::fabs(std::abs(w) - r) < 1e-8)
        throw std::runtime_error("eval_f_contour: w on the integration path");
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * pi * j / n;
        cplx z = r * cplx(std::cos(th), std::sin(th));
        acc += (z * z - 1.0) * sqrt_radical(z, p.a) / (z * (z - w)) * z;
    }
    return p.C * acc / double(n);
}

struct BoundaryCurve {
    MapParams params;
    int m = 0;
    std::vector<cplx> zeta; // f(e^{i theta_j})
    std::vector<cplx> dfd;  // f'(e^{i theta_j})
    double min_abs_df = 0.0;
    bool simple = false;
};

// Generic trace from explicit samples (used by the classical shapes too).
inline double polyline_min(const std::vector<cplx>& v) {
    double m = 1e300;
    for (auto& z : v) m = std::min(m, std::abs(z));
    return m;
}

inline bool polyline_simple(const std::vector<cplx>& z) {
    const int m = int(z.size());
    auto seg = [&](int i, cplx& p, cplx& q) { p = z[i]; q = z[(i + 1) % m]; };
    std::vector<double> lox(m), hix(m), loy(m), hiy(m);
    for (int i = 0; i < m; ++i) {
        cplx p, q;
        seg(i, p, q);
        lox[i] = std::min(p.real(), q.real());
        hix[i] = std::max(p.real(), q.real());
        loy[i] = std::min(p.imag(), q.imag());
        hiy[i] = std::max(p.imag(), q.imag());
    }
    auto cross = [](cplx u, cplx v) { return u.real() * v.imag() - u.imag() * v.real(); };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue; // adjacent around the wrap
            if (lox[i] > hix[j] || lox[j] > hix[i] || loy[i] > hiy[j] || loy[j] > hiy[i])
                continue;
            cplx p1, p2, q1, q2;
            seg(i, p1, p2);
            seg(j, q1, q2);
            double d1 = cross(p2 - p1, q1 - p1), d2 = cross(p2 - p1, q2 - p1);
            double d3 = cross(q2 - q1, p1 - q1), d4 = cross(q2 - q1, p2 - q1);
            if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return false;
        }
    }
    return true;
}

// Sample the boundary f(e^{i theta}) and f' there by zero-padded inverse FFT
// of the Laurent coefficients.
inline BoundaryCurve boundary_curve(const MapParams& p, const CircleGrid& grid, int m,
                                    bool check_simple = true) {
    if (m < 1024 || !is_pow2(std::size_t(m)))
        throw std::invalid_argument("boundary_curve: m must be a power of two >= 1024");
    BoundaryCurve c{p};
    c.m = m;
    const int K = int(grid.coeffs.size()) - 1;
    std::vector<cplx> bf(m, 0.0), bd(m, 0.0);
    for (int k = 1; k <= std::min(K, m / 2 - 1); ++k) {
        bf[k] = grid.coeffs[k];
        bd[k] = double(k) * grid.coeffs[k];
    }
    fft(bf, true);
    fft(bd, true);
    c.zeta.resize(m);
    c.dfd.resize(m);
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * pi * j / m;
        cplx zinv(std::cos(th), -std::sin(th));
        c.zeta[j] = bf[j] * double(m);
        c.dfd[j] = bd[j] * double(m) * zinv; // sum k c_k z^{k-1}
    }
    c.min_abs_df = polyline_min(c.dfd);
    c.simple = check_simple ? polyline_simple(c.zeta) : true;
    return c;
}

// min over the boundary grid of |f'|, without materializing a curve.
inline double min_abs_fprime(const CircleGrid& grid) {
    const int n = grid.n;
    std::vector<cplx> bd(n, 0.0);
    for (std::size_t k = 1; k < grid.coeffs.size(); ++k)
        bd[k] = double(k) * grid.coeffs[k];
    fft(bd, true);
    double m = 1e300;
    for (auto& v : bd) m = std::min(m, std::abs(v) * double(n));
    return m;
}

// Decomposition f(w) = A0 + A1 w + C (w^2 - 1) F(w): the w-independent
// constants from the partial-fraction split of the Cauchy kernel.
inline std::pair<cplx, cplx> decomposition_constants(const MapParams& p, int n = 8192) {
    cplx A0 = p.C * circle_mean([&](cplx z) { return sqrt_radical(z, p.a) * z; }, n);
    cplx A1 = p.C * circle_mean([&](cplx z) { return sqrt_radical(z, p.a); }, n);
    if (std::abs(A0.imag()) > 1e-12 || std::abs(A1.imag()) > 1e-12)
        throw std::runtime_error("decomposition_constants: non-real result");
    return {A0, A1};
}

struct UnivalenceReport {
    bool simple;
    double min_abs_df;
    bool certified; // simple and |f'| bounded away from 0
};

inline UnivalenceReport check_univalent(const BoundaryCurve& curve) {
    UnivalenceReport r{curve.simple, curve.min_abs_df,
                       curve.simple && curve.min_abs_df > 1e-6};
    return r;
}

} // namespace qd
