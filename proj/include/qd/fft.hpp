#pragma once
// Iterative radix-2 FFT for power-of-two sizes.

#include <complex>
#include <stdexcept>
#include <vector>

namespace qd {

using cplx = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

// In-place forward transform: X[k] = sum_j x[j] exp(-2*pi*i*j*k/n).
inline void fft(std::vector<cplx>& x, bool inverse = false) {
    const std::size_t n = x.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const double pi = 3.14159265358979323846;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * pi / double(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = x[i + k], v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& v : x) v /= double(n);
}

} // namespace qd
