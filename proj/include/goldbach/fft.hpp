#pragma once

// Iterative radix-2 complex FFT and the two convolution routines built on
// top of it. convolve_direct is the O(n*m) compensated-summation oracle;
// convolve_fft zero-pads to a power of two >= the full linear support, so
// indices below out_len are exact linear-convolution values (no wraparound).

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "goldbach/summation.hpp"

namespace goldbach {

inline void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_radix2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double pi = 3.141592653589793238462643383279502884;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * pi / static_cast<double>(len) * (inverse ? -1.0 : 1.0);
        std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        for (auto& z : a) z /= static_cast<double>(n);
    }
}

// c[k] = sum_i a[i] b[k-i] for k < out_len, via FFT.
inline std::vector<double> convolve_fft(const std::vector<double>& a,
                                        const std::vector<double>& b,
                                        std::size_t out_len,
                                        std::size_t max_fft_size = (std::size_t{1} << 26)) {
    if (a.empty() || b.empty()) return std::vector<double>(out_len, 0.0);
    std::size_t full = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < full) n <<= 1;
    if (n > max_fft_size)
        throw std::length_error(
            "convolve_fft: transform size " + std::to_string(n) +
            " exceeds limit; use the direct method");
    std::vector<std::complex<double>> fa(n), fb(n);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    fft_radix2(fa, false);
    fft_radix2(fb, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    fft_radix2(fa, true);
    std::vector<double> out(out_len, 0.0);
    std::size_t lim = out_len < full ? out_len : full;
    for (std::size_t i = 0; i < lim; ++i) out[i] = fa[i].real();
    return out;
}

inline std::vector<double> convolve_direct(const std::vector<double>& a,
                                           const std::vector<double>& b,
                                           std::size_t out_len) {
    std::vector<double> out(out_len, 0.0);
    if (a.empty() || b.empty()) return out;
    for (std::size_t k = 0; k < out_len; ++k) {
        KahanSum acc;
        std::size_t i_lo = k + 1 >= b.size() ? k + 1 - b.size() : 0;
        std::size_t i_hi = k < a.size() - 1 ? k : a.size() - 1;
        for (std::size_t i = i_lo; i <= i_hi; ++i) acc.add(a[i] * b[k - i]);
        out[k] = acc.value();
    }
    return out;
}

} // namespace goldbach
