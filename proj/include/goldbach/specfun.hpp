#pragma once

// Complex log-Gamma (principal branch) and log-space Gamma ratios.
//
// Everything downstream pairs enormous and tiny Gamma factors
// (|Gamma(1/2 + i*gamma)| ~ e^{-pi*gamma/2} underflows near gamma ~ 700),
// so raw Gamma is never exposed; ratios are assembled in log space.
//
// Method: upward recurrence log G(s) = log G(s+n) - sum log(s+k) until
// Re s >= 10, then the Bernoulli-Stirling series. Each Log(s+k) is
// analytic off (-inf, 0], and the composite agrees with log Gamma on the
// positive reals, so the result is the principal branch on the cut plane
// without any reflection-formula branch bookkeeping.

#include <cmath>
#include <complex>

#include "goldbach/errors.hpp"

namespace goldbach {

namespace detail {

// B_{2n} / (2n (2n-1)) for n = 1..10
inline constexpr double kStirlingCoeff[10] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

inline constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

} // namespace detail

inline std::complex<double> log_gamma(std::complex<double> s) {
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
        throw PoleError("log_gamma: pole at nonpositive integer " +
                            std::to_string(static_cast<long>(s.real())),
                        static_cast<long>(s.real()));
    std::complex<double> shift(0.0, 0.0);
    while (s.real() < 10.0) {
        shift -= std::log(s);
        s += 1.0;
    }
    std::complex<double> w = 1.0 / s;
    std::complex<double> w2 = w * w;
    std::complex<double> series(0.0, 0.0);
    std::complex<double> wp = w;
    for (double c : detail::kStirlingCoeff) {
        series += c * wp;
        wp *= w2;
    }
    std::complex<double> core =
        (s - 0.5) * std::log(s) - s + detail::kHalfLogTwoPi + series;
    return core + shift;
}

// Gamma(a) / Gamma(b) via exp(log_gamma(a) - log_gamma(b)).
inline std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> b) {
    return std::exp(log_gamma(a) - log_gamma(b));
}

// |Gamma(s)| without overflow/underflow surprises in the exponent handling.
inline double abs_gamma(std::complex<double> s) {
    return std::exp(log_gamma(s).real());
}

} // namespace goldbach
