#pragma once

// Arithmetic substrate: the von Mangoldt sieve, Chebyshev psi, the
// Goldbach convolutions
//
//   G_r(n) = sum_{k_1+...+k_r = n} Lambda(k_1) ... Lambda(k_r),
//
// the iterated summatory operators A_r^k, and direct partial sums of the
// Dirichlet series Phi_r(s) = sum G_r(n) n^{-s} inside its half-plane of
// absolute convergence Re s > r.
//
// Convolutions use linear (zero-padded) semantics: values beyond the table
// limit are discarded, which is safe because every further fold only
// pushes mass to larger n. `direct` is the O(N^2)-per-fold oracle,
// `transform` the FFT path; the two are cross-checked in the test suite.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "goldbach/fft.hpp"
#include "goldbach/summation.hpp"
#include "goldbach/types.hpp"

namespace goldbach {

struct LambdaTable {
    std::vector<double> values;  // index n in [0, N]; values[0] = values[1] = 0

    std::size_t limit() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

inline LambdaTable sieve_lambda(std::size_t n) {
    if (n == 0) throw std::domain_error("sieve_lambda: empty domain (N = 0)");
    LambdaTable table;
    table.values.assign(n + 1, 0.0);
    if (n < 2) return table;
    std::vector<bool> composite(n + 1, false);
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (composite[p]) continue;
        for (std::size_t q = p * p; q <= n; q += p) composite[q] = true;
    }
    for (std::size_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        double logp = std::log(static_cast<double>(p));
        for (std::size_t pk = p;; pk *= p) {
            table.values[pk] = logp;
            if (pk > n / p) break;
        }
    }
    return table;
}

// psi(x) = sum_{n <= x} Lambda(n), compensated, ascending order.
inline double psi(const LambdaTable& table, std::size_t x) {
    if (x < 1) throw std::domain_error("psi: x must be >= 1");
    if (x > table.limit())
        throw std::out_of_range("psi: x exceeds the Lambda table limit " +
                                std::to_string(table.limit()));
    KahanSum acc;
    for (std::size_t m = 1; m <= x; ++m) acc.add(table.values[m]);
    return acc.value();
}

// |psi(x) - x| / (sqrt(x) log^2 x): the RH-form error ratio.
inline double rh_ratio(const LambdaTable& table, std::size_t x) {
    if (x < 2) throw std::domain_error("rh_ratio: x must be >= 2");
    double p = psi(table, x);
    double lx = std::log(static_cast<double>(x));
    return std::abs(p - static_cast<double>(x)) /
           (std::sqrt(static_cast<double>(x)) * lx * lx);
}

struct RhScanResult {
    double sup_ratio = 0.0;
    std::size_t argmax = 0;
};

// sup of rh_ratio over [lo, hi], single incremental pass.
inline RhScanResult rh_ratio_scan(const LambdaTable& table, std::size_t lo, std::size_t hi) {
    if (lo < 2 || lo > hi) throw std::domain_error("rh_ratio_scan: need 2 <= lo <= hi");
    if (hi > table.limit()) throw std::out_of_range("rh_ratio_scan: hi exceeds table limit");
    KahanSum acc;
    for (std::size_t m = 1; m < lo; ++m) acc.add(table.values[m]);
    RhScanResult res;
    for (std::size_t x = lo; x <= hi; ++x) {
        acc.add(table.values[x]);
        double lx = std::log(static_cast<double>(x));
        double ratio = std::abs(acc.value() - static_cast<double>(x)) /
                       (std::sqrt(static_cast<double>(x)) * lx * lx);
        if (ratio > res.sup_ratio) {
            res.sup_ratio = ratio;
            res.argmax = x;
        }
    }
    return res;
}

struct GoldbachSeries {
    int r = 2;
    std::size_t limit = 0;
    int summatory_order = 0;         // 0 = raw G_r
    std::vector<double> values;      // index n in [0, limit]
};

enum class ConvMethod { direct, transform };

inline GoldbachSeries goldbach_counts(const LambdaTable& lambda, int r, std::size_t n,
                                      ConvMethod method) {
    if (r < 2) throw std::domain_error("goldbach_counts: r must be >= 2");
    if (n < 1) throw std::domain_error("goldbach_counts: N must be >= 1");
    if (n > lambda.limit())
        throw std::out_of_range("goldbach_counts: N exceeds the Lambda table limit");
    std::vector<double> base(lambda.values.begin(), lambda.values.begin() + n + 1);
    std::vector<double> acc = base;
    for (int fold = 1; fold < r; ++fold) {
        acc = (method == ConvMethod::direct) ? convolve_direct(acc, base, n + 1)
                                             : convolve_fft(acc, base, n + 1);
    }
    GoldbachSeries series;
    series.r = r;
    series.limit = n;
    series.summatory_order = 0;
    series.values = std::move(acc);
    return series;
}

// A^{k+1}(n) = sum_{nu <= n} A^k(nu), applied k times.
inline GoldbachSeries summatory(const GoldbachSeries& series, int k) {
    if (k < 0) throw std::domain_error("summatory: k must be >= 0");
    GoldbachSeries out = series;
    for (int pass = 0; pass < k; ++pass) out.values = prefix_sums(out.values);
    out.summatory_order += k;
    return out;
}

// Partial sum of Phi_r(s) over n <= N, with the heuristic tail majorant
// N^{r - Re s} (1 + log N)^r / (Re s - r) attached. Serves only the
// absolute-convergence region Re s > r.
inline EvalResult phi_r_partial(const LambdaTable& lambda, int r, std::complex<double> s,
                                std::size_t n) {
    if (!(s.real() > static_cast<double>(r)))
        throw std::domain_error("phi_r_partial: Re s must exceed r (absolute convergence)");
    GoldbachSeries series = goldbach_counts(lambda, r, n, ConvMethod::transform);
    KahanComplexSum acc;
    for (std::size_t m = 2; m <= n; ++m) {
        if (series.values[m] == 0.0) continue;
        double lm = std::log(static_cast<double>(m));
        acc.add(series.values[m] * std::exp(std::complex<double>(-s.real() * lm, -s.imag() * lm)));
    }
    EvalResult res;
    res.s = s;
    res.value = acc.value();
    res.truncation = n;
    double sigma = s.real();
    double ln = std::log(static_cast<double>(n));
    res.tail_estimate = std::pow(static_cast<double>(n), static_cast<double>(r) - sigma) *
                        std::pow(1.0 + ln, r) / (sigma - static_cast<double>(r));
    return res;
}

} // namespace goldbach
