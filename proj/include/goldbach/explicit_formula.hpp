#pragma once

// The explicit-formula correction term
//
//   H_r(x) = -r sum_rho x^{r-1+rho} / (rho (1+rho) ... (r-1+rho))
//
// summed over nontrivial zeros rho = 1/2 + i gamma together with their
// conjugates (RH form is hard-wired; a non-RH mode is out of scope), and
// the error audit
//
//   Delta_r(x) = sum_{n<=x} G_r(n) - x^r/r! - H_r(x).
//
// Truncation to K zero pairs is ours, not the literature's; the attached
// tail_note is the integral comparison of 2r x^{r-1/2} sum_{k>K} |rho_k|^{-r}
// against the zero-counting density log(t/2pi)/2pi and is labeled a
// heuristic in every report.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "goldbach/arith.hpp"
#include "goldbach/summation.hpp"
#include "goldbach/zeros.hpp"

namespace goldbach {

struct HrValue {
    double value = 0.0;
    double tail_note = 0.0;  // +inf when k = 0 (nothing summed, nothing bounded)
};

inline HrValue h_r(double x, int r, const ZeroTable& table, std::size_t k) {
    if (!(x >= 1.0)) throw std::domain_error("h_r: x must be >= 1");
    if (r < 2 || r > 10) throw std::domain_error("h_r: r must be in [2, 10]");
    if (k > table.size())
        throw std::domain_error("h_r: K exceeds the zero table length");
    HrValue out;
    if (k == 0) {
        out.value = 0.0;
        out.tail_note = std::numeric_limits<double>::infinity();
        return out;
    }
    const double logx = std::log(x);
    // x^{r-1+rho} in explicit polar form: amp * e^{i gamma log x}
    const double amp = std::exp((static_cast<double>(r) - 0.5) * logx);
    KahanSum acc;
    for (std::size_t idx = 0; idx < k; ++idx) {
        double gamma = table.gammas[idx];
        std::complex<double> rho(0.5, gamma);
        std::complex<double> denom(1.0, 0.0);
        for (int j = 0; j < r; ++j) denom *= (static_cast<double>(j) + rho);
        std::complex<double> numer = amp * std::polar(1.0, gamma * logx);
        acc.add(2.0 * (numer / denom).real());  // rho and its conjugate
    }
    out.value = -static_cast<double>(r) * acc.value();

    // integral-comparison tail: sum_{k>K} |rho_k|^{-r} ~
    // (1/2pi) gamma_K^{1-r}/(r-1) (log(gamma_K/2pi) + 1/(r-1))
    const double two_pi = 6.283185307179586476925286766559;
    double gk = table.gammas[k - 1];
    double tail_zero_sum = std::pow(gk, 1.0 - static_cast<double>(r)) /
                           (two_pi * (static_cast<double>(r) - 1.0)) *
                           (std::log(gk / two_pi) + 1.0 / (static_cast<double>(r) - 1.0));
    out.tail_note = 2.0 * static_cast<double>(r) *
                    std::pow(x, static_cast<double>(r) - 0.5) * tail_zero_sum;
    return out;
}

struct DeltaRecord {
    std::size_t x = 0;
    double sum = 0.0;         // sum_{n<=x} G_r(n)
    double main_term = 0.0;   // x^r / r!
    double h = 0.0;           // H_r(x) truncated to K pairs
    double delta = 0.0;       // sum - main_term - h
    double normalized = 0.0;  // |delta| / (x^{r-1} log^5 x)
    double h_tail_note = 0.0;
};

inline DeltaRecord delta_r(std::size_t x, int r, const GoldbachSeries& series,
                           const ZeroTable& table, std::size_t k) {
    if (series.summatory_order != 0)
        throw std::invalid_argument("delta_r: series must be raw G_r (summatory order 0)");
    if (series.r != r) throw std::invalid_argument("delta_r: series was built for another r");
    if (x < 2) throw std::domain_error("delta_r: x must be >= 2");
    if (x > series.limit) throw std::out_of_range("delta_r: x exceeds the series limit");
    DeltaRecord rec;
    rec.x = x;
    KahanSum acc;
    for (std::size_t n = 1; n <= x; ++n) acc.add(series.values[n]);
    rec.sum = acc.value();
    double rfact = 1.0;
    for (int i = 2; i <= r; ++i) rfact *= static_cast<double>(i);
    rec.main_term = std::pow(static_cast<double>(x), r) / rfact;
    HrValue hv = h_r(static_cast<double>(x), r, table, k);
    rec.h = hv.value;
    rec.h_tail_note = hv.tail_note;
    rec.delta = rec.sum - rec.main_term - rec.h;
    double lx = std::log(static_cast<double>(x));
    rec.normalized = std::abs(rec.delta) /
                     (std::pow(static_cast<double>(x), r - 1) * std::pow(lx, 5));
    return rec;
}

} // namespace goldbach
