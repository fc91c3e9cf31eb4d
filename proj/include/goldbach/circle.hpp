#pragma once

// Circle-method objects as exact trigonometric-polynomial coefficient
// algebra. With e(a) = e^{2 pi i a},
//
//   S(a)  = sum_{n<=x} Lambda(n) e(na)        coeffs Lambda(n) on [1, x]
//   T(a)  = sum_{n<=x} e(na)                  coeffs 1 on [1, x]
//   T3(a) = sum_{|n|<=x} (x-|n|)^2 e(na)      coeffs (x-|n|)^2 on [-x, x]
//   R(a)  = S(a) - T(a)
//
// Every int_0^1 of a product is the constant coefficient of the product
// polynomial, extracted by iterated linear convolution -- exact up to
// floating roundoff, never quadrature.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "goldbach/arith.hpp"
#include "goldbach/fft.hpp"
#include "goldbach/parallel.hpp"
#include "goldbach/summation.hpp"

namespace goldbach {

struct CoeffSeq {
    long lo = 0;                 // support [lo, lo + coeffs.size() - 1]
    std::vector<double> coeffs;

    long hi() const { return lo + static_cast<long>(coeffs.size()) - 1; }

    double at(long n) const {
        long idx = n - lo;
        if (idx < 0 || idx >= static_cast<long>(coeffs.size())) return 0.0;
        return coeffs[static_cast<std::size_t>(idx)];
    }

    // sum_n c_n e(n alpha), ascending n, compensated
    std::complex<double> eval(double alpha) const {
        const double two_pi = 6.283185307179586476925286766559;
        std::complex<double> z = std::polar(1.0, two_pi * alpha);
        std::complex<double> w = std::polar(1.0, two_pi * alpha * static_cast<double>(lo));
        KahanComplexSum acc;
        for (double c : coeffs) {
            if (c != 0.0) acc.add(c * w);
            w *= z;
        }
        return acc.value();
    }

    // sum of squared coefficients = int_0^1 |poly|^2 (Parseval)
    double power() const {
        KahanSum acc;
        for (double c : coeffs) acc.add(c * c);
        return acc.value();
    }
};

inline CoeffSeq make_S(const LambdaTable& lambda, std::size_t x) {
    if (x < 1) throw std::domain_error("make_S: x must be >= 1");
    if (x > lambda.limit()) throw std::out_of_range("make_S: x exceeds the Lambda table limit");
    CoeffSeq s;
    s.lo = 1;
    s.coeffs.assign(lambda.values.begin() + 1, lambda.values.begin() + x + 1);
    return s;
}

inline CoeffSeq make_T(std::size_t x) {
    if (x < 1) throw std::domain_error("make_T: x must be >= 1");
    CoeffSeq t;
    t.lo = 1;
    t.coeffs.assign(x, 1.0);
    return t;
}

inline CoeffSeq make_T3(std::size_t x) {
    if (x < 1) throw std::domain_error("make_T3: x must be >= 1");
    CoeffSeq t3;
    t3.lo = -static_cast<long>(x);
    t3.coeffs.assign(2 * x + 1, 0.0);
    for (long n = -static_cast<long>(x); n <= static_cast<long>(x); ++n) {
        double d = static_cast<double>(x) - std::abs(static_cast<double>(n));
        t3.coeffs[static_cast<std::size_t>(n + static_cast<long>(x))] = d * d;
    }
    return t3;
}

inline CoeffSeq make_R(const LambdaTable& lambda, std::size_t x) {
    CoeffSeq r = make_S(lambda, x);
    for (double& c : r.coeffs) c -= 1.0;
    return r;
}

inline constexpr std::size_t kMaxProductSupport = std::size_t{1} << 22;

inline CoeffSeq convolve(const CoeffSeq& a, const CoeffSeq& b) {
    std::size_t out_len = a.coeffs.size() + b.coeffs.size() - 1;
    if (out_len > kMaxProductSupport)
        throw std::length_error("convolve: product support exceeds limit");
    CoeffSeq out;
    out.lo = a.lo + b.lo;
    out.coeffs = convolve_direct(a.coeffs, b.coeffs, out_len);
    return out;
}

// int_0^1 prod_i seq_i(alpha) d alpha, i.e. the constant coefficient of
// the product polynomial. Multilinear and permutation-invariant.
inline double integral_product(const std::vector<CoeffSeq>& seqs) {
    if (seqs.empty()) throw std::invalid_argument("integral_product: empty product");
    CoeffSeq acc = seqs.front();
    for (std::size_t i = 1; i < seqs.size(); ++i) acc = convolve(acc, seqs[i]);
    return acc.at(0);
}

// B_{r,k}(x) = int_0^1 T^{r-k} R^k T3
inline double b_rk(int r, int k, std::size_t x, const LambdaTable& lambda) {
    if (r < 1 || k < 0 || k > r) throw std::domain_error("b_rk: need 0 <= k <= r");
    std::vector<CoeffSeq> factors;
    for (int i = 0; i < r - k; ++i) factors.push_back(make_T(x));
    for (int i = 0; i < k; ++i) factors.push_back(make_R(lambda, x));
    factors.push_back(make_T3(x));
    return integral_product(factors);
}

// The three readings of A_r^3(x):
//   via_summatory  - discrete triple summatory of G_r (weight binom(x-m+2, 2))
//   via_integral   - int_0^1 S^r T3 by coefficient extraction
//   via_weighted   - sum_{m<=x} G_r(m) (x-m)^2
// via_integral and via_weighted are the same algebra and agree to roundoff;
// the discrete summatory differs (weights binom(x-m+2,2) vs (x-m)^2) and the
// report quantifies the mismatch rather than hiding it.
struct A3Report {
    double via_summatory = 0.0;
    double via_integral = 0.0;
    double via_weighted = 0.0;
    double diff_summatory_integral = 0.0;
    double diff_integral_weighted = 0.0;
};

inline A3Report a3_identity_check(int r, std::size_t x, const LambdaTable& lambda) {
    if (r < 2) throw std::domain_error("a3_identity_check: r must be >= 2");
    GoldbachSeries g = goldbach_counts(lambda, r, x, ConvMethod::direct);
    GoldbachSeries a3 = summatory(g, 3);
    A3Report rep;
    rep.via_summatory = a3.values[x];
    std::vector<CoeffSeq> factors(static_cast<std::size_t>(r), make_S(lambda, x));
    factors.push_back(make_T3(x));
    rep.via_integral = integral_product(factors);
    KahanSum weighted;
    for (std::size_t m = 1; m <= x; ++m) {
        double d = static_cast<double>(x) - static_cast<double>(m);
        weighted.add(g.values[m] * d * d);
    }
    rep.via_weighted = weighted.value();
    rep.diff_summatory_integral = rep.via_summatory - rep.via_integral;
    rep.diff_integral_weighted = rep.via_integral - rep.via_weighted;
    return rep;
}

// mean of |poly(j/M)|^2 over the M-point uniform grid; equals power() once
// M exceeds the support length (no aliasing). FFT when M is a power of two.
inline double parseval_grid(const CoeffSeq& seq, std::size_t m_points) {
    if (m_points < seq.coeffs.size())
        throw std::domain_error("parseval_grid: grid must be at least the support length");
    KahanSum acc;
    if ((m_points & (m_points - 1)) == 0) {
        // absolute values are shift-invariant, so the support offset is ignorable
        std::vector<std::complex<double>> buf(m_points, std::complex<double>(0.0, 0.0));
        for (std::size_t i = 0; i < seq.coeffs.size(); ++i) buf[i] = seq.coeffs[i];
        fft_radix2(buf, false);
        for (const auto& z : buf) acc.add(std::norm(z));
    } else {
        for (std::size_t j = 0; j < m_points; ++j) {
            double alpha = static_cast<double>(j) / static_cast<double>(m_points);
            acc.add(std::norm(seq.eval(alpha)));
        }
    }
    return acc.value() / static_cast<double>(m_points);
}

struct ExpSumReport {
    std::size_t x = 0;
    double sup_ratio = 0.0;           // sup |R(a)| / (sqrt x log^2 x + a x^{3/2} log^2 x)
    double argmax_alpha = 0.0;
    double l2_ratio = 0.0;            // sum (Lambda(n)-1)^2 / (x log^2 x), exact by Parseval
    double parseval_rel_diff = 0.0;   // coefficient space vs 2x-point quadrature of |R|^2
    double sup_t3_ratio = 0.0;        // sup |T3(a)| / min(x^3, a^{-3})
    double argmax_t3_alpha = 0.0;
    double r_at_zero = 0.0;           // |R(0)| = |psi(x) - x|
};

// Audits of the exponential-sum bounds: R(a) << sqrt(x) log^2 x + a x^{3/2} log^2 x,
// the L^2 bound int |R|^2 << x log^2 x, and T3(a) << min(x^3, a^{-3}).
// Reported as constants; only the Parseval identity is a hard check.
inline ExpSumReport expsum_audit(const LambdaTable& lambda, std::size_t x,
                                 const std::vector<double>& alphas, int threads = 1) {
    if (alphas.empty()) throw std::domain_error("expsum_audit: empty alpha grid");
    for (double a : alphas)
        if (!(a > 0.0) || a > 0.5)
            throw std::domain_error("expsum_audit: alpha grid must lie in (0, 1/2]");
    CoeffSeq r = make_R(lambda, x);
    CoeffSeq t3 = make_T3(x);
    ExpSumReport rep;
    rep.x = x;
    double lx = std::log(static_cast<double>(x));
    double xd = static_cast<double>(x);
    double base = std::sqrt(xd) * lx * lx;
    double slope = std::pow(xd, 1.5) * lx * lx;
    double x3 = xd * xd * xd;

    struct Row {
        double ratio_r, ratio_t3;
    };
    std::vector<Row> rows(alphas.size());
    for_index_blocks(alphas.size(), 64, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double a = alphas[i];
            rows[i].ratio_r = std::abs(r.eval(a)) / (base + a * slope);
            double t3bound = std::min(x3, 1.0 / (a * a * a));
            rows[i].ratio_t3 = std::abs(t3.eval(a)) / t3bound;
        }
    });
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (rows[i].ratio_r > rep.sup_ratio) {
            rep.sup_ratio = rows[i].ratio_r;
            rep.argmax_alpha = alphas[i];
        }
        if (rows[i].ratio_t3 > rep.sup_t3_ratio) {
            rep.sup_t3_ratio = rows[i].ratio_t3;
            rep.argmax_t3_alpha = alphas[i];
        }
    }

    double coeff_power = r.power();
    rep.l2_ratio = coeff_power / (xd * lx * lx);
    std::size_t m = 1;
    while (m < 2 * x + 2) m <<= 1;
    double grid_power = parseval_grid(r, m);
    rep.parseval_rel_diff = std::abs(grid_power - coeff_power) / coeff_power;

    KahanSum r0;
    for (double c : r.coeffs) r0.add(c);
    rep.r_at_zero = std::abs(r0.value());
    return rep;
}

} // namespace goldbach
