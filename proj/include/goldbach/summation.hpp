#pragma once

// Compensated (Kahan) summation. Every prefix sum and reduction in the
// library uses these accumulators in a fixed ascending-index order, so
// results are reproducible bit-for-bit regardless of the thread hint.

#include <complex>
#include <cstddef>
#include <vector>

namespace goldbach {

class KahanSum {
public:
    void add(double x) noexcept {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    // merge another accumulator (order-sensitive; call in block order)
    void add(const KahanSum& other) noexcept {
        add(other.sum_);
        add(-other.comp_);
    }
    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanComplexSum {
public:
    void add(std::complex<double> z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
    }
    void add(const KahanComplexSum& other) noexcept {
        re_.add(other.re_);
        im_.add(other.im_);
    }
    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

// Running prefix sums a[0], a[0]+a[1], ... with compensation.
inline std::vector<double> prefix_sums(const std::vector<double>& a) {
    std::vector<double> out(a.size());
    KahanSum acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc.add(a[i]);
        out[i] = acc.value();
    }
    return out;
}

} // namespace goldbach
