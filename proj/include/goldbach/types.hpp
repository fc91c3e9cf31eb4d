#pragma once

#include <complex>
#include <cstddef>

namespace goldbach {

// A complex evaluation together with its truncation metadata and an
// a-posteriori bound on the discarded tail. `truncation` is the number of
// zero pairs for zero sums, or the summation length for partial sums.
struct EvalResult {
    std::complex<double> s;
    std::complex<double> value;
    std::size_t truncation = 0;
    double tail_estimate = 0.0;
};

} // namespace goldbach
