#pragma once

#include <complex>

#include "bergman/series.hpp"

namespace bergman {

struct Hyp3F2Result {
    std::complex<double> value;
    double tail_estimate = 0.0; // algebraic-tail correction magnitude
    std::int64_t terms = 0;
};

// 3F2(a1,a2,a3; b1,b2; 1) by direct compensated summation with a
// convergence-rate tail estimate. Requires Re(b1+b2-a1-a2-a3) > 0 unless
// a numerator parameter terminates the sum; otherwise throws
// convergence_error (divergent).
Hyp3F2Result hyp_3f2_unit(std::complex<double> a1, std::complex<double> a2,
                          std::complex<double> a3, std::complex<double> b1,
                          std::complex<double> b2, const SeriesControl& ctrl = {});

} // namespace bergman
