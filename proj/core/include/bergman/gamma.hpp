#pragma once

#include <complex>

namespace bergman {

// Principal branch of log Gamma(z), Lanczos approximation with reflection
// for Re z < 0.5. Accurate to ~1e-14 relative away from the poles.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma_fn(std::complex<double> z);

// |Gamma(x+iy)|^2. Throws pole_error when x+iy sits on a nonpositive
// integer (y = 0, x in {0,-1,-2,...}).
double gamma_abs_sq(double x, double y);

// Gamma(x + w) * Gamma(x - w) as a real number; real for w real or purely
// imaginary. Used for the |Gamma|^2 factors continued to imaginary spectral
// parameter.
double gamma_pair(double x, std::complex<double> w);

} // namespace bergman
