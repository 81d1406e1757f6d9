#include "bergman/gamma.hpp"

#include <cmath>
#include <limits>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey). Good for ~15
// significant digits on the half-plane Re z >= 0.5.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

const double kLogSqrt2Pi = 0.91893853320467274178;

std::complex<double> log_gamma_positive(std::complex<double> z) {
    // valid for Re z >= 0.5
    std::complex<double> zm1 = z - 1.0;
    std::complex<double> series = kLanczos[0];
    for (int i = 1; i < 15; ++i) series += kLanczos[i] / (zm1 + double(i));
    std::complex<double> t = zm1 + kLanczosG + 0.5;
    return kLogSqrt2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return log_gamma_positive(z);
    // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    // Work with sin(pi z) through the shifted argument to control the
    // imaginary-part growth; the principal branch is what callers need
    // since every downstream use exponentiates or takes the real part.
    const double pi = 3.14159265358979323846;
    std::complex<double> sin_piz = std::sin(pi * z);
    if (sin_piz == std::complex<double>(0.0, 0.0))
        throw pole_error("log_gamma: pole at nonpositive integer");
    return std::log(pi) - std::log(sin_piz) - log_gamma_positive(1.0 - z);
}

std::complex<double> gamma_fn(std::complex<double> z) { return std::exp(log_gamma(z)); }

double gamma_abs_sq(double x, double y) {
    if (y == 0.0 && x <= 0.0 && x == std::floor(x))
        throw pole_error("gamma_abs_sq: pole at nonpositive integer");
    // |Gamma(x+iy)|^2 = exp(2 Re log Gamma(x+iy))
    return std::exp(2.0 * log_gamma({x, y}).real());
}

double gamma_pair(double x, std::complex<double> w) {
    std::complex<double> v = log_gamma(std::complex<double>(x, 0.0) + w) +
                             log_gamma(std::complex<double>(x, 0.0) - w);
    return std::exp(v.real()) * std::cos(v.imag());
}

} // namespace bergman
