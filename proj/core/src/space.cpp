#include "bergman/space.hpp"

#include <cmath>

namespace bergman {

double kappa_norm(const SpaceParams& sp, int p, int q) {
    if (q < 0 || q > sp.m) throw admissibility_error("kappa_norm: q must lie in [0, m]");
    if (p < 0) throw admissibility_error("kappa_norm: p >= 0 required");
    const double n = sp.n, nu = sp.nu, m = sp.m;
    // kappa^{-2} = n G(2nu-m-n-q+1) G(p+n+m) / ((m-q)! (2(nu-m)-n) G(2nu-m+p))
    double log_inv = std::log(n) + std::lgamma(2 * nu - m - n - q + 1) +
                     std::lgamma(p + n + m) - std::lgamma(m - q + 1.0) -
                     std::log(2 * (nu - m) - n) - std::lgamma(2 * nu - m + p);
    return std::exp(-0.5 * log_inv);
}

double normalization_factor(const SpaceParams& sp) {
    const double n = sp.n, nu = sp.nu, m = sp.m;
    double lg = std::lgamma(2 * nu - m) - std::lgamma(n + 1.0) -
                std::lgamma(2 * nu - m - n + 1) + std::lgamma(m + n) -
                std::lgamma(m + 1.0) - std::lgamma(n);
    return (2 * (nu - m) - n) * std::exp(lg);
}

} // namespace bergman
