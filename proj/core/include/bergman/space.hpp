#pragma once

#include <cmath>
#include <string>

#include "bergman/errors.hpp"

namespace bergman {

// The triple (n, nu, m) selecting one generalized Bergman space on the
// n-dimensional complex ball. Admissibility: 2 nu > n and
// m <= floor(nu - n/2), with the derived weight exponent
// 2(nu - m) - n kept strictly positive.
struct SpaceParams {
    int n;
    double nu;
    int m;

    SpaceParams(int n_, double nu_, int m_) : n(n_), nu(nu_), m(m_) {
        if (n < 2) throw admissibility_error("SpaceParams: n >= 2 required");
        if (!(2.0 * nu > n))
            throw admissibility_error("SpaceParams: 2*nu > n required (nu=" +
                                      std::to_string(nu) + ", n=" + std::to_string(n) + ")");
        if (m < 0 || m > int(std::floor(nu - 0.5 * n)))
            throw admissibility_error("SpaceParams: m <= floor(nu - n/2) violated");
        if (!(beta_exponent() > 0.0))
            throw admissibility_error("SpaceParams: 2(nu - m) - n must be positive");
    }

    // 2(nu-m) - n, the second Jacobi parameter of the radial factor
    double beta_exponent() const { return 2.0 * (nu - m) - n; }

    // Discrete eigenvalue 4 nu (2m+n) - 4 m (m+n) of the magnetic
    // Schroedinger operator.
    double eigenvalue() const { return 4.0 * nu * (2 * m + n) - 4.0 * m * (m + n); }
};

// Normalization constant kappa_{p,q} of the orthonormal radial-spherical
// basis element.
double kappa_norm(const SpaceParams& sp, int p, int q);

// Constant value N of the diagonal of the reproducing kernel.
double normalization_factor(const SpaceParams& sp);

} // namespace bergman
