#pragma once

#include <functional>
#include <vector>

#include "bergman/multi_index.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

// Finite combination of sphere monomials theta^alpha conj(theta)^beta;
// the angular integral of such a pairing is exact.
struct SpherePolynomial {
    int n = 0;
    struct Term {
        MultiIndex alpha;
        MultiIndex beta;
        double coeff = 0.0;
    };
    std::vector<Term> terms;

    static SpherePolynomial constant(int n, double c = 1.0);
};

// Integral over the ball of radial(t) * spherical(theta) against the
// normalized measure (radial density n t^{n-1} dt): exact rational
// angular factor times the radial quadrature, with each term's
// homogeneity degree folded into the radial integrand.
double ball_integrate(const std::function<double(double)>& radial_of_t,
                      const SpherePolynomial& spherical, const QuadratureRule& rule);

} // namespace bergman
