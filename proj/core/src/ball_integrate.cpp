#include "bergman/ball_integrate.hpp"

#include <cmath>

#include "bergman/harmonic.hpp"

namespace bergman {

SpherePolynomial SpherePolynomial::constant(int n, double c) {
    SpherePolynomial p;
    p.n = n;
    MultiIndex zero{std::vector<int>(n, 0)};
    p.terms.push_back({zero, zero, c});
    return p;
}

double ball_integrate(const std::function<double(double)>& radial_of_t,
                      const SpherePolynomial& spherical, const QuadratureRule& rule) {
    double total = 0.0;
    for (const auto& term : spherical.terms) {
        Rational ang = sphere_monomial_integral(term.alpha, term.beta);
        if (ang == 0 || term.coeff == 0.0) continue;
        const double half_degree = 0.5 * (term.alpha.degree() + term.beta.degree());
        auto f = [&](double t) { return radial_of_t(t) * std::pow(t, half_degree); };
        AdaptiveResult radial = integrate_with_rule(rule, f);
        total += term.coeff * to_double(ang) * double(spherical.n) * radial.value;
    }
    return total;
}

} // namespace bergman
