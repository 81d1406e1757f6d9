#pragma once

#include <complex>
#include <vector>

namespace bergman {

// Product cubature on the unit sphere of C^n against the normalized
// measure: simplex coordinates |theta_j|^2 through nested Beta rules,
// phases by equispaced (trapezoid) nodes. Spectrally accurate for smooth
// integrands; exact for phase-polynomials of degree < phase_points.
struct AngularRule {
    int n = 0;
    std::vector<std::vector<std::complex<double>>> nodes;
    std::vector<double> weights; // sums to 1

    size_t size() const { return nodes.size(); }
};

AngularRule sphere_product_rule(int n, int radial_points, int phase_points);

} // namespace bergman
