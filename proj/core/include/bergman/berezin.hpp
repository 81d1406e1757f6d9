#pragma once

#include <functional>

#include "bergman/ball.hpp"
#include "bergman/space.hpp"

namespace bergman {

// Classical observable to be transformed. The growth hint gates the
// quadrature: only observables bounded on the closed ball (or with an
// integrable power profile) are accepted.
struct ObservableFn {
    enum class Growth { bounded, integrable_power, unbounded };

    std::function<double(const BallPoint&)> fn;
    Growth hint = Growth::bounded;
};

// Transform constant c of the invariant-kernel form.
double c_const(const SpaceParams& sp);

// Radial kernel profile h(xi) = (1-|xi|^2)^{2(nu-m)} P_m(1-2|xi|^2)^2
// as a function of |xi|^2.
double radial_profile(const SpaceParams& sp, double xi_norm_sq);

// Kernel density against the invariant measure; a function of the
// geodesic distance alone.
double berezin_kernel(const SpaceParams& sp, const BallPoint& z, const BallPoint& w);

struct BerezinOptions {
    bool adaptive = true;
    double rel_tol = 1e-10;
    int radial_points = 96; // fixed-rule fallback
    int s_points = 16;      // angular moduli nodes
    int phase_points = 24;  // per-coordinate phase nodes
};

struct BerezinResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// B[phi](z) by the substitution w = phi_z(u): the kernel becomes radial
// in u and the integral splits into an adaptive radial rule times the
// angular product rule.
BerezinResult berezin_apply(const SpaceParams& sp, const ObservableFn& phi,
                            const BallPoint& z, const BerezinOptions& opts = {});

// m = 0 specialization through the dedicated inverse-cosh power form.
BerezinResult berezin_apply_m0(double nu, int n, const ObservableFn& phi,
                               const BallPoint& z, const BerezinOptions& opts = {});

} // namespace bergman
