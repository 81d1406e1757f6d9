#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace bergman {

// Nodes and weights for integrals against t^{t_exponent} (1-t)^{one_minus_t_exponent}
// on (0,1), in the squared-radius variable t = rho^2.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double t_exponent = 0.0;
    double one_minus_t_exponent = 0.0;
    bool adaptive = false;
    int refinement_budget = 48; // geometric panels toward t = 1
    double target_rel_tol = 1e-11;
};

// Gauss rule exact for polynomial f up to degree 2*points-1 in
// int_0^1 t^a (1-t)^b f(t) dt. Requires a, b > -1.
QuadratureRule gauss_jacobi_rule(int points, double a_exp, double b_exp);

// Radial rule for the ball measure factor t^{n-1}(1-t)^gamma. Throws for
// gamma <= -1 (non-integrable weight, i.e. a 2*nu > n violation upstream).
QuadratureRule radial_rule(int n, double gamma, int points, bool adaptive = false);

// int_0^1 t^{a+j} (1-t)^b dt
double beta_moment(double a_exp, double b_exp, int j);

// sum_i w_i f(t_i); the rule's weight is already folded into w_i.
double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f);

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

struct AdaptiveResultC {
    std::complex<double> value;
    double error_estimate = 0.0;
    int panels = 0;
};

// Adaptive evaluation of int_0^1 t^a (1-t)^b f(t) dt for f smooth inside
// (0,1) with possibly slow variation near t = 1 (hypergeometric tails).
// Panels cluster geometrically toward t = 1; each panel pairs an embedded
// lower-order rule for the error estimate. Throws convergence_error when
// the budget is exhausted before the requested tolerance.
AdaptiveResult integrate_weighted_adaptive(const std::function<double(double)>& f,
                                           double a_exp, double b_exp,
                                           double rel_tol = 1e-11, int budget = 48);

AdaptiveResultC integrate_weighted_adaptive_c(
    const std::function<std::complex<double>(double)>& f, double a_exp, double b_exp,
    double rel_tol = 1e-11, int budget = 48);

// Adaptive evaluation honoring a QuadratureRule's metadata when
// rule.adaptive is set, else the fixed rule.
AdaptiveResult integrate_with_rule(const QuadratureRule& rule,
                                   const std::function<double(double)>& f);

} // namespace bergman
