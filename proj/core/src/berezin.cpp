#include "bergman/berezin.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "bergman/jacobi.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/sphere_rule.hpp"

namespace bergman {

double c_const(const SpaceParams& sp) {
    const double n = sp.n, nu = sp.nu, m = sp.m;
    double lg = std::lgamma(n) + std::lgamma(m + 1.0) + std::lgamma(2 * nu - m) -
                std::lgamma(n + 1.0) - std::lgamma(n + m) -
                std::lgamma(2 * nu - m - n + 1);
    return sp.beta_exponent() * std::exp(lg);
}

double radial_profile(const SpaceParams& sp, double xi_norm_sq) {
    if (!(xi_norm_sq >= 0.0 && xi_norm_sq < 1.0))
        throw std::domain_error("radial_profile: argument must lie in [0,1)");
    double pm = jacobi_eval_t<double>(sp.m, sp.n - 1.0, sp.beta_exponent(),
                                      1.0 - 2.0 * xi_norm_sq);
    return std::pow(1.0 - xi_norm_sq, 2.0 * (sp.nu - sp.m)) * pm * pm;
}

double berezin_kernel(const SpaceParams& sp, const BallPoint& z, const BallPoint& w) {
    const std::complex<double> ip = hermitian_inner(z, w);
    const double cosh_sq =
        std::norm(1.0 - ip) / ((1.0 - z.norm_sq()) * (1.0 - w.norm_sq()));
    double pm = jacobi_eval_t<double>(sp.m, sp.n - 1.0, sp.beta_exponent(),
                                      2.0 / cosh_sq - 1.0);
    return c_const(sp) * std::pow(cosh_sq, -2.0 * (sp.nu - sp.m)) * pm * pm;
}

namespace {

struct AngularRuleCache {
    int n = 0, s_points = 0, phase_points = 0;
    std::unique_ptr<AngularRule> rule;
};

const AngularRule& cached_sphere_rule(int n, int s_points, int phase_points) {
    static thread_local AngularRuleCache cache;
    if (!cache.rule || cache.n != n || cache.s_points != s_points ||
        cache.phase_points != phase_points) {
        cache.rule = std::make_unique<AngularRule>(
            sphere_product_rule(n, s_points, phase_points));
        cache.n = n;
        cache.s_points = s_points;
        cache.phase_points = phase_points;
    }
    return *cache.rule;
}

BerezinResult apply_radial_form(int n, double weight_b, double c,
                                const std::function<double(double)>& jacobi_sq,
                                const ObservableFn& phi, const BallPoint& z,
                                const BerezinOptions& opts) {
    if (phi.hint == ObservableFn::Growth::unbounded)
        throw std::invalid_argument("berezin_apply: unbounded observable rejected");
    const AngularRule& ang = cached_sphere_rule(n, opts.s_points, opts.phase_points);
    const bool at_origin = z.norm_sq() == 0.0;

    auto angular_mean = [&](double t) {
        double root = std::sqrt(t);
        double acc = 0.0, comp = 0.0;
        for (size_t i = 0; i < ang.size(); ++i) {
            std::vector<std::complex<double>> u(n);
            for (int j = 0; j < n; ++j) u[j] = root * ang.nodes[i][j];
            BallPoint pu(std::move(u));
            double val = phi.fn(at_origin ? pu : mobius_involution(z, pu));
            double term = ang.weights[i] * val;
            double s = acc + term;
            comp += (std::abs(acc) >= std::abs(term)) ? (acc - s) + term : (term - s) + acc;
            acc = s;
        }
        return acc + comp;
    };
    auto f = [&](double t) { return jacobi_sq(t) * angular_mean(t); };

    if (opts.adaptive) {
        AdaptiveResult r = integrate_weighted_adaptive(f, double(n - 1), weight_b,
                                                       opts.rel_tol, 48);
        return {c * n * r.value, c * n * r.error_estimate};
    }
    QuadratureRule rule = gauss_jacobi_rule(opts.radial_points, double(n - 1), weight_b);
    return {c * n * apply_rule(rule, f), 0.0};
}

} // namespace

BerezinResult berezin_apply(const SpaceParams& sp, const ObservableFn& phi,
                            const BallPoint& z, const BerezinOptions& opts) {
    auto jac_sq = [&](double t) {
        double pm = jacobi_eval_t<double>(sp.m, sp.n - 1.0, sp.beta_exponent(),
                                          1.0 - 2.0 * t);
        return pm * pm;
    };
    return apply_radial_form(sp.n, 2.0 * (sp.nu - sp.m) - sp.n - 1.0, c_const(sp),
                             jac_sq, phi, z, opts);
}

BerezinResult berezin_apply_m0(double nu, int n, const ObservableFn& phi,
                               const BallPoint& z, const BerezinOptions& opts) {
    if (!(2.0 * nu > n))
        throw admissibility_error("berezin_apply_m0: 2*nu > n required");
    // cosh^{-4nu} d(0,u) = (1-|u|^2)^{2nu}; constant from the m=0 collapse
    SpaceParams sp(n, nu, 0);
    auto one = [](double) { return 1.0; };
    return apply_radial_form(n, 2.0 * nu - n - 1.0, c_const(sp), one, phi, z, opts);
}

} // namespace bergman
