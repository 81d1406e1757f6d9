#include "bergman/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/berezin.hpp"
#include "bergman/errors.hpp"
#include "bergman/gamma.hpp"
#include "bergman/hyp2f1.hpp"
#include "bergman/hyp3f2.hpp"
#include "bergman/jacobi.hpp"
#include "bergman/linearization.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/wilson.hpp"

namespace bergman {

using cplx = std::complex<double>;

namespace {

constexpr cplx kI{0.0, 1.0};

// 2F1((n+i lambda)/2, (n-i lambda)/2; n; t/(t-1)), the transformed
// spherical-function factor of the radial integrands.
cplx hyp_factor(int n, cplx lambda, double t) {
    cplx a = 0.5 * (double(n) + kI * lambda);
    cplx b = 0.5 * (double(n) - kI * lambda);
    return gauss_2f1(a, b, double(n), t / (t - 1.0));
}

bool near_zero(cplx lambda) { return std::abs(lambda) < 1e-9; }

} // namespace

cplx spherical_function(int n, cplx lambda, const BallPoint& z) {
    const double t = z.norm_sq();
    cplx s = 0.5 * (kI * lambda + double(n));
    cplx val = std::exp(s * std::log(1.0 - t)) *
               gauss_2f1(s, s, double(n), t);
    if (std::abs(lambda.imag()) < 1e-14) {
        if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val.real())))
            throw convergence_error("spherical_function: imaginary residue above guard");
        return {val.real(), 0.0};
    }
    return val;
}

double spherical_transform_quad(const SpaceParams& sp, cplx lambda,
                                const QuadOptions& opts) {
    // 2n int_0^1 rho^{2n-1} (1-rho^2)^{2(nu-m)-n-1} P_m(1-2 rho^2)^2
    //  x 2F1(..., rho^2/(rho^2-1)) d rho,  in t = rho^2
    if (near_zero(lambda)) {
        // a-b integer degeneracy of the connection formula at lambda = 0:
        // evaluate at eps, 2 eps and Richardson the even function
        double f1 = spherical_transform_quad(sp, cplx(1e-6, 0.0), opts);
        double f2 = spherical_transform_quad(sp, cplx(2e-6, 0.0), opts);
        return (4.0 * f1 - f2) / 3.0;
    }
    const double beta = sp.beta_exponent();
    auto f = [&](double t) -> cplx {
        double pm = jacobi_eval_t<double>(sp.m, sp.n - 1.0, beta, 1.0 - 2.0 * t);
        return pm * pm * hyp_factor(sp.n, lambda, t);
    };
    AdaptiveResultC r = integrate_weighted_adaptive_c(f, sp.n - 1.0, beta - 1.0,
                                                      opts.rel_tol, opts.budget);
    cplx v = double(sp.n) * r.value;
    if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v.real())))
        throw convergence_error("spherical_transform_quad: non-real transform value");
    return v.real();
}

double koornwinder_integral_quad(const KoornwinderParams& kp, int k, double lambda,
                                 const QuadOptions& opts) {
    if (!(kp.alpha > -1.0) || !(kp.delta > -1.0) ||
        !(kp.delta + kp.mu_prime > -1.0))
        throw std::invalid_argument("koornwinder_integral_quad: validity region violated");
    if (std::abs(lambda) < 1e-9) {
        double f1 = koornwinder_integral_quad(kp, k, 1e-6, opts);
        double f2 = koornwinder_integral_quad(kp, k, 2e-6, opts);
        return (4.0 * f1 - f2) / 3.0;
    }
    // u = tanh^2 t: (1/2) int_0^1 u^alpha (1-u)^{(delta+mu'-alpha-beta-2)/2}
    //   P_k^{(alpha,delta)}(1-2u) 2F1(a1,a2; alpha+1; u/(u-1)) du
    cplx a1 = 0.5 * (kp.alpha + kp.beta + 1.0 + kI * lambda);
    cplx a2 = 0.5 * (kp.alpha + kp.beta + 1.0 - kI * lambda);
    const double b_exp = 0.5 * (kp.delta + kp.mu_prime - kp.alpha - kp.beta - 2.0);
    auto f = [&](double u) -> cplx {
        double jac = jacobi_eval_t<double>(k, kp.alpha, kp.delta, 1.0 - 2.0 * u);
        return jac * gauss_2f1(a1, a2, kp.alpha + 1.0, u / (u - 1.0));
    };
    AdaptiveResultC r =
        integrate_weighted_adaptive_c(f, kp.alpha, b_exp, opts.rel_tol, opts.budget);
    cplx v = 0.5 * r.value;
    if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v.real())))
        throw convergence_error("koornwinder_integral_quad: non-real value");
    return v.real();
}

double koornwinder_rhs(const KoornwinderParams& kp, int k, double lambda,
                       ConstantsMode mode) {
    const double dm1 = 0.5 * (kp.delta + kp.mu_prime + 1.0);
    double num = std::tgamma(kp.alpha + 1.0) * ((k % 2) ? -1.0 : 1.0) *
                 gamma_abs_sq(dm1, 0.5 * lambda);
    double den = std::tgamma(double(k + 1)) *
                 std::tgamma(0.5 * (kp.alpha + kp.beta + kp.delta + kp.mu_prime + 2.0) + k) *
                 std::tgamma(0.5 * (kp.alpha - kp.beta + kp.delta + kp.mu_prime + 2.0) + k);
    WilsonParams wp{dm1, 0.5 * (kp.delta - kp.mu_prime + 1.0),
                    0.5 * (kp.alpha + kp.beta + 1.0), 0.5 * (kp.alpha - kp.beta + 1.0)};
    double w = wilson_eval(k, 0.25 * lambda * lambda, wp);
    double value = num / den * w;
    // the transcribed identity doubles the integral; the audited constants
    // carry the 1/2 fixed against the quadrature oracle
    return (mode == ConstantsMode::audited) ? 0.5 * value : value;
}

double i_k_closed(const SpaceParams& sp, int k, double lambda, double wilson_b,
                  ConstantsMode mode) {
    if (k < 0 || k > 2 * sp.m)
        throw std::invalid_argument("i_k_closed: k must lie in [0, 2m]");
    const double e = 2.0 * (sp.nu - sp.m);
    const double a = e - 0.5 * sp.n;
    double pre = 2.0 * sp.n * std::tgamma(double(sp.n)) * ((k % 2) ? -1.0 : 1.0) /
                 (std::tgamma(double(k + 1)) * std::pow(std::tgamma(e + k), 2));
    double g = gamma_abs_sq(a, 0.5 * lambda);
    WilsonParams wp{a, wilson_b, 0.5 * sp.n, 0.5 * sp.n};
    double value = pre * g * wilson_eval(k, 0.25 * lambda * lambda, wp);
    return (mode == ConstantsMode::audited) ? 0.5 * value : value;
}

std::vector<double> gamma_coeffs(const SpaceParams& sp) {
    const std::vector<double> a = linearization_coeffs(sp);
    const double n = sp.n, nu = sp.nu, m = sp.m;
    const double e = 2.0 * (nu - m);
    std::vector<double> out(2 * sp.m + 1);
    for (int k = 0; k <= 2 * sp.m; ++k) {
        double lg = std::lgamma(m + 1.0) + std::lgamma(n) + std::lgamma(2 * nu - m) -
                    std::lgamma(n + m) - std::lgamma(2 * nu - m - n + 1) -
                    std::lgamma(double(k + 1)) - 2.0 * std::lgamma(e + k);
        out[k] = 2.0 * sp.beta_exponent() * ((k % 2) ? -1.0 : 1.0) *
                 std::exp(lg) * a[k];
    }
    return out;
}

double symbol_wilson(const SpaceParams& sp, cplx lambda, const AuditedConstants* audit) {
    const double e = 2.0 * (sp.nu - sp.m);
    const double a = e - 0.5 * sp.n;
    const double b = audit ? audit->wilson_b : 1.0 + 0.5 * sp.n;
    const double scale = audit ? audit->scale : 1.0;
    const std::vector<double> gam = gamma_coeffs(sp);
    // W_k argument lambda^2/4, real for real or purely imaginary lambda
    cplx t_c = 0.25 * lambda * lambda;
    if (std::abs(t_c.imag()) > 1e-12 * std::max(1.0, std::abs(t_c.real())))
        throw std::invalid_argument("symbol_wilson: lambda must be real or imaginary");
    const double t = t_c.real();
    double sum = 0.0, comp = 0.0;
    for (int k = 0; k <= 2 * sp.m; ++k) {
        WilsonParams wp{a, b, 0.5 * sp.n, 0.5 * sp.n};
        double term = gam[k] * wilson_eval(k, t, wp);
        double s = sum + term;
        comp += (std::abs(sum) >= std::abs(term)) ? (sum - s) + term : (term - s) + sum;
        sum = s;
    }
    return scale * gamma_pair(a, 0.5 * kI * lambda) * (sum + comp);
}

double symbol_peetre(double nu, int n, cplx lambda) {
    if (!(2.0 * nu > n)) throw admissibility_error("symbol_peetre: 2*nu > n required");
    const double alpha = 2.0 * nu - n - 1.0;
    double den = std::tgamma(alpha + 1.0) * std::tgamma(alpha + n + 1.0);
    return gamma_pair(alpha + 1.0 + 0.5 * n, 0.5 * kI * lambda) / den;
}

F32Symbol symbol_3f2(const SpaceParams& sp, double lambda) {
    const double n = sp.n, nu = sp.nu, m = sp.m;
    const cplx s = 0.5 * (n + kI * lambda);
    F32Symbol out;
    cplx total = 0.0;
    double tail = 0.0;
    for (int j = 0; j <= 2 * sp.m; ++j) {
        // C_j coefficient
        double pre_lg = std::lgamma(n + m) + std::lgamma(n + j) - std::lgamma(m + 1.0) -
                        std::lgamma(2 * nu - n - m + 1) - std::lgamma(2 * nu - n);
        double cj_pre = sp.beta_exponent() * ((j % 2) ? -1.0 : 1.0) * std::exp(pre_lg);
        double inner = 0.0;
        for (int p = std::max(0, j - sp.m); p <= std::min(sp.m, j); ++p) {
            double lg = 2.0 * std::lgamma(m + 1.0) + std::lgamma(2 * nu - m) +
                        std::lgamma(2 * nu - m + j - p) - std::lgamma(double(j - p + 1)) -
                        std::lgamma(double(m + p - j + 1)) - std::lgamma(double(p + 1)) -
                        std::lgamma(double(m - p + 1)) - std::lgamma(n + j - p) -
                        std::lgamma(n + p);
            inner += std::exp(lg);
        }
        double cj = cj_pre * inner;

        cplx gamma_ratio = std::exp(log_gamma(2.0 * (nu - m) - std::conj(s)) -
                                    log_gamma(2.0 * (nu - m) + double(j) + s));
        Hyp3F2Result f = hyp_3f2_unit(s, cplx(n + j), s,
                                      cplx(nu - m + j) + s, cplx(double(n)), {});
        total += cj * gamma_ratio * f.value;
        tail += std::abs(cj * gamma_ratio) * f.tail_estimate;
    }
    out.value = total;
    out.tail_estimate = tail;
    return out;
}

SymbolSample make_symbol_sample(const SpaceParams& sp, double lambda,
                                const AuditedConstants& audit, const QuadOptions& opts) {
    SymbolSample s;
    s.lambda = lambda;
    try {
        s.quad_value = c_const(sp) * spherical_transform_quad(sp, cplx(lambda), opts);
    } catch (const convergence_error&) {
        s.quad_value = std::nan(""); // row kept; caller signals the failure
    }
    s.wilson_value = symbol_wilson(sp, cplx(lambda), &audit);
    if (sp.m == 0) s.peetre_value = symbol_peetre(sp.nu, sp.n, cplx(lambda));
    F32Symbol f = symbol_3f2(sp, lambda);
    s.f32_value = f.value.real();
    s.f32_imag = f.value.imag();
    s.rel_gap_quad_wilson = std::abs(s.wilson_value - s.quad_value) /
                            std::max(1e-300, std::abs(s.quad_value));
    s.rel_gap_quad_f32 = std::abs(f.value - s.quad_value) /
                         std::max(1e-300, std::abs(s.quad_value));
    s.audit_scale = audit.scale;
    return s;
}

} // namespace bergman
