#include "bergman/eigenspace.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/errors.hpp"
#include "bergman/jacobi.hpp"

namespace bergman {

namespace {

// kernel constant (2(nu-m)-n) G(2nu-m) / (n! G(2nu-m-n+1))
double kernel_constant(const SpaceParams& sp) {
    double lg = std::lgamma(2 * sp.nu - sp.m) - std::lgamma(sp.n + 1.0) -
                std::lgamma(2 * sp.nu - sp.m - sp.n + 1);
    return sp.beta_exponent() * std::exp(lg);
}

} // namespace

std::complex<double> phi_eval(const SpaceParams& sp, const BasisIndex& idx,
                              const BallPoint& z, BasisStore& store) {
    if (idx.p < 0 || idx.q < 0 || idx.q > sp.m)
        throw admissibility_error("phi_eval: index (p,q) out of range");
    const CompiledHarmonicBasis& hb = store.compiled(idx.p, idx.q);
    if (idx.j < 0 || idx.j >= hb.dim())
        throw std::out_of_range("phi_eval: harmonic index j out of range");
    const double t = z.norm_sq();
    double radial = kappa_norm(sp, idx.p, idx.q) *
                    std::pow(1.0 - t, sp.nu - sp.m) *
                    jacobi_eval_t<double>(sp.m - idx.q, sp.n + idx.p + idx.q - 1.0,
                                          sp.beta_exponent(), 1.0 - 2.0 * t);
    return radial * hb.eval(idx.j, z.coords());
}

std::complex<double> kernel_closed(const SpaceParams& sp, const BallPoint& z,
                                   const BallPoint& w) {
    const std::complex<double> ip = hermitian_inner(z, w);
    const double cosh_sq =
        std::norm(1.0 - ip) / ((1.0 - z.norm_sq()) * (1.0 - w.norm_sq()));
    std::complex<double> phase = 1.0;
    if (std::abs(ip) > 0.0)
        phase = std::exp(sp.nu * (std::log(1.0 - std::conj(ip)) - std::log(1.0 - ip)));
    const double jac_arg = 2.0 / cosh_sq - 1.0; // 1 - 2 tanh^2 d
    return kernel_constant(sp) * phase * std::pow(cosh_sq, -(sp.nu - sp.m)) *
           jacobi_eval_t<double>(sp.m, sp.n - 1.0, sp.beta_exponent(), jac_arg);
}

TruncatedKernel kernel_truncated(const SpaceParams& sp, const BallPoint& z,
                                 const BallPoint& w, int p_max, BasisStore& store) {
    if (p_max < 0) throw std::invalid_argument("kernel_truncated: p_max >= 0");
    if (z.norm_sq() > 0.64 || w.norm_sq() > 0.64)
        throw std::domain_error("kernel_truncated: |z|,|w| <= 0.8 convergence guard");
    const double tz = z.norm_sq(), tw = w.norm_sq();
    const double pre_z = std::pow(1.0 - tz, sp.nu - sp.m);
    const double pre_w = std::pow(1.0 - tw, sp.nu - sp.m);

    std::complex<double> total = 0.0;
    double last_shell = 0.0, prev_shell = 0.0;
    for (int p = 0; p <= p_max; ++p) {
        std::complex<double> shell = 0.0;
        for (int q = 0; q <= sp.m; ++q) {
            const CompiledHarmonicBasis& hb = store.compiled(p, q);
            std::complex<double> zonal = 0.0;
            for (int j = 0; j < hb.dim(); ++j)
                zonal += hb.eval(j, z.coords()) * std::conj(hb.eval(j, w.coords()));
            const double alpha = sp.n + p + q - 1.0;
            double kap = kappa_norm(sp, p, q);
            double rad_z = jacobi_eval_t<double>(sp.m - q, alpha, sp.beta_exponent(),
                                                 1.0 - 2.0 * tz);
            double rad_w = jacobi_eval_t<double>(sp.m - q, alpha, sp.beta_exponent(),
                                                 1.0 - 2.0 * tw);
            shell += kap * kap * rad_z * rad_w * zonal;
        }
        total += pre_z * pre_w * shell;
        prev_shell = last_shell;
        last_shell = std::abs(pre_z * pre_w * shell);
    }
    TruncatedKernel out;
    out.value = total;
    out.p_max = p_max;
    if (prev_shell > 0.0 && last_shell < prev_shell) {
        double r = last_shell / prev_shell;
        out.tail_estimate = last_shell * r / (1.0 - r);
    } else {
        out.tail_estimate = last_shell;
    }
    return out;
}

double cs_overlap_abs2(const SpaceParams& sp, const BallPoint& z, const BallPoint& w) {
    const std::complex<double> ip = hermitian_inner(z, w);
    const double cosh_sq =
        std::norm(1.0 - ip) / ((1.0 - z.norm_sq()) * (1.0 - w.norm_sq()));
    const double jac_arg = 2.0 / cosh_sq - 1.0;
    double ratio = jacobi_eval_t<double>(sp.m, sp.n - 1.0, sp.beta_exponent(), jac_arg) /
                   jacobi_at_one(sp.m, sp.n - 1.0);
    return std::pow(cosh_sq, -2.0 * (sp.nu - sp.m)) * ratio * ratio;
}

std::complex<double> poisson_kernel(double nu, std::complex<double> lambda,
                                    const BallPoint& z,
                                    std::span<const std::complex<double>> theta) {
    if (int(theta.size()) != z.dim())
        throw std::invalid_argument("poisson_kernel: dimension mismatch");
    std::complex<double> ip = 0.0;
    for (int j = 0; j < z.dim(); ++j) ip += z[j] * std::conj(theta[j]);
    if (std::abs(1.0 - ip) < 1e-14)
        throw std::domain_error("poisson_kernel: singular at <z,theta> = 1");
    const int n = z.dim();
    std::complex<double> expo =
        0.5 * (std::complex<double>(0, 1) * lambda + double(n));
    double base = (1.0 - z.norm_sq()) / std::norm(1.0 - ip);
    std::complex<double> first = std::exp(expo * std::log(base));
    std::complex<double> second =
        std::exp(nu * (std::log(1.0 - std::conj(ip)) - std::log(1.0 - ip)));
    return first * second;
}

} // namespace bergman
