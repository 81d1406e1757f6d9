#include <cmath>
#include <cstdio>
#include <sstream>

#include "bergman/berezin.hpp"
#include "bergman/errors.hpp"
#include "bergman/jacobi.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/space.hpp"
#include "bergman/spectral.hpp"

namespace bergman {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Fit {
    double scale = 0.0;
    double residual = 0.0;
};

Fit fit_scale(const std::vector<double>& literal, const std::vector<double>& oracle) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < literal.size(); ++i) {
        num += literal[i] * oracle[i];
        den += literal[i] * literal[i];
    }
    Fit fit;
    fit.scale = num / den;
    for (size_t i = 0; i < literal.size(); ++i) {
        double rel = std::abs(fit.scale * literal[i] - oracle[i]) /
                     std::max(1e-300, std::abs(oracle[i]));
        fit.residual = std::max(fit.residual, rel);
    }
    return fit;
}

} // namespace

double kappa_diagonal_deviation(const SpaceParams& sp, int p_max) {
    // angular part exact by orthonormality; radial integrand is
    // polynomial, integrated exactly by a 64-point Gauss-Jacobi rule
    QuadratureRule rule = gauss_jacobi_rule(64, sp.n - 1.0, sp.beta_exponent() - 1.0);
    double worst = 0.0;
    for (int p = 0; p <= p_max; ++p)
        for (int q = 0; q <= sp.m; ++q) {
            double kap = kappa_norm(sp, p, q);
            double alpha = sp.n + p + q - 1.0;
            auto f = [&](double t) {
                double pj = jacobi_eval_t<double>(sp.m - q, alpha, sp.beta_exponent(),
                                                  1.0 - 2.0 * t);
                double tp = std::pow(t, double(p + q));
                return tp * pj * pj;
            };
            double diag = kap * kap * sp.n * apply_rule(rule, f);
            worst = std::max(worst, std::abs(diag - 1.0));
        }
    return worst;
}

ConstantAuditReport constant_audit(const SpaceParams& sp,
                                   std::span<const double> lambda_grid,
                                   const QuadOptions& opts) {
    if (lambda_grid.size() < 4)
        throw std::invalid_argument("constant_audit: grid of >= 4 lambda values required");

    ConstantAuditReport report{sp, {lambda_grid.begin(), lambda_grid.end()}, {}, 0, 0,
                               {}, {}, {}, 0.0, false};
    const double c = c_const(sp);
    std::vector<double> oracle;
    oracle.reserve(lambda_grid.size());
    for (double lam : lambda_grid)
        oracle.push_back(c * spherical_transform_quad(sp, {lam, 0.0}, opts));

    const double b_candidates[2] = {1.0 + 0.5 * sp.n, 1.0 - 0.5 * sp.n};
    Fit fits[2];
    for (int ci = 0; ci < 2; ++ci) {
        std::vector<double> literal;
        literal.reserve(lambda_grid.size());
        AuditedConstants probe{1.0, b_candidates[ci], 0.0};
        for (double lam : lambda_grid)
            literal.push_back(symbol_wilson(sp, {lam, 0.0}, &probe));
        fits[ci] = fit_scale(literal, oracle);
    }
    const int best = (fits[0].residual <= fits[1].residual) ? 0 : 1;
    if (fits[best].residual > 1e-6)
        throw convergence_error(
            "constant_audit: no Wilson parameterization reaches residual 1e-6 "
            "(implementation bug, the oracle is parameter-free)");

    report.constants.scale = fits[best].scale;
    report.constants.wilson_b = b_candidates[best];
    report.constants.residual = fits[best].residual;
    report.rejected_b = b_candidates[1 - best];
    report.rejected_residual = fits[1 - best].residual;
    report.gamma_literal = gamma_coeffs(sp);
    report.gamma_audited = report.gamma_literal;
    for (double& g : report.gamma_audited) g *= report.constants.scale;
    if (sp.m == 0) {
        double den = std::tgamma(2.0 * sp.nu - sp.n) * std::tgamma(2.0 * sp.nu);
        report.peetre_coeff_m0 = 1.0 / den;
    }
    report.kappa_diag_deviation = kappa_diagonal_deviation(sp, 3);
    report.passed = report.constants.residual <= 1e-8;
    return report;
}

std::string ConstantAuditReport::to_text() const {
    std::ostringstream os;
    os << "constant audit: n=" << params.n << " nu=" << fmt17(params.nu)
       << " m=" << params.m << "\n";
    os << "  lambda grid:";
    for (double l : lambda_grid) os << " " << fmt17(l);
    os << "\n";
    os << "  chosen Wilson b = " << fmt17(constants.wilson_b)
       << "   (rejected b = " << fmt17(rejected_b)
       << ", residual " << fmt17(rejected_residual) << ")\n";
    os << "  fitted scale s = " << fmt17(constants.scale) << "\n";
    os << "  post-fit residual = " << fmt17(constants.residual)
       << (passed ? "   [PASS <= 1e-8]" : "   [FAIL > 1e-8]") << "\n";
    os << "  gamma_k literal vs audited:\n";
    for (size_t k = 0; k < gamma_literal.size(); ++k)
        os << "    k=" << k << "  " << fmt17(gamma_literal[k]) << "  ->  "
           << fmt17(gamma_audited[k]) << "\n";
    if (peetre_coeff_m0)
        os << "  m=0 reference coefficient (inverse Gamma product): "
           << fmt17(*peetre_coeff_m0) << "\n";
    os << "  Gram diagonal deviation (p <= 3): " << fmt17(kappa_diag_deviation) << "\n";
    return os.str();
}

} // namespace bergman
