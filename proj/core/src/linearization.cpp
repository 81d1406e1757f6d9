#include "bergman/linearization.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "bergman/exact_linalg.hpp"

namespace bergman {

std::vector<Rational> linearization_coeffs_via_system_exact(int n, const Rational& nu, int m) {
    const int N = 2 * m + 1;
    const Rational e = Rational(2) * (nu - m);
    RatMatrix mat(N, std::vector<Rational>(N));
    std::vector<Rational> rhs(N);
    for (int i = 0; i < N; ++i) {
        Rational u = Rational(i - m, m + 1);
        for (int k = 0; k < N; ++k)
            mat[i][k] = jacobi_eval_t<Rational>(k, Rational(n - 1), e, u);
        Rational pm = jacobi_eval_t<Rational>(m, Rational(n - 1), e - n, u);
        rhs[i] = pm * pm;
    }
    return solve_exact(std::move(mat), std::move(rhs));
}

std::vector<double> linearization_coeffs_via_system(const SpaceParams& sp) {
    const int N = 2 * sp.m + 1;
    const double e = 2.0 * (sp.nu - sp.m);
    Eigen::MatrixXd mat(N, N);
    Eigen::VectorXd rhs(N);
    for (int i = 0; i < N; ++i) {
        double u = (N == 1) ? 0.3 : std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * N));
        for (int k = 0; k < N; ++k)
            mat(i, k) = jacobi_eval_t<double>(k, sp.n - 1.0, e, u);
        double pm = jacobi_eval_t<double>(sp.m, sp.n - 1.0, e - sp.n, u);
        rhs(i) = pm * pm;
    }
    Eigen::VectorXd x = mat.colPivHouseholderQr().solve(rhs);
    return std::vector<double>(x.data(), x.data() + N);
}

double linearization_residual(const SpaceParams& sp, std::span<const double> u_samples) {
    const std::vector<double> a = linearization_coeffs(sp);
    const double e = 2.0 * (sp.nu - sp.m);
    double worst = 0.0;
    for (double u : u_samples) {
        double pm = jacobi_eval_t<double>(sp.m, sp.n - 1.0, e - sp.n, u);
        double lhs = pm * pm;
        CompensatedSum<double> rhs;
        for (int k = 0; k <= 2 * sp.m; ++k)
            rhs.add(a[k] * jacobi_eval_t<double>(k, sp.n - 1.0, e, u));
        double err = std::abs(lhs - rhs.value()) / (1.0 + std::abs(lhs));
        worst = std::max(worst, err);
    }
    return worst;
}

} // namespace bergman
