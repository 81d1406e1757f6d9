#include "bergman/ball.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

BallPoint::BallPoint(std::vector<std::complex<double>> coords)
    : coords_(std::move(coords)) {
    double s = 0.0;
    for (const auto& c : coords_) s += std::norm(c);
    norm_sq_ = s;
    if (!(norm_sq_ < 1.0))
        throw std::domain_error("BallPoint: |z|^2 = " + std::to_string(norm_sq_) +
                                " not inside the open unit ball");
}

BallPoint BallPoint::origin(int n) {
    return BallPoint(std::vector<std::complex<double>>(size_t(n), 0.0));
}

std::complex<double> hermitian_inner(const BallPoint& z, const BallPoint& w) {
    std::complex<double> s = 0.0;
    for (int j = 0; j < z.dim(); ++j) s += z[j] * std::conj(w[j]);
    return s;
}

double bergman_distance(const BallPoint& z, const BallPoint& w) {
    std::complex<double> ip = hermitian_inner(z, w);
    double num = std::norm(1.0 - ip);
    double den = (1.0 - z.norm_sq()) * (1.0 - w.norm_sq());
    double cosh_sq = num / den;
    if (cosh_sq < 1.0 - 1e-12)
        throw std::domain_error("bergman_distance: cosh^2 argument below 1");
    if (cosh_sq < 1.0) cosh_sq = 1.0;
    return std::acosh(std::sqrt(cosh_sq));
}

BallPoint mobius_involution(const BallPoint& a, const BallPoint& z) {
    const int n = a.dim();
    if (a.norm_sq() == 0.0) {
        std::vector<std::complex<double>> neg(n);
        for (int j = 0; j < n; ++j) neg[j] = -z[j];
        return BallPoint(std::move(neg));
    }
    const std::complex<double> za = hermitian_inner(z, a);
    const double s = std::sqrt(1.0 - a.norm_sq());
    const std::complex<double> proj = za / a.norm_sq(); // P_a z = proj * a
    std::vector<std::complex<double>> out(n);
    for (int j = 0; j < n; ++j) {
        std::complex<double> pz = proj * a[j];
        std::complex<double> qz = z[j] - pz;
        out[j] = (a[j] - pz - s * qz) / (1.0 - za);
    }
    return BallPoint(std::move(out));
}

} // namespace bergman
