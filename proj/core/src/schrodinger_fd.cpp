#include <cmath>
#include <stdexcept>
#include <vector>

#include "bergman/eigenspace.hpp"

namespace bergman {

namespace {

using cplx = std::complex<double>;

BallPoint shifted(const BallPoint& z, int coord, double delta) {
    std::vector<cplx> c(z.coords().begin(), z.coords().end());
    int j = coord / 2;
    if (coord % 2 == 0)
        c[j] += delta;
    else
        c[j] += cplx(0.0, delta);
    return BallPoint(std::move(c));
}

BallPoint shifted2(const BallPoint& z, int c1, double d1, int c2, double d2) {
    return shifted(shifted(z, c1, d1), c2, d2);
}

// one O(h^2) application of the operator
cplx apply_once(double nu, const BallFn& f, const BallPoint& z, double h) {
    const int n = z.dim();
    const int dims = 2 * n;
    const cplx f0 = f(z);
    const double h2 = h * h;

    std::vector<cplx> fp(dims), fm(dims);
    for (int r = 0; r < dims; ++r) {
        fp[r] = f(shifted(z, r, h));
        fm[r] = f(shifted(z, r, -h));
    }
    // second partials d2/dr2
    std::vector<cplx> d2(dims);
    for (int r = 0; r < dims; ++r) d2[r] = (fp[r] - 2.0 * f0 + fm[r]) / h2;
    // first partials
    std::vector<cplx> d1(dims);
    for (int r = 0; r < dims; ++r) d1[r] = (fp[r] - fm[r]) / (2.0 * h);
    // mixed partials (r < u)
    std::vector<std::vector<cplx>> dm(dims, std::vector<cplx>(dims));
    for (int r = 0; r < dims; ++r)
        for (int u = r + 1; u < dims; ++u) {
            cplx v = (f(shifted2(z, r, h, u, h)) + f(shifted2(z, r, -h, u, -h)) -
                      f(shifted2(z, r, h, u, -h)) - f(shifted2(z, r, -h, u, h))) /
                     (4.0 * h2);
            dm[r][u] = v;
            dm[u][r] = v;
        }
    auto dxx = [&](int i, int j) { return (i == j) ? d2[2 * i] : dm[2 * i][2 * j]; };
    auto dyy = [&](int i, int j) {
        return (i == j) ? d2[2 * i + 1] : dm[2 * i + 1][2 * j + 1];
    };
    auto dxy = [&](int i, int j) { return dm[2 * i][2 * j + 1]; };
    auto dyx = [&](int i, int j) { return dm[2 * i + 1][2 * j]; };

    // d^2/dz_i dzbar_j = (dxx + dyy + i(dxy - dyx))/4
    cplx a_term = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx ddbar = (dxx(i, j) + dyy(i, j) +
                          cplx(0, 1) * (dxy(i, j) - dyx(i, j))) /
                         4.0;
            cplx factor = (i == j ? 1.0 : 0.0) - z[i] * std::conj(z[j]);
            a_term += factor * ddbar;
        }
    // z_j d/dz_j - zbar_j d/dzbar_j = i (y_j d/dx_j - x_j d/dy_j)
    cplx b_term = 0.0;
    for (int j = 0; j < n; ++j)
        b_term += cplx(0, 1) *
                  (z[j].imag() * d1[2 * j] - z[j].real() * d1[2 * j + 1]);

    const double one_minus = 1.0 - z.norm_sq();
    return -4.0 * one_minus * (a_term + nu * b_term + nu * nu * f0) +
           4.0 * nu * nu * f0;
}

} // namespace

std::complex<double> apply_H_fd(double nu, const BallFn& f, const BallPoint& z,
                                double h) {
    if (!(h > 0.0)) throw std::invalid_argument("apply_H_fd: h > 0 required");
    if (std::sqrt(z.norm_sq()) + 4.0 * h >= 1.0)
        throw std::domain_error("apply_H_fd: point too close to the boundary for step h");
    cplx coarse = apply_once(nu, f, z, h);
    cplx fine = apply_once(nu, f, z, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

std::complex<double> apply_laplace_beltrami_fd(const BallFn& f, const BallPoint& z,
                                               double h) {
    return -apply_H_fd(0.0, f, z, h);
}

} // namespace bergman
