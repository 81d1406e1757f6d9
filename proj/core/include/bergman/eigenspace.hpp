#pragma once

#include <complex>
#include <functional>

#include "bergman/ball.hpp"
#include "bergman/harmonic.hpp"
#include "bergman/space.hpp"

namespace bergman {

// Index (p, q, j) of a basis element: radial-spherical degree pair plus
// the position inside H(p,q); j is 0-based.
struct BasisIndex {
    int p;
    int q;
    int j;
};

// Orthonormal basis element: kappa (1-|z|^2)^{nu-m}
// P_{m-q}^{(n+p+q-1, 2(nu-m)-n)}(1-2|z|^2) h_{p,q}^j(z, conj z).
std::complex<double> phi_eval(const SpaceParams& sp, const BasisIndex& idx,
                              const BallPoint& z, BasisStore& store);

// Closed form of the reproducing kernel.
std::complex<double> kernel_closed(const SpaceParams& sp, const BallPoint& z,
                                   const BallPoint& w);

struct TruncatedKernel {
    std::complex<double> value;
    double tail_estimate = 0.0;
    int p_max = 0;
};

// Bilinear sum of basis elements up to radial degree p_max, with a
// geometric tail estimate from the last shells. Guarded to |z|,|w| <= 0.8.
TruncatedKernel kernel_truncated(const SpaceParams& sp, const BallPoint& z,
                                 const BallPoint& w, int p_max, BasisStore& store);

// |<z,nu,m | w,nu,m>|^2; equals 1 on the diagonal by construction.
double cs_overlap_abs2(const SpaceParams& sp, const BallPoint& z, const BallPoint& w);

// Poisson-kernel eigenfunction of the magnetic Schroedinger operator with
// eigenvalue lambda^2 + 4 nu^2 + n^2; first exponent (i lambda + n)/2.
std::complex<double> poisson_kernel(double nu, std::complex<double> lambda,
                                    const BallPoint& z,
                                    std::span<const std::complex<double>> theta);

using BallFn = std::function<std::complex<double>(const BallPoint&)>;

// Central second-difference application of the magnetic Schroedinger
// operator in the 2n real coordinates, Richardson-extrapolated over
// (h, h/2). At nu = 0 this is minus the Laplace-Beltrami operator.
std::complex<double> apply_H_fd(double nu, const BallFn& f, const BallPoint& z,
                                double h = 1e-3);

// Laplace-Beltrami application by the same stencil (eigenvalue
// -(lambda^2+n^2) on the spherical functions).
std::complex<double> apply_laplace_beltrami_fd(const BallFn& f, const BallPoint& z,
                                               double h = 1e-3);

} // namespace bergman
