#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bergman {

// Point of the open unit ball of C^n with its squared norm cached.
class BallPoint {
public:
    explicit BallPoint(std::vector<std::complex<double>> coords);

    static BallPoint origin(int n);

    int dim() const { return int(coords_.size()); }
    std::span<const std::complex<double>> coords() const { return coords_; }
    const std::complex<double>& operator[](size_t i) const { return coords_[i]; }
    double norm_sq() const { return norm_sq_; }

private:
    std::vector<std::complex<double>> coords_;
    double norm_sq_;
};

// sum_j z_j conj(w_j)
std::complex<double> hermitian_inner(const BallPoint& z, const BallPoint& w);

// Geodesic distance of the Bergman metric:
// cosh^2 d = |1-<z,w>|^2 / ((1-|z|^2)(1-|w|^2)).
double bergman_distance(const BallPoint& z, const BallPoint& w);

// Involutive automorphism phi_a with phi_a(0) = a and phi_a(a) = 0.
BallPoint mobius_involution(const BallPoint& a, const BallPoint& z);

} // namespace bergman
