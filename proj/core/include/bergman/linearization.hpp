#pragma once

#include <span>
#include <vector>

#include "bergman/jacobi.hpp"
#include "bergman/kampe.hpp"
#include "bergman/rational.hpp"
#include "bergman/space.hpp"

namespace bergman {

// Clebsch-Gordan linearization coefficients A_k, k = 0..2m, expanding the
// square of P_m^{(n-1, 2(nu-m)-n)} in the family P_k^{(n-1, 2(nu-m))}.
// Closed product form times a terminating Kampe de Feriet factor at
// unit arguments.
template <typename T>
std::vector<T> linearization_coeffs_t(int n, const T& nu, int m) {
    std::vector<T> out;
    out.reserve(2 * m + 1);
    const T e = T(2) * (nu - T(m)); // linearized-family beta parameter
    const T tn(n);
    for (int k = 0; k <= 2 * m; ++k) {
        T num = pochhammer(e + tn, k) * pochhammer(tn, 2 * m) *
                (T(2 * k) + e + tn) * T((k % 2) ? -1 : 1);
        T f2m = T(1);
        for (int i = 2; i <= 2 * m; ++i) f2m *= T(i);
        T p_e_2m = pochhammer(e, 2 * m);
        num *= f2m * p_e_2m * p_e_2m;

        T den = pochhammer(tn, k) * pochhammer(e + tn, 2 * m + k + 1);
        T fm = T(1);
        for (int i = 2; i <= m; ++i) fm *= T(i);
        T f2mk = T(1);
        for (int i = 2; i <= 2 * m - k; ++i) f2mk *= T(i);
        T p_e_m = pochhammer(e, m);
        den *= fm * fm * f2mk * p_e_m * p_e_m;

        KampeParams2221<T> kp{
            {T(-2 * m + k), -T(2) * nu - T(k) - tn},
            {T(-m), -tn - T(m) + T(1)},
            {T(-m), -T(m) - tn + T(1)},
            {T(-2 * m), T(-2 * m) - tn + T(1)},
            T(1) - T(2) * nu,
            T(1) - T(2) * nu,
        };
        out.push_back(num / den * kampe_de_feriet_2221(kp, T(1), T(1)));
    }
    return out;
}

std::vector<double> inline linearization_coeffs(const SpaceParams& sp) {
    return linearization_coeffs_t<double>(sp.n, sp.nu, sp.m);
}

std::vector<Rational> inline linearization_coeffs_exact(int n, const Rational& nu, int m) {
    return linearization_coeffs_t<Rational>(n, nu, m);
}

// Independent oracle: solve the (2m+1)x(2m+1) collocation system matching
// P_m^2 against the linearized family at distinct nodes. Exact over the
// rationals; this is the value of record the product-form route is
// checked against.
std::vector<Rational> linearization_coeffs_via_system_exact(int n, const Rational& nu, int m);

// Floating variant of the collocation oracle (for irrational nu).
std::vector<double> linearization_coeffs_via_system(const SpaceParams& sp);

// max over samples of |P_m^2(u) - sum_k A_k P_k(u)| / (1 + |P_m^2(u)|)
double linearization_residual(const SpaceParams& sp, std::span<const double> u_samples);

} // namespace bergman
