#pragma once

#include <array>
#include <cmath>

#include "bergman/errors.hpp"
#include "bergman/rational.hpp"
#include "bergman/series.hpp"

namespace bergman {

// Parameters of the F^{2:2}_{2:1} Kampe de Feriet double sum:
// two joint numerator parameters a, two separate numerator pairs (b, c),
// two joint denominator parameters d and one separate denominator per
// variable (kappa, rho). At least one entry of a must be a nonpositive
// integer so the double sum terminates.
template <typename T>
struct KampeParams2221 {
    std::array<T, 2> a;
    std::array<T, 2> b;
    std::array<T, 2> c;
    std::array<T, 2> d;
    T kappa;
    T rho;
};

namespace detail {

inline int termination_bound(double a) {
    return is_nonpositive_integer(a) ? -int(std::llround(a)) : -1;
}
inline int termination_bound(const Rational& a) {
    return is_nonpositive_integer(a) ? -int(numerator(a).convert_to<long long>()) : -1;
}

} // namespace detail

template <typename T>
T kampe_de_feriet_2221(const KampeParams2221<T>& p, const T& x, const T& y) {
    int bound = -1;
    for (const T& ai : p.a) {
        int t = detail::termination_bound(ai);
        if (t >= 0) bound = (bound < 0) ? t : std::min(bound, t);
    }
    if (bound < 0)
        throw nonterminating_error(
            "kampe_de_feriet_2221: no nonpositive-integer joint numerator parameter");

    T total = T(0);
    for (int q = 0; q <= bound; ++q) {
        for (int s = 0; q + s <= bound; ++s) {
            T num = pochhammer(p.a[0], q + s) * pochhammer(p.a[1], q + s) *
                    pochhammer(p.b[0], q) * pochhammer(p.b[1], q) *
                    pochhammer(p.c[0], s) * pochhammer(p.c[1], s);
            if (num == T(0)) continue;
            T den = pochhammer(p.d[0], q + s) * pochhammer(p.d[1], q + s) *
                    pochhammer(p.kappa, q) * pochhammer(p.rho, s);
            if (den == T(0))
                throw pole_error("kampe_de_feriet_2221: denominator pochhammer vanished");
            T xq = T(1), ys = T(1), qf = T(1), sf = T(1);
            for (int i = 0; i < q; ++i) { xq *= x; qf *= T(i + 1); }
            for (int i = 0; i < s; ++i) { ys *= y; sf *= T(i + 1); }
            total += num * xq * ys / (den * qf * sf);
        }
    }
    return total;
}

} // namespace bergman
