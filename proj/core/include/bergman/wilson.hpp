#pragma once

#include "bergman/errors.hpp"
#include "bergman/rational.hpp"

namespace bergman {

struct WilsonParams {
    double a, b, c, d;
};

// Wilson polynomial W_k(t; a,b,c,d), with t standing for x^2 in the
// usual 4F3 form. The factors (a+ix)_j (a-ix)_j combine into the real
// products prod_l ((a+l)^2 + t), so negative t is plain polynomial
// continuation.
template <typename T>
T wilson_eval_t(int k, const T& t, const T& a, const T& b, const T& c, const T& d) {
    T pre = T(1);
    for (int i = 0; i < k; ++i) pre *= (a + b + i) * (a + c + i) * (a + d + i);
    T sum = T(1);
    T term = T(1);
    const T s = a + b + c + d - T(1);
    for (int j = 0; j < k; ++j) {
        T den = (a + b + j) * (a + c + j) * (a + d + j) * T(j + 1);
        if (den == T(0)) throw pole_error("wilson_eval: parameter sum hit a pole");
        term *= T(-(k - j)) * (s + T(k + j)) * ((a + j) * (a + j) + t) / den;
        sum += term;
    }
    return pre * sum;
}

inline double wilson_eval(int k, double t, const WilsonParams& p) {
    return wilson_eval_t<double>(k, t, p.a, p.b, p.c, p.d);
}

} // namespace bergman
