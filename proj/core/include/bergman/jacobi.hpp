#pragma once

#include <stdexcept>

#include "bergman/rational.hpp"

namespace bergman {

struct JacobiParams {
    double alpha;
    double beta;

    JacobiParams(double a, double b) : alpha(a), beta(b) {
        if (!(alpha > -1.0) || !(beta > -1.0))
            throw std::invalid_argument("JacobiParams: requires alpha > -1 and beta > -1");
    }
};

// P_m^{(alpha,beta)}(x) by the three-term recurrence. Works over the
// rationals as well, which is what makes the exact linearization oracle
// possible.
template <typename T>
T jacobi_eval_t(int m, const T& alpha, const T& beta, const T& x) {
    if (m == 0) return T(1);
    T pm1 = T(1);
    T p = alpha + T(1) + (alpha + beta + T(2)) * (x - T(1)) / T(2);
    for (int k = 2; k <= m; ++k) {
        T tk(k);
        T ab = alpha + beta;
        T c1 = T(2) * tk * (tk + ab) * (T(2) * tk + ab - T(2));
        T c2 = (T(2) * tk + ab - T(1)) * (alpha * alpha - beta * beta);
        T c3 = (T(2) * tk + ab - T(1)) * (T(2) * tk + ab) * (T(2) * tk + ab - T(2));
        T c4 = T(2) * (tk + alpha - T(1)) * (tk + beta - T(1)) * (T(2) * tk + ab);
        T pnext = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = pnext;
    }
    return p;
}

inline double jacobi_eval(int m, const JacobiParams& params, double x) {
    return jacobi_eval_t<double>(m, params.alpha, params.beta, x);
}

// P_m^{(alpha,beta)}(1) = (alpha+1)_m / m!
inline double jacobi_at_one(int m, double alpha) {
    double r = 1.0;
    for (int i = 1; i <= m; ++i) r *= (alpha + i) / i;
    return r;
}

inline Rational jacobi_at_one(int m, const Rational& alpha) {
    Rational r = 1;
    for (int i = 1; i <= m; ++i) r *= (alpha + i) / i;
    return r;
}

} // namespace bergman
