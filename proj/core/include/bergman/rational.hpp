#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bergman {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

// Rising factorial over the rationals.
inline Rational pochhammer(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= (x + i);
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

inline bool is_nonpositive_integer(const Rational& x) {
    return denominator(x) == 1 && numerator(x) <= 0;
}

} // namespace bergman
