#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace bergman {

// Truncation control for the infinite hypergeometric sums.
struct SeriesControl {
    double rel_tol = 1e-14;
    std::int64_t max_terms = 100000;
    double tiny_threshold = 1e-300; // underflow guard

    constexpr bool valid() const { return rel_tol > 0.0 && max_terms >= 1; }
};

// Neumaier-compensated accumulator. Cancellation in the Wilson and
// linearization sums makes naive accumulation lose digits.
template <typename T>
class CompensatedSum {
public:
    void add(T term) {
        T t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_{};
    T comp_{};
};

template <typename T>
class CompensatedSum<std::complex<T>> {
public:
    void add(std::complex<T> term) {
        re_.add(term.real());
        im_.add(term.imag());
    }
    std::complex<T> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<T> re_;
    CompensatedSum<T> im_;
};

// x(x+1)...(x+k-1); empty product for k = 0. Overflow follows IEEE rules
// and is reported through the optional flag.
inline double pochhammer(double x, int k, bool* overflowed = nullptr) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (x + i);
    if (overflowed) *overflowed = !std::isfinite(r);
    return r;
}

inline std::complex<double> pochhammer(std::complex<double> x, int k) {
    std::complex<double> r = 1.0;
    for (int i = 0; i < k; ++i) r *= (x + double(i));
    return r;
}

inline bool is_nonpositive_integer(double x, double tol = 1e-12) {
    return x <= tol && std::abs(x - std::round(x)) < tol;
}

inline bool is_nonpositive_integer(std::complex<double> x, double tol = 1e-12) {
    return std::abs(x.imag()) < tol && is_nonpositive_integer(x.real(), tol);
}

} // namespace bergman
