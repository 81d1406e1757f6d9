#include "bergman/hyp2f1.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bergman/errors.hpp"
#include "bergman/gamma.hpp"

namespace bergman {

namespace {

using cplx = std::complex<double>;

int terminating_degree(cplx a) {
    // degree of the polynomial when a is a nonpositive integer, else -1
    if (!is_nonpositive_integer(a)) return -1;
    return -int(std::llround(a.real()));
}

// Coefficient Gamma(c)Gamma(num)/(Gamma(d1)Gamma(d2)); zero when a
// denominator argument hits a pole.
cplx gamma_ratio(cplx c, cplx num, cplx d1, cplx d2) {
    if (is_nonpositive_integer(d1) || is_nonpositive_integer(d2)) return 0.0;
    return std::exp(log_gamma(c) + log_gamma(num) - log_gamma(d1) - log_gamma(d2));
}

} // namespace

namespace detail {

cplx series_2f1(cplx a, cplx b, cplx c, double y, const SeriesControl& ctrl) {
    const int na = terminating_degree(a);
    const int nb = terminating_degree(b);
    int nterm = -1;
    if (na >= 0 && nb >= 0) nterm = std::min(na, nb);
    else if (na >= 0) nterm = na;
    else if (nb >= 0) nterm = nb;

    CompensatedSum<cplx> sum;
    cplx term = 1.0;
    sum.add(term);
    std::int64_t limit = (nterm >= 0) ? nterm : ctrl.max_terms;
    int small_streak = 0;
    for (std::int64_t k = 0; k < limit; ++k) {
        cplx den = (c + double(k)) * double(k + 1);
        if (std::abs(den) == 0.0)
            throw pole_error("gauss_2f1: denominator parameter hit a nonpositive integer");
        term *= (a + double(k)) * (b + double(k)) * y / den;
        sum.add(term);
        if (nterm < 0) {
            double s = std::abs(sum.value());
            if (std::abs(term) <= ctrl.rel_tol * s || std::abs(term) < ctrl.tiny_threshold) {
                if (++small_streak >= 2) return sum.value();
            } else {
                small_streak = 0;
            }
        }
    }
    if (nterm < 0)
        throw convergence_error("gauss_2f1: series exceeded max_terms");
    return sum.value();
}

cplx pfaff_2f1(cplx a, cplx b, cplx c, double x, const SeriesControl& ctrl) {
    // 2F1(a,b;c;x) = (1-x)^{-b} 2F1(c-a, b; c; x/(x-1))
    double y = x / (x - 1.0);
    cplx pre = std::exp(-b * std::log(1.0 - x));
    return pre * series_2f1(c - a, b, c, y, ctrl);
}

cplx connection_2f1(cplx a, cplx b, cplx c, double x, const SeriesControl& ctrl) {
    cplx diff = a - b;
    if (std::abs(diff.imag()) < 1e-9 &&
        std::abs(diff.real() - std::round(diff.real())) < 1e-9)
        throw degenerate_parameter_error(
            "gauss_2f1: a-b integer in connection formula; perturb and extrapolate");
    double lx = std::log(-x);
    cplx c1 = gamma_ratio(c, b - a, b, c - a);
    cplx c2 = gamma_ratio(c, a - b, a, c - b);
    cplx t1 = (c1 == cplx(0.0))
                  ? cplx(0.0)
                  : c1 * std::exp(-a * lx) *
                        series_2f1(a, a - c + 1.0, a - b + 1.0, 1.0 / x, ctrl);
    cplx t2 = (c2 == cplx(0.0))
                  ? cplx(0.0)
                  : c2 * std::exp(-b * lx) *
                        series_2f1(b, b - c + 1.0, b - a + 1.0, 1.0 / x, ctrl);
    return t1 + t2;
}

} // namespace detail

cplx gauss_2f1(cplx a, cplx b, cplx c, double x, const SeriesControl& ctrl) {
    if (!(x < 1.0)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "gauss_2f1: argument %.17g not < 1", x);
        throw std::domain_error(buf);
    }
    if (terminating_degree(a) >= 0 || terminating_degree(b) >= 0 || x == 0.0)
        return detail::series_2f1(a, b, c, x, ctrl);
    if (x > 0.0) return detail::series_2f1(a, b, c, x, ctrl);
    if (x > -2.0) return detail::pfaff_2f1(a, b, c, x, ctrl);
    return detail::connection_2f1(a, b, c, x, ctrl);
}

} // namespace bergman
