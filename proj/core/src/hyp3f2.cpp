#include "bergman/hyp3f2.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/errors.hpp"

namespace bergman {

using cplx = std::complex<double>;

Hyp3F2Result hyp_3f2_unit(cplx a1, cplx a2, cplx a3, cplx b1, cplx b2,
                          const SeriesControl& ctrl) {
    int nterm = -1;
    for (cplx a : {a1, a2, a3}) {
        if (is_nonpositive_integer(a)) {
            int d = -int(std::llround(a.real()));
            nterm = (nterm < 0) ? d : std::min(nterm, d);
        }
    }
    const double s = (b1 + b2 - a1 - a2 - a3).real();
    if (nterm < 0 && s <= 0.0)
        throw convergence_error("hyp_3f2_unit: divergent (parameter excess <= 0)");

    CompensatedSum<cplx> sum;
    cplx term = 1.0;
    sum.add(term);
    Hyp3F2Result out;
    std::int64_t k = 0;
    const std::int64_t limit = (nterm >= 0) ? nterm : ctrl.max_terms;
    for (; k < limit; ++k) {
        cplx den = (b1 + double(k)) * (b2 + double(k)) * double(k + 1);
        if (std::abs(den) == 0.0)
            throw pole_error("hyp_3f2_unit: denominator parameter pole");
        term *= (a1 + double(k)) * (a2 + double(k)) * (a3 + double(k)) / den;
        sum.add(term);
        if (nterm < 0 && k > 8) {
            // terms fall off like k^{-1-s}; Euler-Maclaurin tail
            double tail = std::abs(term) * (double(k) / s + 0.5);
            if (tail <= ctrl.rel_tol * std::abs(sum.value())) break;
        }
    }
    out.terms = k + 1;
    out.value = sum.value();
    if (nterm < 0) {
        double kk = double(std::max<std::int64_t>(k, 1));
        cplx tail = term * (kk / s - 0.5);
        out.value += tail;
        out.tail_estimate = std::abs(tail) * std::min(1.0, 4.0 / kk) +
                            std::abs(term) * 0.5;
    }
    return out;
}

} // namespace bergman
