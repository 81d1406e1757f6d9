#pragma once

#include <complex>

#include "bergman/series.hpp"

namespace bergman {

// Gauss 2F1(a,b;c;x) for real argument x < 1.
//
// Region map: direct series on [0,1); Pfaff transform to x/(x-1) on
// (-2,0); large-argument connection formula (two series in 1/x) for
// x <= -2. Terminating parameter sets are summed exactly for any x.
// The connection branch throws degenerate_parameter_error when a-b is
// an integer; callers apply the perturb-and-extrapolate policy.
std::complex<double> gauss_2f1(std::complex<double> a, std::complex<double> b,
                               std::complex<double> c, double x,
                               const SeriesControl& ctrl = {});

namespace detail {

// The three evaluation routes, exposed for the route-consistency tests.
std::complex<double> series_2f1(std::complex<double> a, std::complex<double> b,
                                std::complex<double> c, double x,
                                const SeriesControl& ctrl);
std::complex<double> pfaff_2f1(std::complex<double> a, std::complex<double> b,
                               std::complex<double> c, double x,
                               const SeriesControl& ctrl);
std::complex<double> connection_2f1(std::complex<double> a, std::complex<double> b,
                                    std::complex<double> c, double x,
                                    const SeriesControl& ctrl);

} // namespace detail

} // namespace bergman
