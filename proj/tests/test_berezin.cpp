#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bergman/berezin.hpp"
#include "bergman/errors.hpp"
#include "bergman/jacobi.hpp"
#include "bergman/quadrature.hpp"

using namespace bergman;
using cplx = std::complex<double>;

namespace {

double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

BallPoint rand_point(int n, double max_norm, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        std::vector<cplx> c(n);
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            c[j] = {u(rng), u(rng)};
            s += std::norm(c[j]);
        }
        if (s < max_norm * max_norm) return BallPoint(std::move(c));
    }
}

const ObservableFn kOne{[](const BallPoint&) { return 1.0; },
                        ObservableFn::Growth::bounded};

} // namespace

TEST_CASE("transform constant") {
    CHECK(c_const(SpaceParams(2, 2.0, 0)) == doctest::Approx(3.0).epsilon(1e-14));
    // m = 0 equality with the kernel-diagonal constant
    SpaceParams sp0(3, 4.25, 0);
    CHECK(c_const(sp0) == doctest::Approx(normalization_factor(sp0)).epsilon(1e-13));
    // c times the profile mass is one: closed Beta-form oracle
    for (auto [n, nu, m] : {std::tuple<int, double, int>{2, 3.5, 1}, {2, 2.0, 0}}) {
        SpaceParams sp(n, nu, m);
        QuadratureRule rule = gauss_jacobi_rule(48, n - 1.0, sp.beta_exponent() - 1.0);
        double mass = n * apply_rule(rule, [&](double t) {
            double pm = jacobi_eval_t<double>(m, n - 1.0, sp.beta_exponent(),
                                              1.0 - 2.0 * t);
            return pm * pm;
        });
        CHECK(c_const(sp) * mass == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("radial profile values") {
    SpaceParams sp(2, 3.5, 1);
    // at zero: square of the Jacobi value at 1
    double expected0 = std::pow(jacobi_at_one(1, 1.0), 2);
    CHECK(radial_profile(sp, 0.0) == doctest::Approx(expected0).epsilon(1e-14));
    CHECK(expected0 == doctest::Approx(4.0).epsilon(1e-14));
    // midpoint
    double pm0 = jacobi_eval(1, JacobiParams(1.0, sp.beta_exponent()), 0.0);
    CHECK(radial_profile(sp, 0.5) ==
          doctest::Approx(std::pow(0.5, 2.0 * (sp.nu - sp.m)) * pm0 * pm0).epsilon(1e-14));
    for (double t : {0.0, 0.3, 0.77, 0.97})
        CHECK(radial_profile(sp, t) >= 0.0);
    CHECK_THROWS_AS(radial_profile(sp, 1.0), std::domain_error);
}

TEST_CASE("berezin kernel symmetry and invariance") {
    SpaceParams sp(2, 3.5, 1);
    std::mt19937 rng(19);
    double diag_expected = c_const(sp) * std::pow(jacobi_at_one(1, 1.0), 2);
    for (int i = 0; i < 15; ++i) {
        BallPoint z = rand_point(2, 0.8, rng), w = rand_point(2, 0.8, rng);
        BallPoint a = rand_point(2, 0.6, rng);
        CHECK(berezin_kernel(sp, z, z) == doctest::Approx(diag_expected).epsilon(1e-12));
        CHECK(berezin_kernel(sp, z, w) ==
              doctest::Approx(berezin_kernel(sp, w, z)).epsilon(1e-12));
        double k1 = berezin_kernel(sp, z, w);
        double k2 = berezin_kernel(sp, mobius_involution(a, z), mobius_involution(a, w));
        CHECK(k2 == doctest::Approx(k1).epsilon(1e-11));
    }
}

TEST_CASE("B[1] = 1 and positivity") {
    for (auto [n, nu, m] : {std::tuple<int, double, int>{2, 3.5, 1}, {2, 2.0, 0}}) {
        SpaceParams sp(n, nu, m);
        for (const BallPoint& z :
             {BallPoint::origin(2), BallPoint({cplx(0.3, 0.0), 0.0}),
              BallPoint({cplx(0.0, 0.0), cplx(0.0, 0.5)})}) {
            BerezinResult r = berezin_apply(sp, kOne, z);
            CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
    // nonnegative observable -> nonnegative transform
    SpaceParams sp(2, 3.5, 1);
    ObservableFn pos{[](const BallPoint& w) { return std::abs(w[0].real()) + 0.1; },
                     ObservableFn::Growth::bounded};
    BerezinResult r = berezin_apply(sp, pos, BallPoint({cplx(0.2, 0.1), 0.0}));
    CHECK(r.value >= 0.0);
}

TEST_CASE("contraction on bounded observables") {
    SpaceParams sp(2, 3.5, 1);
    std::mt19937 rng(29);
    auto families = {
        ObservableFn{[](const BallPoint& w) { return std::sin(3.0 * w[0].real()); },
                     ObservableFn::Growth::bounded},
        ObservableFn{[](const BallPoint& w) { return std::exp(-2.0 * w.norm_sq()); },
                     ObservableFn::Growth::bounded},
        ObservableFn{[](const BallPoint& w) { return w[1].imag(); },
                     ObservableFn::Growth::bounded},
    };
    for (const ObservableFn& phi : families) {
        for (int i = 0; i < 3; ++i) {
            BallPoint z = rand_point(2, 0.6, rng);
            double v = berezin_apply(sp, phi, z).value;
            CHECK(std::abs(v) <= 1.0 + 1e-9); // sup|phi| <= 1 for all families
        }
    }
}

TEST_CASE("radial reduction at the origin") {
    SpaceParams sp(2, 3.5, 1);
    ObservableFn radial{[](const BallPoint& w) { return 1.0 / (1.0 + w.norm_sq()); },
                        ObservableFn::Growth::bounded};
    double full = berezin_apply(sp, radial, BallPoint::origin(2)).value;
    // 1D profile quadrature oracle
    AdaptiveResult r = integrate_weighted_adaptive(
        [&](double t) {
            double pm = jacobi_eval_t<double>(1, 1.0, sp.beta_exponent(), 1.0 - 2.0 * t);
            return pm * pm / (1.0 + t);
        },
        1.0, sp.beta_exponent() - 1.0, 1e-13, 48);
    double oneD = c_const(sp) * 2.0 * r.value;
    CHECK(full == doctest::Approx(oneD).epsilon(1e-10));
}

TEST_CASE("m0 specialization") {
    const double nu = 2.0;
    const int n = 2;
    SpaceParams sp(n, nu, 0);
    BallPoint z({cplx(0.25, -0.1), cplx(0.1, 0.0)});
    ObservableFn phi{[](const BallPoint& w) { return std::cos(w[0].real()) + 0.2; },
                     ObservableFn::Growth::bounded};
    double a = berezin_apply(sp, phi, z).value;
    double b = berezin_apply_m0(nu, n, phi, z).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    CHECK(berezin_apply_m0(nu, n, kOne, z).value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(berezin_apply_m0(0.9, 2, kOne, z), admissibility_error);

    // radial observable against the Beta-series oracle:
    // B[(1-|w|^2)](0) = c n B(n, 2 nu - n + 1)
    ObservableFn lin{[](const BallPoint& w) { return 1.0 - w.norm_sq(); },
                     ObservableFn::Growth::bounded};
    double got = berezin_apply_m0(nu, n, lin, BallPoint::origin(n)).value;
    double want = c_const(sp) * n * beta_fn(double(n), 2.0 * nu - n + 1.0);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("unbounded observables are rejected") {
    SpaceParams sp(2, 3.5, 1);
    ObservableFn bad{[](const BallPoint& w) { return 1.0 / (1.0 - w.norm_sq()); },
                     ObservableFn::Growth::unbounded};
    CHECK_THROWS_AS(berezin_apply(sp, bad, BallPoint::origin(2)), std::invalid_argument);
}

TEST_CASE("equivariance under an automorphism") {
    SpaceParams sp(2, 2.0, 0);
    ObservableFn phi{[](const BallPoint& w) {
                         return std::exp(-w.norm_sq()) * (1.0 + 0.4 * w[0].real());
                     },
                     ObservableFn::Growth::bounded};
    BallPoint z({cplx(0.15, 0.0), cplx(0.0, 0.1)});
    BallPoint a({cplx(0.25, 0.1), cplx(0.0, 0.0)});
    ObservableFn composed{
        [&](const BallPoint& w) { return phi.fn(mobius_involution(a, w)); },
        ObservableFn::Growth::bounded};
    double lhs = berezin_apply(sp, composed, z).value;
    double rhs = berezin_apply(sp, phi, mobius_involution(a, z)).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
}
