#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bergman/berezin.hpp"
#include "bergman/eigenspace.hpp"
#include "bergman/errors.hpp"
#include "bergman/gamma.hpp"
#include "bergman/spectral.hpp"
#include "bergman/sweep.hpp"

using namespace bergman;
using cplx = std::complex<double>;

TEST_CASE("spherical function normalization and evenness") {
    BallPoint z({cplx(0.31, 0.17), cplx(-0.12, 0.23)});
    CHECK(spherical_function(2, {0.9, 0.0}, BallPoint::origin(2)).real() ==
          doctest::Approx(1.0).epsilon(1e-15));
    for (double lam : {0.4, 1.7, 6.0}) {
        cplx a = spherical_function(2, {lam, 0.0}, z);
        cplx b = spherical_function(2, {-lam, 0.0}, z);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
        CHECK(a.imag() == 0.0);
    }
}

TEST_CASE("spherical function eigenvalue under the invariant Laplacian") {
    const double lam = 0.7;
    const int n = 2;
    BallPoint z({cplx(0.2, 0.1), cplx(0.0, 0.15)});
    BallFn f = [&](const BallPoint& w) { return spherical_function(n, {lam, 0.0}, w); };
    cplx lhs = apply_laplace_beltrami_fd(f, z);
    cplx expected = -(lam * lam + n * n) * f(z);
    CHECK(std::abs(lhs - expected) <= 1e-5 * std::abs(expected));
}

TEST_CASE("transform quadrature at the constant-eigenfunction point") {
    // lambda = -i n makes the hypergeometric factor terminate to 1, so the
    // transform is the profile mass 1/c
    for (auto [n, nu, m] : {std::tuple<int, double, int>{2, 2.0, 0}, {2, 3.5, 1}}) {
        SpaceParams sp(n, nu, m);
        double v = spherical_transform_quad(sp, cplx(0.0, -double(n)));
        CHECK(v == doctest::Approx(1.0 / c_const(sp)).epsilon(1e-10));
    }
}

TEST_CASE("transform quadrature evenness and positivity") {
    SpaceParams sp(2, 3.5, 1);
    for (double lam : {0.5, 1.0, 2.0, 5.0}) {
        double a = spherical_transform_quad(sp, {lam, 0.0});
        double b = spherical_transform_quad(sp, {-lam, 0.0});
        CHECK(a == doctest::Approx(b).epsilon(1e-11));
        CHECK(a > 0.0);
    }
    // lambda = 0 goes through the perturbation policy
    double v0 = spherical_transform_quad(sp, {0.0, 0.0});
    double veps = spherical_transform_quad(sp, {1e-4, 0.0});
    CHECK(v0 == doctest::Approx(veps).epsilon(1e-7));
}

TEST_CASE("transform quadrature is stable under tolerance halving") {
    SpaceParams sp(2, 3.5, 1);
    for (double lam : {0.5, 2.0}) {
        QuadOptions coarse{1e-9, 48}, fine{5e-10, 48};
        double a = spherical_transform_quad(sp, {lam, 0.0}, coarse);
        double b = spherical_transform_quad(sp, {lam, 0.0}, fine);
        CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
    }
}

TEST_CASE("Gamma-Wilson identity: k = 0 Gamma-product case") {
    // delta = mu' reduces the Wilson b-parameter branch to a pure Gamma
    // comparison at k = 0
    KoornwinderParams kp{1.0, 0.0, 2.0, 2.0};
    double lhs = koornwinder_integral_quad(kp, 0, 1.5);
    double rhs = koornwinder_rhs(kp, 0, 1.5, ConstantsMode::audited);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
}

TEST_CASE("Gamma-Wilson identity: general parameters") {
    KoornwinderParams kp{1.0, 0.0, 3.0, 2.5};
    for (int k : {0, 1, 2}) {
        double lhs = koornwinder_integral_quad(kp, k, 1.2);
        double rhs = koornwinder_rhs(kp, k, 1.2, ConstantsMode::audited);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
        // literal transcription doubles the value
        CHECK(koornwinder_rhs(kp, k, 1.2, ConstantsMode::literal) ==
              doctest::Approx(2.0 * rhs).epsilon(1e-14));
    }
    CHECK_THROWS_AS(koornwinder_integral_quad({-1.5, 0.0, 1.0, 1.0}, 0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("closed transform integrals against their quadrature") {
    SpaceParams sp(2, 3.5, 1);
    const double e = 2.0 * (sp.nu - sp.m);
    for (int k : {0, 1, 2}) {
        // quadrature route: linearized-family radial integral
        KoornwinderParams kp{sp.n - 1.0, 0.0, e, e - sp.n - 1.0};
        double quad = 2.0 * sp.n * koornwinder_integral_quad(kp, k, 1.0);
        double closed = i_k_closed(sp, k, 1.0, 1.0 + 0.5 * sp.n, ConstantsMode::audited);
        CHECK(quad == doctest::Approx(closed).epsilon(1e-7));
        // evenness in lambda
        CHECK(i_k_closed(sp, k, -2.3, 2.0, ConstantsMode::audited) ==
              doctest::Approx(i_k_closed(sp, k, 2.3, 2.0, ConstantsMode::audited))
                  .epsilon(1e-14));
    }
    // k = 0 reduces to the pure Gamma form
    double expected0 = 0.5 * 2.0 * sp.n * std::tgamma(double(sp.n)) /
                       std::pow(std::tgamma(e), 2) *
                       gamma_abs_sq(e - 0.5 * sp.n, 0.5);
    CHECK(i_k_closed(sp, 0, 1.0, 2.0, ConstantsMode::audited) ==
          doctest::Approx(expected0).epsilon(1e-13));
}

TEST_CASE("gamma coefficients: literal value and reference coefficient") {
    SpaceParams sp(2, 2.0, 0);
    auto g = gamma_coeffs(sp);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    // the inverse-Gamma-product coefficient of the m = 0 closed form
    double peetre_coeff = 1.0 / (std::tgamma(2.0) * std::tgamma(4.0));
    CHECK(peetre_coeff == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(g[0] == doctest::Approx(2.0 * peetre_coeff).epsilon(1e-13));
}

TEST_CASE("Wilson symbol reduces to the inverse-Gamma form at m = 0") {
    SpaceParams sp(2, 2.0, 0);
    AuditedConstants audit{0.5, 1.0 + 0.5 * sp.n, 0.0};
    for (double lam : {0.0, 1.0, 3.0}) {
        double w = symbol_wilson(sp, {lam, 0.0}, &audit);
        double p = symbol_peetre(sp.nu, sp.n, {lam, 0.0});
        CHECK(w == doctest::Approx(p).epsilon(1e-10));
    }
}

TEST_CASE("symbol fixes constants: value one on constant eigenfunctions") {
    for (auto [n, nu, m] : {std::tuple<int, double, int>{2, 2.0, 0}, {2, 3.5, 1},
                            {3, 4.25, 1}}) {
        SpaceParams sp(n, nu, m);
        AuditedConstants audit{0.5, 1.0 + 0.5 * n, 0.0};
        // lambda^2 = -n^2 is the transform argument of constants
        double v = symbol_wilson(sp, cplx(0.0, -double(n)), &audit);
        CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
        double p = symbol_peetre(nu, n, cplx(0.0, -double(n)));
        CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("peetre symbol closed values") {
    CHECK(symbol_peetre(2.0, 2, {0.0, 0.0}) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    for (double lam : {0.7, 2.2}) {
        CHECK(symbol_peetre(2.0, 2, {lam, 0.0}) ==
              doctest::Approx(symbol_peetre(2.0, 2, {-lam, 0.0})).epsilon(1e-13));
    }
}

TEST_CASE("diagnostic hypergeometric-sum form is recorded, not asserted") {
    SpaceParams sp(2, 3.5, 1);
    F32Symbol f = symbol_3f2(sp, 1.0);
    CHECK(std::isfinite(f.value.real()));
    CHECK(std::isfinite(f.value.imag()));
    SymbolSample s = make_symbol_sample(sp, 1.0, AuditedConstants{0.5, 2.0, 0.0});
    CHECK(s.f32_value.has_value());
    CHECK(std::isfinite(s.rel_gap_quad_f32));
}

TEST_CASE("constant audit decides scale and parameterization") {
    const double grid[4] = {0.5, 1.0, 2.0, 5.0};
    for (auto [n, nu, m] : {std::tuple<int, double, int>{2, 2.0, 0}, {2, 3.5, 1}}) {
        SpaceParams sp(n, nu, m);
        ConstantAuditReport rep = constant_audit(sp, grid);
        CHECK(rep.passed);
        CHECK(rep.constants.residual <= 1e-8);
        CHECK(rep.constants.wilson_b == doctest::Approx(1.0 + 0.5 * n));
        CHECK(rep.constants.scale == doctest::Approx(0.5).epsilon(1e-8));
        CHECK(!rep.to_text().empty());

        // idempotence: fitting the audited values against the oracle
        // returns scale one
        double num = 0.0, den = 0.0;
        for (double lam : grid) {
            double oracle = c_const(sp) * spherical_transform_quad(sp, {lam, 0.0});
            double audited = symbol_wilson(sp, {lam, 0.0}, &rep.constants);
            num += audited * oracle;
            den += audited * audited;
        }
        CHECK(num / den == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(constant_audit(SpaceParams(2, 3.5, 1), std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("oracle chain: audited symbol equals the quadrature symbol") {
    SpaceParams sp(2, 3.5, 2);
    const double grid[4] = {0.5, 1.0, 2.0, 5.0};
    ConstantAuditReport rep = constant_audit(sp, grid);
    for (double lam : grid) {
        double quad = c_const(sp) * spherical_transform_quad(sp, {lam, 0.0});
        double wil = symbol_wilson(sp, {lam, 0.0}, &rep.constants);
        CHECK(wil == doctest::Approx(quad).epsilon(1e-8));
    }
}

TEST_CASE("symbol sweep and CSV emission") {
    SpaceParams sp(2, 2.0, 0);
    std::vector<double> grid{0.0, 0.5, 1.0};
    SymbolSweep sweep = run_symbol_sweep(sp, grid, ConstantsMode::audited, 2);
    REQUIRE(sweep.samples.size() == 3);
    CHECK(sweep.samples[0].lambda == 0.0);
    // peetre column at lambda = 0 for (2, 2, 0)
    REQUIRE(sweep.samples[0].peetre_value.has_value());
    CHECK(*sweep.samples[0].peetre_value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    for (const SymbolSample& s : sweep.samples)
        CHECK(s.rel_gap_quad_wilson <= 1e-8);

    std::ostringstream os;
    write_symbol_csv(os, sweep);
    std::string text = os.str();
    CHECK(text.rfind("lambda,quad,wilson,peetre,f32,rel_gap,audit_scale\n", 0) == 0);
    CHECK(text.find("0.66666666666666") != std::string::npos);

    // determinism: a second sweep with a different thread count is
    // byte-identical
    SymbolSweep sweep1 = run_symbol_sweep(sp, grid, ConstantsMode::audited, 1);
    std::ostringstream os1;
    write_symbol_csv(os1, sweep1);
    CHECK(os1.str() == text);
}
