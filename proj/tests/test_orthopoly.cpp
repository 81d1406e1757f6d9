#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "bergman/hyp2f1.hpp"
#include "bergman/jacobi.hpp"
#include "bergman/linearization.hpp"
#include "bergman/wilson.hpp"

using namespace bergman;

namespace {

// hypergeometric representation oracle, exact over the rationals so the
// alternating terminating sum carries no cancellation error:
// P_m^{(a,b)}(x) = (a+1)_m / m! * 2F1(-m, m+a+b+1; a+1; (1-x)/2)
Rational jacobi_via_2f1_exact(int m, const Rational& a, const Rational& b,
                              const Rational& x) {
    Rational pre = jacobi_at_one(m, a);
    Rational y = (Rational(1) - x) / 2;
    Rational sum = 1, term = 1;
    for (int k = 0; k < m; ++k) {
        term *= Rational(-(m - k)) * (a + b + m + 1 + k) * y /
                ((a + 1 + k) * Rational(k + 1));
        sum += term;
    }
    return pre * sum;
}

} // namespace

TEST_CASE("JacobiParams validates") {
    CHECK_THROWS_AS(JacobiParams(-1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(JacobiParams(0.0, -1.5), std::invalid_argument);
    JacobiParams ok(1.0, 2.0);
    CHECK(ok.alpha == 1.0);
}

TEST_CASE("jacobi_eval examples") {
    CHECK(jacobi_eval(0, JacobiParams(3.0, 0.25), 0.77) == 1.0);
    // degree one: (alpha+1) + (alpha+beta+2)(x-1)/2
    CHECK(jacobi_eval(1, JacobiParams(1.0, 2.0), 0.0) ==
          doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(jacobi_eval(2, JacobiParams(1.0, 0.5), 1.0) ==
          doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("jacobi_at_one gamma-ratio values") {
    CHECK(jacobi_at_one(0, 7.3) == 1.0);
    CHECK(jacobi_at_one(2, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(jacobi_at_one(3, 2.0) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("jacobi recurrence matches the 2F1 representation") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> ua(-7, 32), ux(-15, 15);
    for (int trial = 0; trial < 120; ++trial) {
        int m = trial % 21;
        Rational a(ua(rng), 8), b(ua(rng), 8), x(ux(rng), 16);
        double rec = jacobi_eval_t<double>(m, to_double(a), to_double(b), to_double(x));
        double hyp = to_double(jacobi_via_2f1_exact(m, a, b, x));
        CHECK(rec == doctest::Approx(hyp).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("jacobi rational mode equals floating mode") {
    Rational a(3, 2), b(5, 1);
    for (int m : {0, 1, 3, 7}) {
        Rational x(-2, 5);
        double exact = to_double(jacobi_eval_t<Rational>(m, a, b, x));
        double fl = jacobi_eval_t<double>(m, 1.5, 5.0, -0.4);
        CHECK(exact == doctest::Approx(fl).epsilon(1e-13));
    }
}

TEST_CASE("wilson_eval basics") {
    WilsonParams p{0.5, 0.5, 0.5, 0.5};
    CHECK(wilson_eval(0, -3.7, p) == 1.0);
    // W_1(t) = (a+b)(a+c)(a+d) - (a+b+c+d)(a^2+t)
    double expected = 1.0 * 1.0 * 1.0 - 2.0 * (0.25 + 0.0);
    CHECK(wilson_eval(1, 0.0, p) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(wilson_eval(1, 0.0, p) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("wilson parameter symmetry under all permutations") {
    std::array<double, 4> base{1.25, 2.0, 0.75, 1.5};
    std::array<int, 4> idx{0, 1, 2, 3};
    for (int k : {1, 2, 3}) {
        for (double t : {-2.0, -0.3, 0.0, 1.7, 9.0}) {
            double ref = wilson_eval(k, t, {base[0], base[1], base[2], base[3]});
            std::array<int, 4> perm = idx;
            do {
                WilsonParams p{base[perm[0]], base[perm[1]], base[perm[2]], base[perm[3]]};
                double v = wilson_eval(k, t, p);
                CHECK(v == doctest::Approx(ref).epsilon(1e-12));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("wilson rational mode agrees with floating mode") {
    Rational a(5, 4), b(2, 1), c(3, 4), d(3, 2);
    for (int k : {0, 1, 2, 3}) {
        Rational t(-7, 3);
        double exact = to_double(wilson_eval_t<Rational>(k, t, a, b, c, d));
        double fl = wilson_eval(k, -7.0 / 3.0, {1.25, 2.0, 0.75, 1.5});
        CHECK(exact == doctest::Approx(fl).epsilon(1e-13));
    }
}

TEST_CASE("linearization coefficients against the collocation oracle") {
    // m = 0 collapses to the single coefficient 1
    CHECK(linearization_coeffs(SpaceParams(2, 3.5, 0)) == std::vector<double>{1.0});

    for (auto [n, num, den, m] :
         {std::tuple<int, long long, long long, int>{2, 7, 2, 1},
          {2, 4, 1, 2},
          {3, 17, 4, 1},
          {4, 6, 1, 2}}) {
        Rational nu(num, den);
        auto closed_form = linearization_coeffs_exact(n, nu, m);
        auto oracle = linearization_coeffs_via_system_exact(n, nu, m);
        REQUIRE(closed_form.size() == oracle.size());
        for (size_t k = 0; k < oracle.size(); ++k) CHECK(closed_form[k] == oracle[k]);

        SpaceParams sp(n, double(num) / double(den), m);
        auto dbl = linearization_coeffs(sp);
        auto dbl_oracle = linearization_coeffs_via_system(sp);
        for (size_t k = 0; k < dbl.size(); ++k)
            CHECK(dbl[k] == doctest::Approx(dbl_oracle[k]).epsilon(1e-11));
        // rational and floating routes agree
        for (size_t k = 0; k < dbl.size(); ++k)
            CHECK(dbl[k] == doctest::Approx(to_double(closed_form[k])).epsilon(1e-13));
    }
}

TEST_CASE("linearization sum rule at the right endpoint") {
    for (auto [n, nu, m] : {std::tuple<int, double, int>{2, 3.5, 1}, {2, 4.0, 2},
                            {3, 4.25, 1}}) {
        SpaceParams sp(n, nu, m);
        auto a = linearization_coeffs(sp);
        double lhs = 0.0;
        for (int k = 0; k <= 2 * m; ++k) lhs += a[k] * jacobi_at_one(k, n - 1.0);
        double rhs = jacobi_at_one(m, n - 1.0) * jacobi_at_one(m, n - 1.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("linearization residual on Chebyshev points") {
    std::vector<double> cheb11(11), cheb15(15);
    for (int i = 0; i < 11; ++i) cheb11[i] = std::cos(M_PI * (2.0 * i + 1.0) / 22.0);
    for (int i = 0; i < 15; ++i) cheb15[i] = std::cos(M_PI * (2.0 * i + 1.0) / 30.0);

    CHECK(linearization_residual(SpaceParams(2, 3.5, 0), cheb11) == 0.0);
    CHECK(linearization_residual(SpaceParams(2, 3.5, 1), cheb11) < 1e-12);
    CHECK(linearization_residual(SpaceParams(2, 4.0, 2), cheb15) < 1e-11);
}

TEST_CASE("linearization exact mode is exact in rational arithmetic") {
    // identity holds at rational nodes with zero residual
    Rational nu(7, 2);
    auto a = linearization_coeffs_exact(2, nu, 1);
    Rational e = Rational(2) * (nu - 1);
    for (Rational u : {Rational(-1, 3), Rational(0), Rational(37, 100)}) {
        Rational pm = jacobi_eval_t<Rational>(1, Rational(1), e - 2, u);
        Rational lhs = pm * pm;
        Rational rhs = 0;
        for (int k = 0; k <= 2; ++k)
            rhs += a[k] * jacobi_eval_t<Rational>(k, Rational(1), e, u);
        CHECK(lhs == rhs);
    }
}
