#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <filesystem>
#include <random>

#include "bergman/errors.hpp"
#include "bergman/exact_linalg.hpp"
#include "bergman/harmonic.hpp"

using namespace bergman;
using cplx = std::complex<double>;

namespace {

MultiIndex mi(std::vector<int> e) { return MultiIndex{std::move(e)}; }

std::vector<cplx> random_sphere_point(int n, std::mt19937& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> c(n);
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
        c[j] = {g(rng), g(rng)};
        s += std::norm(c[j]);
    }
    for (auto& x : c) x /= std::sqrt(s);
    return c;
}

// Monte-Carlo oracle for the sphere monomial integral
double mc_sphere_integral(const MultiIndex& alpha, const MultiIndex& beta,
                          int samples, unsigned seed) {
    std::mt19937 rng(seed);
    const int n = int(alpha.size());
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) {
        auto theta = random_sphere_point(n, rng);
        cplx v = 1.0;
        for (int j = 0; j < n; ++j) {
            for (int e = 0; e < alpha[j]; ++e) v *= theta[j];
            for (int e = 0; e < beta[j]; ++e) v *= std::conj(theta[j]);
        }
        acc += v.real();
    }
    return acc / samples;
}

} // namespace

TEST_CASE("harmonic_dimension closed form") {
    CHECK(harmonic_dimension(2, 0, 0) == 1);
    CHECK(harmonic_dimension(5, 0, 0) == 1);
    CHECK(harmonic_dimension(2, 1, 1) == 3);
    CHECK(harmonic_dimension(3, 2, 1) == 15);
    CHECK(harmonic_dimension(2, 1, 0) == 2);
    CHECK(harmonic_dimension(2, 2, 0) == 3);
}

TEST_CASE("sphere_monomial_integral exact values and MC cross-check") {
    CHECK(sphere_monomial_integral(mi({0, 0}), mi({0, 0})) == Rational(1));
    CHECK(sphere_monomial_integral(mi({1, 0}), mi({1, 0})) == Rational(1, 2));
    CHECK(sphere_monomial_integral(mi({1, 0}), mi({0, 1})) == Rational(0));
    CHECK(sphere_monomial_integral(mi({2, 1}), mi({2, 1})) == Rational(2, 24));

    double mc = mc_sphere_integral(mi({1, 0}), mi({1, 0}), 200000, 42);
    CHECK(mc == doctest::Approx(0.5).epsilon(1e-2));
}

TEST_CASE("build_harmonic_basis small cases") {
    HarmonicBasis b00 = build_harmonic_basis(2, 0, 0);
    CHECK(b00.dim() == 1);
    CHECK(b00.sq_norms[0] == Rational(1));

    HarmonicBasis b11 = build_harmonic_basis(2, 1, 1);
    CHECK(b11.dim() == 3);

    HarmonicBasis b10 = build_harmonic_basis(2, 1, 0);
    CHECK(b10.dim() == 2);
}

TEST_CASE("exact harmonicity and exact orthogonality") {
    for (auto [n, p, q] : {std::tuple<int, int, int>{2, 1, 1}, {2, 2, 1}, {2, 2, 2},
                           {3, 1, 1}, {3, 2, 1}, {4, 1, 1}}) {
        HarmonicBasis basis = build_harmonic_basis(n, p, q);
        CHECK(basis.dim() == harmonic_dimension(n, p, q));
        auto [lap, ncols] = laplacian_matrix(n, p, q);
        for (const auto& row : basis.coeffs) {
            // Laplacian annihilates each row exactly
            for (const auto& lrow : lap) {
                Rational dot = 0;
                for (size_t c = 0; c < ncols; ++c)
                    if (lrow[c] != 0 && row[c] != 0) dot += Rational(lrow[c]) * row[c];
                CHECK(dot == 0);
            }
        }
        for (int i = 0; i < basis.dim(); ++i) {
            CHECK(basis.sq_norms[i] > 0);
            for (int j = i + 1; j < basis.dim(); ++j)
                CHECK(harmonic_inner(basis, basis.coeffs[i], basis.coeffs[j]) == 0);
        }
    }
}

TEST_CASE("eval_harmonic homogeneity and normalization") {
    HarmonicBasis basis = build_harmonic_basis(2, 2, 1);
    std::mt19937 rng(9);
    auto theta = random_sphere_point(2, rng);
    for (int j = 0; j < basis.dim(); ++j) {
        cplx at_theta = eval_harmonic(basis, j, theta);
        double rho = 0.73;
        std::vector<cplx> scaled{rho * theta[0], rho * theta[1]};
        cplx at_scaled = eval_harmonic(basis, j, scaled);
        cplx expected = std::pow(rho, basis.p + basis.q) * at_theta;
        CHECK(std::abs(at_scaled - expected) <= 1e-13 * std::abs(expected));
    }
    CHECK_THROWS_AS(eval_harmonic(basis, basis.dim(), theta), std::out_of_range);

    HarmonicBasis b00 = build_harmonic_basis(2, 0, 0);
    CHECK(eval_harmonic(b00, 0, theta).real() == doctest::Approx(1.0));
}

TEST_CASE("addition kernel is the dimension, independent of the point") {
    std::mt19937 rng(123);
    for (auto [n, p, q] : {std::tuple<int, int, int>{2, 0, 0}, {2, 1, 1}, {2, 2, 0},
                           {3, 2, 1}}) {
        HarmonicBasis basis = build_harmonic_basis(n, p, q);
        double d = double(harmonic_dimension(n, p, q));
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 20; ++i) {
            double v = addition_kernel_check(basis, random_sphere_point(n, rng));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(hi - lo < 1e-12 * d);
        CHECK(hi == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("zonal kernel is invariant under diagonal unitaries") {
    HarmonicBasis basis = build_harmonic_basis(2, 2, 1);
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(0.0, 6.28);
    auto theta = random_sphere_point(2, rng);
    auto omega = random_sphere_point(2, rng);
    auto kernel = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
        cplx s = 0.0;
        for (int j = 0; j < basis.dim(); ++j)
            s += eval_harmonic(basis, j, a) * std::conj(eval_harmonic(basis, j, b));
        return s;
    };
    cplx ref = kernel(theta, omega);
    for (int trial = 0; trial < 5; ++trial) {
        cplx u1 = std::polar(1.0, u(rng)), u2 = std::polar(1.0, u(rng));
        std::vector<cplx> t2{u1 * theta[0], u2 * theta[1]};
        std::vector<cplx> o2{u1 * omega[0], u2 * omega[1]};
        CHECK(std::abs(kernel(t2, o2) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("zonal kernel is basis independent") {
    // remix the rows by an invertible rational transform and re-orthogonalize
    HarmonicBasis basis = build_harmonic_basis(2, 2, 1);
    HarmonicBasis remixed = basis;
    const int d = basis.dim();
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < d; ++i) {
        // shear by the next row, keeping the set independent
        int other = (i + 1) % d;
        int c = coef(rng);
        for (size_t col = 0; col < basis.cols(); ++col)
            remixed.coeffs[i][col] = basis.coeffs[i][col] + Rational(c) * basis.coeffs[other][col];
    }
    // re-orthogonalize the remixed rows
    std::vector<std::vector<Rational>> ortho;
    std::vector<Rational> norms;
    for (auto row : remixed.coeffs) {
        for (size_t j = 0; j < ortho.size(); ++j) {
            Rational proj = harmonic_inner(basis, row, ortho[j]) / norms[j];
            for (size_t c = 0; c < row.size(); ++c) row[c] -= proj * ortho[j][c];
        }
        normalize_row_primitive(row);
        Rational nv = harmonic_inner(basis, row, row);
        REQUIRE(nv > 0);
        norms.push_back(nv);
        ortho.push_back(row);
    }
    remixed.coeffs = ortho;
    remixed.sq_norms = norms;

    std::mt19937 rng2(6);
    auto theta = random_sphere_point(2, rng2);
    auto omega = random_sphere_point(2, rng2);
    auto kernel = [&](const HarmonicBasis& hb) {
        cplx s = 0.0;
        for (int j = 0; j < hb.dim(); ++j)
            s += eval_harmonic(hb, j, theta) * std::conj(eval_harmonic(hb, j, omega));
        return s;
    };
    cplx k1 = kernel(basis), k2 = kernel(remixed);
    CHECK(std::abs(k1 - k2) <= 1e-12 * std::max(1.0, std::abs(k1)));
}

TEST_CASE("capacity bound") {
    HarmonicBasisOptions opts;
    opts.max_monomials = 4;
    CHECK_THROWS_AS(build_harmonic_basis(2, 2, 2, opts), capacity_error);
}

TEST_CASE("basis cache file round-trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "bergman_basis_cache_test";
    fs::create_directories(dir);
    fs::path file = dir / "b.bin";

    HarmonicBasis basis = build_harmonic_basis(3, 2, 1);
    save_harmonic_basis(basis, file);
    HarmonicBasis loaded = load_harmonic_basis(file);
    CHECK(loaded.n == basis.n);
    CHECK(loaded.dim() == basis.dim());
    CHECK(loaded.coeffs == basis.coeffs);
    CHECK(loaded.sq_norms == basis.sq_norms);

    BasisStore store(3, dir);
    const HarmonicBasis& via_store = store.exact(2, 1);
    CHECK(via_store.coeffs == basis.coeffs);
    // second store instance reads the file written by the first
    BasisStore store2(3, dir);
    CHECK(store2.exact(2, 1).coeffs == basis.coeffs);
    fs::remove_all(dir);
}
