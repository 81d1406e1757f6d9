#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bergman/ball.hpp"
#include "bergman/space.hpp"

namespace bergman {

// Closed-form constant sets. `literal` carries the transcribed constants;
// `audited` applies the corrections fixed against the parameter-free
// quadrature oracle (a uniform factor 1/2 on the Gamma-Wilson transform
// identity, confirmed by the constant audit).
enum class ConstantsMode { literal, audited };

// phi_lambda(z) = (1-|z|^2)^{(i lambda+n)/2} 2F1((i lambda+n)/2 twice; n; |z|^2);
// for real lambda the imaginary part must vanish and is checked.
std::complex<double> spherical_function(int n, std::complex<double> lambda,
                                        const BallPoint& z);

struct QuadOptions {
    double rel_tol = 1e-11;
    int budget = 48;
};

// Spherical transform of the squared-Jacobi radial profile: the
// parameter-free oracle of record for the spectral symbol. Purely
// imaginary lambda is admitted where the hypergeometric factor
// terminates (the constant-eigenfunction audit point).
double spherical_transform_quad(const SpaceParams& sp, std::complex<double> lambda,
                                const QuadOptions& opts = {});

struct KoornwinderParams {
    double alpha;
    double beta;
    double delta;
    double mu_prime;
};

// Left side: the hyperbolic-t integral of the Jacobi-2F1 product,
// evaluated through the tanh^2 substitution by adaptive quadrature.
double koornwinder_integral_quad(const KoornwinderParams& kp, int k, double lambda,
                                 const QuadOptions& opts = {});

// Right side: Gamma factors times the Wilson polynomial.
double koornwinder_rhs(const KoornwinderParams& kp, int k, double lambda,
                       ConstantsMode mode);

// Closed form of the k-th transform integral of the symbol chain, with
// the Wilson b-parameter supplied explicitly (the audit decides it).
double i_k_closed(const SpaceParams& sp, int k, double lambda, double wilson_b,
                  ConstantsMode mode);

// Literal gamma_k constants of the Wilson-sum symbol.
std::vector<double> gamma_coeffs(const SpaceParams& sp);

// Constants fixed by the audit for one parameter triple.
struct AuditedConstants {
    double scale = 1.0;    // fitted multiplier on the literal constants
    double wilson_b = 0.0; // chosen second Wilson parameter
    double residual = 0.0; // post-fit max relative residual on the grid
};

// Wilson-form symbol. With audit == nullptr evaluates the literal
// constants (b = 1 + n/2); complex lambda admitted for the polynomial/
// Gamma continuation down to the constant-eigenfunction point.
double symbol_wilson(const SpaceParams& sp, std::complex<double> lambda,
                     const AuditedConstants* audit = nullptr);

// m = 0 closed form with alpha = 2 nu - n - 1.
double symbol_peetre(double nu, int n, std::complex<double> lambda);

struct F32Symbol {
    std::complex<double> value; // diagnostic; compared, never trusted
    double tail_estimate = 0.0;
};

F32Symbol symbol_3f2(const SpaceParams& sp, double lambda);

// One spectral-parameter evaluation record.
struct SymbolSample {
    double lambda = 0.0;
    double quad_value = 0.0;   // c_const x transform quadrature
    double wilson_value = 0.0; // audited Wilson form
    std::optional<double> peetre_value;
    std::optional<double> f32_value; // real part of the diagnostic form
    double f32_imag = 0.0;
    double rel_gap_quad_wilson = 0.0;
    double rel_gap_quad_f32 = 0.0;
    double audit_scale = 1.0;
};

struct ConstantAuditReport {
    SpaceParams params;
    std::vector<double> lambda_grid;
    AuditedConstants constants;
    double rejected_b = 0.0;
    double rejected_residual = 0.0;
    std::vector<double> gamma_literal;
    std::vector<double> gamma_audited;
    std::optional<double> peetre_coeff_m0; // m = 0 comparison column
    double kappa_diag_deviation = 0.0;     // max |diag-1| of the Gram diagonal
    bool passed = false;                   // audited residual below 1e-8

    std::string to_text() const;
};

// Fits a single scale on the literal Wilson form against the quadrature
// oracle over the grid, deciding the Wilson b-parameter by residual.
// Throws convergence_error when no candidate reaches residual 1e-6.
ConstantAuditReport constant_audit(const SpaceParams& sp,
                                   std::span<const double> lambda_grid,
                                   const QuadOptions& opts = {});

SymbolSample make_symbol_sample(const SpaceParams& sp, double lambda,
                                const AuditedConstants& audit,
                                const QuadOptions& opts = {});

// Gram diagonal audit: max |  ||Phi_{p,q}||^2 - 1 | over p <= p_max,
// q <= m, by the exact-angular x Gauss-Jacobi route.
double kappa_diagonal_deviation(const SpaceParams& sp, int p_max);

} // namespace bergman
