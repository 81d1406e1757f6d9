#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bergman/multi_index.hpp"
#include "bergman/rational.hpp"

namespace bergman {

// dim H(p,q) = (p+q+n-1)(p+n-2)!(q+n-2)! / (p! q! (n-1)! (n-2)!)
long long harmonic_dimension(int n, int p, int q);

// Integral over the normalized sphere measure of theta^alpha conj(theta)^beta:
// zero unless alpha == beta, else (n-1)! alpha! / (n-1+|alpha|)!.
Rational sphere_monomial_integral(const MultiIndex& alpha, const MultiIndex& beta);

// Exact orthogonal (unnormalized) basis of the bidegree-(p,q) harmonics
// restricted to the unit sphere. Rows are coefficient vectors against the
// monomial columns z^alpha conj(z)^beta; sq_norms holds the exact L2(dsigma)
// squared norms. The 1/sqrt(norm) normalization enters only at evaluation.
struct HarmonicBasis {
    int n = 0, p = 0, q = 0;
    std::vector<MultiIndex> alphas; // holomorphic exponents, |alpha| = p
    std::vector<MultiIndex> betas;  // antiholomorphic exponents, |beta| = q
    // column c represents z^{alphas[col_alpha[c]]} conj(z)^{betas[col_beta[c]]}
    std::vector<int> col_alpha, col_beta;
    std::vector<std::vector<Rational>> coeffs; // dim rows x cols
    std::vector<Rational> sq_norms;

    int dim() const { return int(coeffs.size()); }
    size_t cols() const { return col_alpha.size(); }
};

struct HarmonicBasisOptions {
    size_t max_monomials = 20000;
};

HarmonicBasis build_harmonic_basis(int n, int p, int q,
                                   const HarmonicBasisOptions& opts = {});

// Integer matrix of the Laplacian 4 sum_j d^2/dz_j dzbar_j from bidegree
// (p,q) monomials into (p-1,q-1) monomials (empty when p or q is 0),
// together with the source monomial count.
std::pair<std::vector<std::vector<BigInt>>, size_t> laplacian_matrix(int n, int p, int q);

// Exact inner product of two coefficient rows under the sphere measure.
Rational harmonic_inner(const HarmonicBasis& basis, std::span<const Rational> u,
                        std::span<const Rational> v);

// Normalized basis element h^j at a point (0-based j).
std::complex<double> eval_harmonic(const HarmonicBasis& basis, int j,
                                   std::span<const std::complex<double>> z);

// sum_j |h^j(theta)|^2 over the normalized basis; constant = dim H(p,q)
// on the sphere.
double addition_kernel_check(const HarmonicBasis& basis,
                             std::span<const std::complex<double>> theta);

// Double-precision compiled form for hot evaluation paths.
class CompiledHarmonicBasis {
public:
    explicit CompiledHarmonicBasis(const HarmonicBasis& basis);

    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int dim() const { return int(rows_.size()); }

    std::complex<double> eval(int j, std::span<const std::complex<double>> z) const;

private:
    int n_, p_, q_;
    std::vector<std::vector<int>> col_alpha_, col_beta_;
    std::vector<std::vector<std::pair<int, double>>> rows_; // (column, normalized coeff)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> columns_;
};

// Versioned binary cache of exact bases keyed by (n,p,q).
void save_harmonic_basis(const HarmonicBasis& basis, const std::filesystem::path& file);
HarmonicBasis load_harmonic_basis(const std::filesystem::path& file);

// In-memory store of bases for one fixed n, with an optional disk cache
// directory. Thread-compatible: build once, then share const.
class BasisStore {
public:
    explicit BasisStore(int n, std::optional<std::filesystem::path> cache_dir = {});

    const HarmonicBasis& exact(int p, int q);
    const CompiledHarmonicBasis& compiled(int p, int q);

private:
    int n_;
    std::optional<std::filesystem::path> cache_dir_;
    std::map<std::pair<int, int>, HarmonicBasis> exact_;
    std::map<std::pair<int, int>, std::unique_ptr<CompiledHarmonicBasis>> compiled_;
};

} // namespace bergman
