#include "bergman/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/errors.hpp"
#include "bergman/exact_linalg.hpp"

namespace bergman {

long long harmonic_dimension(int n, int p, int q) {
    if (n < 2) throw std::invalid_argument("harmonic_dimension: n >= 2 required");
    if (p < 0 || q < 0) throw std::invalid_argument("harmonic_dimension: p,q >= 0");
    BigInt num = BigInt(p + q + n - 1) * factorial(p + n - 2) * factorial(q + n - 2);
    BigInt den = factorial(p) * factorial(q) * factorial(n - 1) * factorial(n - 2);
    return (num / den).convert_to<long long>();
}

Rational sphere_monomial_integral(const MultiIndex& alpha, const MultiIndex& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("sphere_monomial_integral: dimension mismatch");
    if (!(alpha == beta)) return Rational(0);
    const int n = int(alpha.size());
    BigInt num = factorial(n - 1);
    for (int e : alpha.entries) num *= factorial(e);
    return Rational(num, factorial(n - 1 + alpha.degree()));
}

namespace {

// key identifying monomial columns that can pair non-trivially in the
// sphere inner product: alpha - beta componentwise
std::vector<int> pairing_key(const MultiIndex& a, const MultiIndex& b) {
    std::vector<int> k(a.size());
    for (size_t i = 0; i < a.size(); ++i) k[i] = a[i] - b[i];
    return k;
}

struct InnerProductTable {
    // groups of columns sharing a pairing key, with the dense rational
    // Gram block of each group
    std::vector<std::vector<int>> groups;
    std::vector<std::vector<Rational>> blocks; // row-major per group

    Rational inner(std::span<const Rational> u, std::span<const Rational> v) const {
        Rational total = 0;
        for (size_t g = 0; g < groups.size(); ++g) {
            const auto& cols = groups[g];
            const auto& blk = blocks[g];
            const size_t sz = cols.size();
            for (size_t i = 0; i < sz; ++i) {
                const Rational& ui = u[cols[i]];
                if (ui == 0) continue;
                for (size_t j = 0; j < sz; ++j) {
                    const Rational& vj = v[cols[j]];
                    if (vj == 0) continue;
                    total += ui * vj * blk[i * sz + j];
                }
            }
        }
        return total;
    }
};

InnerProductTable build_inner_table(const HarmonicBasis& basis) {
    InnerProductTable table;
    std::map<std::vector<int>, std::vector<int>> by_key;
    for (size_t c = 0; c < basis.cols(); ++c)
        by_key[pairing_key(basis.alphas[basis.col_alpha[c]],
                           basis.betas[basis.col_beta[c]])]
            .push_back(int(c));
    for (auto& [key, cols] : by_key) {
        const size_t sz = cols.size();
        std::vector<Rational> blk(sz * sz);
        for (size_t i = 0; i < sz; ++i) {
            const MultiIndex& ai = basis.alphas[basis.col_alpha[cols[i]]];
            const MultiIndex& bi = basis.betas[basis.col_beta[cols[i]]];
            for (size_t j = 0; j < sz; ++j) {
                const MultiIndex& aj = basis.alphas[basis.col_alpha[cols[j]]];
                const MultiIndex& bj = basis.betas[basis.col_beta[cols[j]]];
                // <z^ai zbar^bi, z^aj zbar^bj> = I(ai + bj, aj + bi)
                blk[i * sz + j] = sphere_monomial_integral(ai + bj, aj + bi);
            }
        }
        table.groups.push_back(std::move(cols));
        table.blocks.push_back(std::move(blk));
    }
    return table;
}

} // namespace

Rational harmonic_inner(const HarmonicBasis& basis, std::span<const Rational> u,
                        std::span<const Rational> v) {
    return build_inner_table(basis).inner(u, v);
}

std::pair<std::vector<std::vector<BigInt>>, size_t> laplacian_matrix(int n, int p, int q) {
    auto alphas = enumerate_multi_indices(n, p);
    auto betas = enumerate_multi_indices(n, q);
    const size_t ncols = alphas.size() * betas.size();
    if (p == 0 || q == 0) return {{}, ncols};
    auto t_alphas = enumerate_multi_indices(n, p - 1);
    auto t_betas = enumerate_multi_indices(n, q - 1);
    std::map<MultiIndex, int> a_idx, b_idx;
    for (size_t i = 0; i < t_alphas.size(); ++i) a_idx[t_alphas[i]] = int(i);
    for (size_t i = 0; i < t_betas.size(); ++i) b_idx[t_betas[i]] = int(i);
    const size_t nrows = t_alphas.size() * t_betas.size();
    std::vector<std::vector<BigInt>> lap(nrows, std::vector<BigInt>(ncols, BigInt(0)));
    for (size_t c = 0; c < ncols; ++c) {
        const MultiIndex& a = alphas[c / betas.size()];
        const MultiIndex& b = betas[c % betas.size()];
        for (int j = 0; j < n; ++j) {
            if (a[j] == 0 || b[j] == 0) continue;
            MultiIndex ra = a, rb = b;
            ra.entries[j] -= 1;
            rb.entries[j] -= 1;
            size_t row = size_t(a_idx[ra]) * t_betas.size() + size_t(b_idx[rb]);
            lap[row][c] += BigInt(a[j]) * b[j];
        }
    }
    return {std::move(lap), ncols};
}

HarmonicBasis build_harmonic_basis(int n, int p, int q, const HarmonicBasisOptions& opts) {
    HarmonicBasis basis;
    basis.n = n;
    basis.p = p;
    basis.q = q;
    basis.alphas = enumerate_multi_indices(n, p);
    basis.betas = enumerate_multi_indices(n, q);
    const size_t na = basis.alphas.size(), nb = basis.betas.size();
    const size_t ncols = na * nb;
    if (ncols > opts.max_monomials)
        throw capacity_error("build_harmonic_basis: monomial count " +
                             std::to_string(ncols) + " exceeds bound");
    basis.col_alpha.resize(ncols);
    basis.col_beta.resize(ncols);
    for (size_t ia = 0; ia < na; ++ia)
        for (size_t ib = 0; ib < nb; ++ib) {
            basis.col_alpha[ia * nb + ib] = int(ia);
            basis.col_beta[ia * nb + ib] = int(ib);
        }

    // Laplacian 4 sum_j d^2/dz_j dzbar_j maps bidegree (p,q) into
    // (p-1,q-1); its integer matrix annihilates exactly the harmonics.
    std::vector<std::vector<Rational>> null_rows;
    if (p == 0 || q == 0) {
        null_rows.resize(ncols, std::vector<Rational>(ncols, Rational(0)));
        for (size_t c = 0; c < ncols; ++c) null_rows[c][c] = 1;
    } else {
        auto [lap, cols_check] = laplacian_matrix(n, p, q);
        null_rows = nullspace_exact(lap, cols_check);
    }

    // exact Gram-Schmidt against the monomial inner product, kept
    // unnormalized; rows rescaled to primitive integer vectors
    InnerProductTable table = build_inner_table(basis);
    std::vector<std::vector<Rational>> ortho;
    std::vector<Rational> norms;
    for (auto& candidate : null_rows) {
        std::vector<Rational> v = std::move(candidate);
        for (size_t j = 0; j < ortho.size(); ++j) {
            Rational proj = table.inner(v, ortho[j]) / norms[j];
            if (proj == 0) continue;
            for (size_t c = 0; c < ncols; ++c) v[c] -= proj * ortho[j][c];
        }
        normalize_row_primitive(v);
        Rational nv = table.inner(v, v);
        if (nv == 0) continue; // dependent direction
        norms.push_back(std::move(nv));
        ortho.push_back(std::move(v));
    }
    basis.coeffs = std::move(ortho);
    basis.sq_norms = std::move(norms);
    return basis;
}

std::complex<double> eval_harmonic(const HarmonicBasis& basis, int j,
                                   std::span<const std::complex<double>> z) {
    if (j < 0 || j >= basis.dim())
        throw std::out_of_range("eval_harmonic: basis index out of range");
    if (int(z.size()) != basis.n)
        throw std::invalid_argument("eval_harmonic: point dimension mismatch");
    // power tables per coordinate
    std::vector<std::vector<std::complex<double>>> zp(basis.n), zbp(basis.n);
    for (int i = 0; i < basis.n; ++i) {
        zp[i].resize(basis.p + 1);
        zbp[i].resize(basis.q + 1);
        zp[i][0] = zbp[i][0] = 1.0;
        for (int e = 1; e <= basis.p; ++e) zp[i][e] = zp[i][e - 1] * z[i];
        for (int e = 1; e <= basis.q; ++e) zbp[i][e] = zbp[i][e - 1] * std::conj(z[i]);
    }
    std::complex<double> acc = 0.0;
    const auto& row = basis.coeffs[j];
    for (size_t c = 0; c < basis.cols(); ++c) {
        if (row[c] == 0) continue;
        std::complex<double> mono = to_double(row[c]);
        const MultiIndex& a = basis.alphas[basis.col_alpha[c]];
        const MultiIndex& b = basis.betas[basis.col_beta[c]];
        for (int i = 0; i < basis.n; ++i) mono *= zp[i][a[i]] * zbp[i][b[i]];
        acc += mono;
    }
    return acc / std::sqrt(to_double(basis.sq_norms[j]));
}

double addition_kernel_check(const HarmonicBasis& basis,
                             std::span<const std::complex<double>> theta) {
    double total = 0.0;
    for (int j = 0; j < basis.dim(); ++j) total += std::norm(eval_harmonic(basis, j, theta));
    return total;
}

CompiledHarmonicBasis::CompiledHarmonicBasis(const HarmonicBasis& basis)
    : n_(basis.n), p_(basis.p), q_(basis.q) {
    columns_.reserve(basis.cols());
    for (size_t c = 0; c < basis.cols(); ++c)
        columns_.push_back({basis.alphas[basis.col_alpha[c]].entries,
                            basis.betas[basis.col_beta[c]].entries});
    rows_.resize(basis.dim());
    for (int j = 0; j < basis.dim(); ++j) {
        double inv_norm = 1.0 / std::sqrt(to_double(basis.sq_norms[j]));
        for (size_t c = 0; c < basis.cols(); ++c)
            if (basis.coeffs[j][c] != 0)
                rows_[j].push_back({int(c), to_double(basis.coeffs[j][c]) * inv_norm});
    }
}

std::complex<double> CompiledHarmonicBasis::eval(
    int j, std::span<const std::complex<double>> z) const {
    std::vector<std::vector<std::complex<double>>> zp(n_), zbp(n_);
    for (int i = 0; i < n_; ++i) {
        zp[i].resize(p_ + 1);
        zbp[i].resize(q_ + 1);
        zp[i][0] = zbp[i][0] = 1.0;
        for (int e = 1; e <= p_; ++e) zp[i][e] = zp[i][e - 1] * z[i];
        for (int e = 1; e <= q_; ++e) zbp[i][e] = zbp[i][e - 1] * std::conj(z[i]);
    }
    std::complex<double> acc = 0.0;
    for (const auto& [c, coef] : rows_[j]) {
        std::complex<double> mono = coef;
        for (int i = 0; i < n_; ++i)
            mono *= zp[i][columns_[c].first[i]] * zbp[i][columns_[c].second[i]];
        acc += mono;
    }
    return acc;
}

} // namespace bergman
