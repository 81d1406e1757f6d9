#pragma once

#include <vector>

#include "bergman/errors.hpp"
#include "bergman/rational.hpp"

namespace bergman {

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact Gauss-Jordan solve of a square system. Throws if singular.
inline std::vector<Rational> solve_exact(RatMatrix a, std::vector<Rational> b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("solve_exact: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rational inv = a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] /= inv;
        b[col] /= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

// Row echelon by fraction-free (Bareiss) elimination over the integers;
// returns the rank. Input rows are arbitrary BigInt vectors.
inline int bareiss_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    BigInt prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return int(r);
}

// Exact nullspace basis (rows) of an integer matrix acting on column
// vectors of length ncols.
inline std::vector<std::vector<Rational>> nullspace_exact(
    const std::vector<std::vector<BigInt>>& m_in, size_t ncols) {
    RatMatrix m;
    m.reserve(m_in.size());
    for (const auto& row : m_in) {
        std::vector<Rational> r(ncols);
        for (size_t j = 0; j < ncols; ++j) r[j] = Rational(row[j]);
        m.push_back(std::move(r));
    }
    // reduced row echelon form
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Rational inv = m[r][c];
        for (size_t j = c; j < ncols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scale a rational row to a primitive integer vector (clears denominators,
// divides out the content). Keeps Gram-Schmidt intermediates small.
inline void normalize_row_primitive(std::vector<Rational>& row) {
    BigInt lcm = 1, gcd = 0;
    for (const Rational& x : row)
        if (x != 0) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    for (Rational& x : row) {
        x *= Rational(lcm);
        if (x != 0) gcd = boost::multiprecision::gcd(gcd, numerator(x));
    }
    if (gcd != 0)
        for (Rational& x : row) x /= Rational(gcd);
}

} // namespace bergman
