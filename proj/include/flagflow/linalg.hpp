#pragma once

#include "flagflow/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace flagflow {

/// Exact rank of a rational matrix (Gaussian elimination over Q).
inline int rational_rank(std::vector<RatVec> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Saturated basis of the integer kernel {x in Z^n : A x = 0}. Column
/// reduction of A with the same unimodular operations mirrored on an
/// identity matrix; the columns of the mirror below the zero columns of the
/// reduced A generate the full kernel lattice (Smith/Hermite style, so the
/// basis is saturated, not finite-index).
///
/// Output normalization: each vector primitive with positive trailing
/// nonzero entry, vectors sorted lexicographically.
inline std::vector<IntVec> integer_kernel_basis(std::vector<IntVec> a, std::size_t n) {
    const std::size_t m = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("ragged matrix");
    // v starts as the n x n identity; column ops applied to both a and v.
    std::vector<IntVec> v(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

    auto col_swap = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t r = 0; r < m; ++r) std::swap(a[r][c1], a[r][c2]);
        for (std::size_t r = 0; r < n; ++r) std::swap(v[r][c1], v[r][c2]);
    };
    auto col_axpy = [&](std::size_t dst, const Int& f, std::size_t src) {
        for (std::size_t r = 0; r < m; ++r) a[r][dst] -= f * a[r][src];
        for (std::size_t r = 0; r < n; ++r) v[r][dst] -= f * v[r][src];
    };

    std::size_t lead = 0;
    for (std::size_t row = 0; row < m && lead < n; ++row) {
        // gcd-reduce the row segment [lead, n) to a single nonzero pivot
        while (true) {
            std::size_t nz = lead;
            std::size_t count = 0;
            Int best = 0;
            for (std::size_t c = lead; c < n; ++c) {
                if (a[row][c] != 0) {
                    ++count;
                    if (best == 0 || abs(a[row][c]) < abs(best)) {
                        best = a[row][c];
                        nz = c;
                    }
                }
            }
            if (count == 0) break;
            col_swap(lead, nz);
            if (count == 1) {
                ++lead;
                break;
            }
            for (std::size_t c = lead + 1; c < n; ++c) {
                if (a[row][c] == 0) continue;
                col_axpy(c, a[row][c] / a[row][lead], lead);
            }
        }
    }

    std::vector<IntVec> basis;
    for (std::size_t c = 0; c < n; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < m; ++r)
            if (a[r][c] != 0) zero = false;
        if (!zero) continue;
        IntVec col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = v[r][c];
        Int g = 0;
        for (const Int& x : col) g = gcd(g, x);
        if (g == 0) continue;  // cannot happen for unimodular v
        Int sign = 1;
        for (auto it = col.rbegin(); it != col.rend(); ++it) {
            if (*it != 0) {
                if (*it < 0) sign = -1;
                break;
            }
        }
        for (Int& x : col) x = sign * x / g;
        basis.push_back(std::move(col));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

/// Whether v lies in the lattice spanned by the basis vectors: solve the
/// rational system and check the coefficients are integers.
inline bool in_lattice(const std::vector<IntVec>& basis, const IntVec& v) {
    if (basis.empty()) {
        return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    }
    const std::size_t n = v.size();
    const std::size_t r = basis.size();
    // augmented system [B | v], columns of B are the basis vectors
    std::vector<RatVec> m(n, RatVec(r + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][r] = Rat(v[i]);
    }
    // forward elimination with pivot tracking
    std::vector<std::size_t> pivot_row(r, SIZE_MAX);
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        for (std::size_t q = 0; q < n; ++q) {
            if (q == row || m[q][col] == 0) continue;
            const Rat f = m[q][col] / m[row][col];
            for (std::size_t c = col; c <= r; ++c) m[q][c] -= f * m[row][c];
        }
        pivot_row[col] = row;
        ++row;
    }
    // consistency: rows without pivots must have zero rhs
    for (std::size_t q = row; q < n; ++q)
        if (m[q][r] != 0) return false;
    // each basis vector must appear with an integer coefficient
    for (std::size_t col = 0; col < r; ++col) {
        if (pivot_row[col] == SIZE_MAX) continue;  // dependent basis vector
        const Rat coeff = m[pivot_row[col]][r] / m[pivot_row[col]][col];
        if (denominator(coeff) != 1) return false;
    }
    return true;
}

}  // namespace flagflow
