// Shared fixtures, generators and independent oracles for the test suites.
// Oracles deliberately avoid the library's computation paths: minors come
// from an explicit 2x2 determinant on a copied submatrix, irreducibility
// from a subset search over block splits, wedges from the full
// antisymmetric function table.
#pragma once

#include <complex>
#include <random>
#include <set>
#include <vector>

#include "signspec/compound.hpp"
#include "signspec/matrix.hpp"
#include "signspec/pairs.hpp"
#include "signspec/relation.hpp"
#include "signspec/signsym.hpp"

namespace testutil {

using signspec::Matrix;

// ---------------------------------------------------------------- fixtures

// 4x4 positive symmetric matrix whose compound splits into sign classes
// {1,6} vs {2,3,4,5}.
inline Matrix positive_symmetric_4x4() {
    return Matrix::from_rows({{30, 41, 3, 16}, {41, 61, 3, 20}, {3, 3, 1, 2}, {16, 20, 2, 10}});
}

// Frozen minor table of positive_symmetric_4x4 (independently recomputed).
inline Matrix positive_symmetric_4x4_compound() {
    return Matrix::from_rows({{149, -33, -56, -60, -156, 12},
                              {-33, 21, 12, 32, 34, -10},
                              {-56, 12, 44, 22, 90, -2},
                              {-60, 32, 22, 52, 62, -14},
                              {-156, 34, 90, 62, 210, -10},
                              {12, -10, -2, -14, -10, 6}});
}

// 4x4 positive matrix whose compound splits into {1,2,3} vs {4,5,6}.
inline Matrix positive_4x4() {
    return Matrix::from_rows({{2, 5, 4, 3}, {3, 36, 25, 12}, {3, 25, 18, 9}, {3, 12, 9, 6}});
}

inline Matrix positive_4x4_compound() {
    return Matrix::from_rows({{57, 38, 15, -19, -48, -27},
                              {35, 24, 9, -10, -30, -18},
                              {9, 6, 3, -3, -6, -3},
                              {-33, -21, -9, 23, 24, 9},
                              {-72, -48, -18, 24, 72, 42},
                              {-39, -27, -9, 9, 42, 27}});
}

// Cyclic shift: e1 -> e2 -> e3 -> e1; spectrum is the cube roots of unity.
inline Matrix cyclic_shift_3x3() {
    return Matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
}

// Mixed-sign 3x3 with a zero entry; sign-partition {1,3} (or {2}).
inline Matrix mixed_sign_3x3() {
    return Matrix::from_rows({{8.5, 0, 6.1}, {-5.6, 3.2, -7.4}, {6, -2.8, 6.6}});
}

inline Matrix mixed_sign_3x3_compound() {
    return Matrix::from_rows(
        {{27.2, -28.74, -19.52}, {-23.8, 19.5, 17.08}, {-3.52, 7.44, 0.4}});
}

inline Matrix lower_triangular_ones_3x3() {
    return Matrix::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
}

// --------------------------------------------------------------- generators

inline Matrix random_matrix(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = dist(rng);
    return a;
}

inline Matrix random_positive_matrix(std::mt19937_64& rng, int n, double lo = 0.1, double hi = 2.0) {
    return random_matrix(rng, n, lo, hi);
}

inline signspec::SignatureMatrix random_signature(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution flip(0.5);
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int& s : signs) s = flip(rng) ? -1 : 1;
    return signspec::SignatureMatrix::from_signs(std::move(signs));
}

inline signspec::Permutation random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    std::shuffle(image.begin(), image.end(), rng);
    return signspec::Permutation::from_image(std::move(image));
}

inline signspec::RelationSet random_relation(std::mt19937_64& rng, int n) {
    const int m = n * (n - 1) / 2;
    std::uniform_int_distribution<unsigned long long> bits(0, (1ull << m) - 1);
    return signspec::RelationSet::from_orientation_bits(n, bits(rng));
}

// Totally nonnegative matrices: products of unit-diagonal nonnegative
// bidiagonal factors and a positive diagonal.
inline Matrix random_totally_nonnegative(std::mt19937_64& rng, int n, int factors = 6) {
    std::uniform_real_distribution<double> coef(0.0, 1.5);
    std::uniform_real_distribution<double> diag(0.5, 2.0);
    std::bernoulli_distribution lower(0.5);
    std::uniform_int_distribution<int> pos(0, n - 2);
    Matrix a(n);
    for (int i = 0; i < n; ++i) a(i, i) = diag(rng);
    for (int f = 0; f < factors; ++f) {
        Matrix b = Matrix::identity(n);
        const int k = pos(rng);
        if (lower(rng))
            b(k + 1, k) = coef(rng);
        else
            b(k, k + 1) = coef(rng);
        a = a * b;
    }
    return a;
}

// ------------------------------------------------------------------ oracles

// Minor via an explicit copied 2x2 submatrix and a cofactor determinant.
inline double oracle_minor(const Matrix& a, int i, int j, int k, int l) {
    double sub[2][2] = {{a(i, k), a(i, l)}, {a(j, k), a(j, l)}};
    return sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0];
}

// Reducibility by exhaustive block-split search: the matrix is reducible
// iff some proper nonempty subset has no edge leaving it. Usable for n <= ~12.
inline bool oracle_irreducible(const Matrix& a, double tol = 0.0) {
    const int n = a.size();
    if (n == 1) return true;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        bool escapes = false;
        for (int i = 0; i < n && !escapes; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = 0; j < n; ++j)
                if (!(mask >> j & 1) && std::abs(a(i, j)) > tol) {
                    escapes = true;
                    break;
                }
        }
        if (!escapes) return false;
    }
    return true;
}

// Wedge via the full antisymmetric table on {0..n-1}^2, restricted to the
// relation's off-diagonal pairs.
inline std::vector<double> oracle_wedge(const std::vector<double>& x, const std::vector<double>& y,
                                        const signspec::RelationSet& w) {
    const int n = w.size();
    std::vector<std::vector<double>> full(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] -
                x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(i)];
    std::vector<double> out;
    for (auto [i, j] : w.offdiagonal_pairs())
        out.push_back(full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return out;
}

// Gauss-Jordan inverse with partial pivoting, independent of the library.
inline Matrix oracle_inverse(const Matrix& a) {
    const int n = a.size();
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(2 * n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1.0;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                std::abs(m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
                piv = r;
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
        const double d = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (double& v : m[static_cast<std::size_t>(col)]) v /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0.0) continue;
            for (int cidx = 0; cidx < 2 * n; ++cidx)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)] -=
                    f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(cidx)];
        }
    }
    Matrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return inv;
}

inline std::set<int> one_based(const std::set<int>& zero_based) {
    std::set<int> out;
    for (int v : zero_based) out.insert(v + 1);
    return out;
}

inline std::set<int> zero_based(std::initializer_list<int> one_based_members) {
    std::set<int> out;
    for (int v : one_based_members) out.insert(v - 1);
    return out;
}

}  // namespace testutil
