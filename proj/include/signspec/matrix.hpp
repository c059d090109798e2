#pragma once

#include <initializer_list>
#include <vector>

#include "signspec/errors.hpp"

namespace signspec {

/// Dense real square matrix, row-major, 0-based indices. The design
/// envelope is desk scale (n up to a few dozen); entries must stay finite.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int size() const noexcept { return n_; }

    double& operator()(int i, int j) { return entries_[index(i, j)]; }
    double operator()(int i, int j) const { return entries_[index(i, j)]; }

    bool all_finite() const noexcept;
    double max_abs() const noexcept;
    double min_entry() const noexcept;
    double frobenius_norm() const noexcept;

    Matrix transposed() const;

    const std::vector<double>& data() const noexcept { return entries_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<double> entries_;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);

/// Largest entrywise |x - y|.
double max_abs_diff(const Matrix& x, const Matrix& y);

/// Diagonal matrix with +-1 entries; its own inverse.
struct SignatureMatrix {
    std::vector<int> signs;

    static SignatureMatrix identity(int n);
    static SignatureMatrix from_signs(std::vector<int> signs);

    int size() const noexcept { return static_cast<int>(signs.size()); }
};

/// Permutation of {0..n-1} stored as its image table: image[i] = theta(i).
struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n);
    static Permutation from_image(std::vector<int> image);

    int size() const noexcept { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
};

/// D * A * D^-1; entry (i,j) becomes signs[i]*signs[j]*a(i,j). Applying the
/// same signature twice restores the input bit-exactly.
Matrix conjugate_signature(const Matrix& a, const SignatureMatrix& d);

/// Q^T A Q for the permutation operator Q e_i = e_theta(i); entry (i,j) of
/// the result is a(theta(i), theta(j)).
Matrix conjugate_permutation(const Matrix& a, const Permutation& theta);

/// True iff the digraph with an edge i -> j whenever |a(i,j)| > zero_tol
/// (i != j) is strongly connected. A 1x1 matrix counts as irreducible.
bool is_irreducible(const Matrix& a, double zero_tol = 0.0);

}  // namespace signspec
