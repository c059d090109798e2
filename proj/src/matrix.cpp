#include "signspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace signspec {

namespace {

std::string at(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Matrix::Matrix(int n, double fill) : n_(n) {
    if (n < 0) throw dimension_error("matrix dimension must be nonnegative");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill);
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw dimension_error("matrix rows must all have length " + std::to_string(n));
        for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    if (!m.all_finite()) throw parse_error("matrix entries must be finite");
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

std::size_t Matrix::index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw dimension_error("matrix index " + at(i, j) + " out of range for n=" + std::to_string(n_));
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

bool Matrix::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](double x) { return std::isfinite(x); });
}

double Matrix::max_abs() const noexcept {
    double m = 0.0;
    for (double x : entries_) m = std::max(m, std::abs(x));
    return m;
}

double Matrix::min_entry() const noexcept {
    double m = entries_.empty() ? 0.0 : entries_.front();
    for (double x : entries_) m = std::min(m, x);
    return m;
}

double Matrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double x : entries_) s += x * x;
    return std::sqrt(s);
}

Matrix Matrix::transposed() const {
    Matrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

namespace {

void require_same_size(const Matrix& x, const Matrix& y, const char* op) {
    if (x.size() != y.size())
        throw dimension_error(std::string("operand sizes differ in ") + op);
}

}  // namespace

Matrix operator*(const Matrix& x, const Matrix& y) {
    require_same_size(x, y, "matrix product");
    const int n = x.size();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    require_same_size(x, y, "matrix sum");
    const int n = x.size();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    require_same_size(x, y, "matrix difference");
    const int n = x.size();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
    require_same_size(x, y, "max_abs_diff");
    double m = 0.0;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

SignatureMatrix SignatureMatrix::identity(int n) {
    if (n < 0) throw dimension_error("signature dimension must be nonnegative");
    SignatureMatrix d;
    d.signs.assign(static_cast<std::size_t>(n), 1);
    return d;
}

SignatureMatrix SignatureMatrix::from_signs(std::vector<int> signs) {
    for (int s : signs)
        if (s != 1 && s != -1) throw precondition_error("signature entries must be +1 or -1");
    return SignatureMatrix{std::move(signs)};
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw dimension_error("permutation dimension must be nonnegative");
    Permutation p;
    p.image.resize(static_cast<std::size_t>(n));
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

Permutation Permutation::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : image) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw precondition_error("permutation image must be a bijection of {0..n-1}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation{std::move(image)};
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image.assign(image.size(), 0);
    for (int i = 0; i < size(); ++i) inv.image[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] = i;
    return inv;
}

Matrix conjugate_signature(const Matrix& a, const SignatureMatrix& d) {
    if (a.size() != d.size()) throw dimension_error("signature size does not match the matrix");
    const int n = a.size();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int s = d.signs[static_cast<std::size_t>(i)] * d.signs[static_cast<std::size_t>(j)];
            r(i, j) = s == 1 ? a(i, j) : -a(i, j);
        }
    return r;
}

Matrix conjugate_permutation(const Matrix& a, const Permutation& theta) {
    if (a.size() != theta.size()) throw dimension_error("permutation size does not match the matrix");
    const int n = a.size();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = a(theta(i), theta(j));
    return r;
}

namespace {

// Reachability sweep over the |a| > tol pattern, forward or transposed.
int reachable_count(const Matrix& a, double zero_tol, bool transposed) {
    const int n = a.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (v == u || seen[static_cast<std::size_t>(v)]) continue;
            const double e = transposed ? a(v, u) : a(u, v);
            if (std::abs(e) > zero_tol) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count;
}

}  // namespace

bool is_irreducible(const Matrix& a, double zero_tol) {
    const int n = a.size();
    if (n == 0) throw dimension_error("irreducibility is undefined for an empty matrix");
    if (n == 1) return true;
    return reachable_count(a, zero_tol, false) == n && reachable_count(a, zero_tol, true) == n;
}

}  // namespace signspec
