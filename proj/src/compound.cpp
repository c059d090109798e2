#include "signspec/compound.hpp"

#include <string>

namespace signspec {

double generalized_minor(const Matrix& a, int i, int j, int k, int l) {
    const int n = a.size();
    for (int idx : {i, j, k, l})
        if (idx < 0 || idx >= n)
            throw dimension_error("minor index " + std::to_string(idx) + " out of range");
    return a(i, k) * a(j, l) - a(i, l) * a(j, k);
}

Matrix second_compound(const Matrix& a) {
    if (a.size() < 2) throw dimension_error("second compound requires n >= 2");
    const PairIndexer ix(a.size());
    const int m = ix.count();
    Matrix c(m);
    for (int r = 0; r < m; ++r) {
        const auto [i, j] = ix.pair(r);
        for (int s = 0; s < m; ++s) {
            const auto [k, l] = ix.pair(s);
            c(r, s) = generalized_minor(a, i, j, k, l);
        }
    }
    return c;
}

Matrix w_matrix(const Matrix& a, const RelationSet& w) {
    if (a.size() != w.size()) throw dimension_error("relation dimension does not match the matrix");
    if (a.size() < 2) throw dimension_error("w-matrix requires n >= 2");
    const auto pairs = w.offdiagonal_pairs();
    const int m = static_cast<int>(pairs.size());
    Matrix b(m);
    for (int r = 0; r < m; ++r) {
        const auto [k, l] = pairs[static_cast<std::size_t>(r)];
        for (int s = 0; s < m; ++s) {
            const auto [i, j] = pairs[static_cast<std::size_t>(s)];
            b(r, s) = generalized_minor(a, k, l, i, j);
        }
    }
    return b;
}

WedgeVector wedge_coordinates(std::span<const double> x, std::span<const double> y,
                              const RelationSet& w) {
    const int n = w.size();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw dimension_error("vector length does not match the relation dimension");
    WedgeVector v;
    v.basis = w.offdiagonal_pairs();
    v.coords.reserve(v.basis.size());
    for (auto [i, j] : v.basis)
        v.coords.push_back(x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] -
                           x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(i)]);
    return v;
}

WedgeVector exterior_square_apply(const Matrix& a, std::span<const double> x,
                                  std::span<const double> y, const RelationSet& w) {
    const int n = a.size();
    if (w.size() != n) throw dimension_error("relation dimension does not match the matrix");
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw dimension_error("vector length does not match the matrix");
    std::vector<double> ax(static_cast<std::size_t>(n), 0.0), ay(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ax[static_cast<std::size_t>(i)] += a(i, j) * x[static_cast<std::size_t>(j)];
            ay[static_cast<std::size_t>(i)] += a(i, j) * y[static_cast<std::size_t>(j)];
        }
    return wedge_coordinates(ax, ay, w);
}

}  // namespace signspec
