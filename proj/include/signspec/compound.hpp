#pragma once

#include <span>
#include <utility>
#include <vector>

#include "signspec/matrix.hpp"
#include "signspec/pairs.hpp"
#include "signspec/relation.hpp"

namespace signspec {

/// Coordinates of an antisymmetric bilinear function in the wedge basis
/// selected by a relation set; basis[alpha] is the index pair whose wedge
/// is the alpha-th basis vector. Coordinates are basis-dependent, so the
/// pair list travels with them.
struct WedgeVector {
    std::vector<std::pair<int, int>> basis;
    std::vector<double> coords;
};

/// 2x2 minor with rows (i,j) and columns (k,l), indices unsorted and
/// repeats allowed: a(i,k)a(j,l) - a(i,l)a(j,k). Antisymmetric under
/// swapping either index pair, zero on a repeated index.
double generalized_minor(const Matrix& a, int i, int j, int k, int l);

/// C(n,2) x C(n,2) table of the minors over sorted pairs in lexicographic
/// order; the matrix of the exterior square in the canonical wedge basis.
Matrix second_compound(const Matrix& a);

/// Minor table over the off-diagonal pairs of w in lexicographic order of
/// the literal pairs; column alpha holds the coefficients of the exterior
/// square applied to the alpha-th basis wedge. Coincides with
/// second_compound for the natural order.
Matrix w_matrix(const Matrix& a, const RelationSet& w);

/// Coordinates of x wedge y in the basis selected by w:
/// coord[alpha] = x(i)y(j) - x(j)y(i) for the alpha-th pair (i,j).
WedgeVector wedge_coordinates(std::span<const double> x, std::span<const double> y,
                              const RelationSet& w);

/// Coordinates of (Ax) wedge (Ay) in the basis selected by w. Independent
/// oracle for w_matrix: multiplying w_matrix(a,w) into wedge_coordinates
/// of (x,y) must reproduce this vector.
WedgeVector exterior_square_apply(const Matrix& a, std::span<const double> x,
                                  std::span<const double> y, const RelationSet& w);

}  // namespace signspec
