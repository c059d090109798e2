#include <doctest.h>

#include <random>

#include "common.hpp"
#include "signspec/compound.hpp"

using namespace signspec;

TEST_CASE("second compound of the positive symmetric fixture") {
    const Matrix c = second_compound(testutil::positive_symmetric_4x4());
    CHECK(c == testutil::positive_symmetric_4x4_compound());  // integer arithmetic, exact
}

TEST_CASE("second compound of the positive fixture") {
    CHECK(second_compound(testutil::positive_4x4()) == testutil::positive_4x4_compound());
}

TEST_CASE("second compound of the cyclic shift") {
    const Matrix c = second_compound(testutil::cyclic_shift_3x3());
    CHECK(c == Matrix::from_rows({{0, -1, 0}, {0, 0, -1}, {1, 0, 0}}));
}

TEST_CASE("second compound of the identity is the identity") {
    for (int n : {2, 3, 5}) {
        const PairIndexer ix(n);
        CHECK(second_compound(Matrix::identity(n)) == Matrix::identity(ix.count()));
    }
    CHECK_THROWS_AS(second_compound(Matrix::identity(1)), dimension_error);
}

TEST_CASE("generalized minors: fixture value, degeneracy, antisymmetry") {
    const Matrix a = testutil::positive_symmetric_4x4();
    CHECK(generalized_minor(a, 0, 1, 0, 1) == 149.0);

    std::mt19937_64 rng(21);
    const Matrix r = testutil::random_matrix(rng, 4);
    std::uniform_int_distribution<int> idx(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const int i = idx(rng), j = idx(rng), k = idx(rng), l = idx(rng);
        const double m = generalized_minor(r, i, j, k, l);
        CHECK(m == doctest::Approx(testutil::oracle_minor(r, i, j, k, l)).epsilon(1e-12));
        CHECK(generalized_minor(r, j, i, k, l) == -m);
        CHECK(generalized_minor(r, i, j, l, k) == -m);
        CHECK(generalized_minor(r, i, i, k, l) == 0.0);
        CHECK(generalized_minor(r, i, j, k, k) == 0.0);
    }
    CHECK_THROWS_AS(generalized_minor(r, 0, 1, 0, 4), dimension_error);
}

TEST_CASE("w-matrix over the natural order is the second compound, bit-exactly") {
    std::mt19937_64 rng(22);
    for (int n : {2, 3, 4, 5}) {
        const Matrix a = testutil::random_matrix(rng, n);
        CHECK(w_matrix(a, RelationSet::natural_order(n)) == second_compound(a));
    }
    CHECK(w_matrix(testutil::positive_symmetric_4x4(), RelationSet::natural_order(4)) ==
          second_compound(testutil::positive_symmetric_4x4()));
    const PairIndexer ix(4);
    CHECK(w_matrix(Matrix::identity(4), RelationSet::natural_order(4)) ==
          Matrix::identity(ix.count()));
}

TEST_CASE("w-matrix of the cyclic shift over its cyclic relation is nonnegative") {
    const Matrix a = testutil::cyclic_shift_3x3();
    const RelationSet w = RelationSet::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    const Matrix b = w_matrix(a, w);
    CHECK(b.min_entry() >= 0.0);
    // entries are the minors over the kept pairs, enumerated lexicographically
    CHECK(b == Matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("wedge coordinates: basis action, degenerate wedge, oracle") {
    const RelationSet w = RelationSet::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    const std::vector<double> e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};

    // identity matrix maps a basis wedge to itself; kept pair (0,1) sits in
    // coordinate 0, reversed pair (0,2) shows up with sign -1 at (2,0)
    const Matrix id = Matrix::identity(3);
    const WedgeVector w01 = exterior_square_apply(id, e0, e1, w);
    CHECK(w01.coords == std::vector<double>{1, 0, 0});
    const WedgeVector w02 = exterior_square_apply(id, e0, e2, w);
    CHECK(w02.coords == std::vector<double>{0, 0, -1});

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(-1, 1);
    std::vector<double> x(3), y(3);
    for (auto& v : x) v = dist(rng);
    const WedgeVector zero = wedge_coordinates(x, x, w);
    for (double c : zero.coords) CHECK(c == 0.0);

    for (auto& v : y) v = dist(rng);
    const WedgeVector vw = wedge_coordinates(x, y, w);
    CHECK(vw.coords == testutil::oracle_wedge(x, y, w));
}

TEST_CASE("the w-matrix represents the exterior square in every basis") {
    // exhaustive over all valid relations for n = 3 and 4, random matrices
    std::mt19937_64 rng(24);
    for (int n : {3, 4}) {
        const PairIndexer ix(n);
        std::vector<RelationSet> all;
        enumerate_relations(n, [&](const RelationSet& w) { all.push_back(w); });
        for (const RelationSet& w : all) {
            const Matrix a = testutil::random_matrix(rng, n);
            const Matrix b = w_matrix(a, w);
            const auto pairs = w.offdiagonal_pairs();
            for (int alpha = 0; alpha < ix.count(); ++alpha) {
                std::vector<double> x(static_cast<std::size_t>(n), 0.0),
                    y(static_cast<std::size_t>(n), 0.0);
                x[static_cast<std::size_t>(pairs[static_cast<std::size_t>(alpha)].first)] = 1.0;
                y[static_cast<std::size_t>(pairs[static_cast<std::size_t>(alpha)].second)] = 1.0;
                const WedgeVector rhs = exterior_square_apply(a, x, y, w);
                for (int beta = 0; beta < ix.count(); ++beta)
                    CHECK(b(beta, alpha) ==
                          doctest::Approx(rhs.coords[static_cast<std::size_t>(beta)])
                              .epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("the w-matrix action commutes with wedging for random vectors") {
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> dist(-1, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 3;
        const Matrix a = testutil::random_matrix(rng, n);
        const RelationSet w = testutil::random_relation(rng, n);
        std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        for (auto& v : x) v = dist(rng);
        for (auto& v : y) v = dist(rng);
        const Matrix b = w_matrix(a, w);
        const WedgeVector in = wedge_coordinates(x, y, w);
        const WedgeVector rhs = exterior_square_apply(a, x, y, w);
        for (int r = 0; r < b.size(); ++r) {
            double lhs = 0.0;
            for (int c = 0; c < b.size(); ++c) lhs += b(r, c) * in.coords[static_cast<std::size_t>(c)];
            CHECK(lhs == doctest::Approx(rhs.coords[static_cast<std::size_t>(r)]).epsilon(1e-10));
        }
    }
}

TEST_CASE("compound multiplicativity and compound of the inverse") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 3;
        const Matrix a = testutil::random_matrix(rng, n);
        const Matrix b = testutil::random_matrix(rng, n);
        const Matrix lhs = second_compound(a * b);
        const Matrix rhs = second_compound(a) * second_compound(b);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-10 * (1.0 + rhs.max_abs()));
    }
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 3;
        // well-conditioned: diagonally dominant perturbation of the identity
        Matrix a = testutil::random_matrix(rng, n, -0.2, 0.2);
        for (int i = 0; i < n; ++i) a(i, i) += 2.0;
        const Matrix inv = testutil::oracle_inverse(a);
        const Matrix lhs = second_compound(inv);
        const Matrix rhs = testutil::oracle_inverse(second_compound(a));
        CHECK(max_abs_diff(lhs, rhs) <= 1e-10 * (1.0 + rhs.max_abs()));
    }
}

TEST_CASE("pair indexer round trips and counts") {
    for (int n : {2, 3, 4, 7}) {
        const PairIndexer ix(n);
        CHECK(ix.count() == n * (n - 1) / 2);
        for (int alpha = 0; alpha < ix.count(); ++alpha) {
            const auto [i, j] = ix.pair(alpha);
            CHECK(i < j);
            CHECK(ix.index(i, j) == alpha);
            CHECK(ix.sorted_index(j, i) == alpha);
            if (alpha > 0) CHECK(ix.pair(alpha - 1) < ix.pair(alpha));
        }
    }
    const PairIndexer ix(4);
    CHECK_THROWS_AS(ix.index(2, 2), dimension_error);
    CHECK_THROWS_AS(ix.index(3, 1), dimension_error);
    CHECK_THROWS_AS(ix.pair(6), dimension_error);
}
