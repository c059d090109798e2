#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "signspec/matrix.hpp"
#include "signspec/pairs.hpp"
#include "signspec/signsym.hpp"

namespace signspec {

/// Reflexive, antisymmetric, connected binary relation on {0..n-1}: the
/// table contains every diagonal pair and exactly one orientation of each
/// off-diagonal pair. Transitive instances are exactly the linear orders.
class RelationSet {
public:
    /// The natural order: (i,j) with i <= j.
    static RelationSet natural_order(int n);

    /// Diagonal plus the given off-diagonal pairs; validates the
    /// orientation conditions.
    static RelationSet from_pairs(int n, const std::vector<std::pair<int, int>>& offdiag);

    /// Orientation word over the sorted pairs: bit alpha set keeps the
    /// alpha-th sorted pair, clear bit keeps its reverse.
    static RelationSet from_orientation_bits(int n, unsigned long long bits);

    int size() const noexcept { return n_; }
    bool contains(int i, int j) const;

    /// Off-diagonal members in lexicographic order of the literal pairs,
    /// e.g. (2,0) sorts after (0,1) by first component then second.
    std::vector<std::pair<int, int>> offdiagonal_pairs() const;

    /// The mirror relation with every off-diagonal pair reversed.
    RelationSet reversed() const;

    bool operator==(const RelationSet&) const = default;

private:
    RelationSet(int n, std::vector<char> table) : n_(n), table_(std::move(table)) {}

    int n_ = 0;
    std::vector<char> table_;
};

/// True iff (i,j), (j,k) in W implies (i,k) in W; equivalent to W being a
/// linear order.
bool is_transitive(const RelationSet& w);

/// Relation built from a partition of the pair numbers: (i,j) enters for
/// i < j when the pair number lies in the partition, and for i > j when
/// the number of the sorted pair does not.
RelationSet w_from_partition(const SignPartition& j, const PairIndexer& ix);

/// Inverse of w_from_partition: the numbers of the sorted pairs kept by w.
SignPartition partition_from_w(const RelationSet& w, const PairIndexer& ix);

/// Relation combining a partition of the indices with a partition of the
/// pair numbers: for i < j the pair enters when (i,j) is unsplit and its
/// number is a member, or split and its number is not; for i > j the two
/// conditions flip.
RelationSet w_hat(const SignPartition& j, const SignPartition& j_tilde, const PairIndexer& ix);

/// Recovers theta with (i,j) in W iff theta^-1(i) <= theta^-1(j) by
/// inserting each index after the last already-placed index preceding it.
/// Throws not_transitive_error when W is not a linear order.
Permutation permutation_from_w(const RelationSet& w);

/// (i,j) in W iff theta^-1(i) <= theta^-1(j); always transitive.
RelationSet w_from_permutation(const Permutation& theta);

/// Visits all 2^C(n,2) valid relation sets; n is capped at 6.
void enumerate_relations(int n, const std::function<void(const RelationSet&)>& visit);

/// Dot-grid rendering: first index on the horizontal axis, second index
/// growing upward, off-diagonal members filled.
std::string relation_grid(const RelationSet& w);

}  // namespace signspec
