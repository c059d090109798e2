#pragma once

#include <utility>
#include <vector>

#include "signspec/errors.hpp"

namespace signspec {

/// Bijection between alpha in {0..C(n,2)-1} and the sorted index pairs
/// (i,j), i < j, enumerated lexicographically.
class PairIndexer {
public:
    explicit PairIndexer(int n);

    int dimension() const noexcept { return n_; }
    int count() const noexcept { return static_cast<int>(pairs_.size()); }

    std::pair<int, int> pair(int alpha) const;

    /// Lexicographic number of (i,j); requires i < j.
    int index(int i, int j) const;

    /// Lexicographic number of the sorted version of (i,j); requires i != j.
    int sorted_index(int i, int j) const;

    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> lookup_;  // n*n table, -1 off the strict upper triangle
};

}  // namespace signspec
