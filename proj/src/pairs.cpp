#include "signspec/pairs.hpp"

#include <string>

namespace signspec {

PairIndexer::PairIndexer(int n) : n_(n) {
    if (n < 0) throw dimension_error("pair indexer dimension must be nonnegative");
    pairs_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
    lookup_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            lookup_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                static_cast<int>(pairs_.size());
            pairs_.emplace_back(i, j);
        }
}

std::pair<int, int> PairIndexer::pair(int alpha) const {
    if (alpha < 0 || alpha >= count())
        throw dimension_error("pair number " + std::to_string(alpha) + " out of range");
    return pairs_[static_cast<std::size_t>(alpha)];
}

int PairIndexer::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i >= j)
        throw dimension_error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not a sorted pair");
    return lookup_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
}

int PairIndexer::sorted_index(int i, int j) const {
    if (i == j) throw dimension_error("no pair number for a diagonal pair");
    return i < j ? index(i, j) : index(j, i);
}

}  // namespace signspec
