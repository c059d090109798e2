#include "signspec/relation.hpp"

#include <algorithm>
#include <string>

namespace signspec {

namespace {

std::size_t cell(int i, int j, int n) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

void validate(const std::vector<char>& t, int n) {
    for (int i = 0; i < n; ++i) {
        if (!t[cell(i, i, n)]) throw relation_error("relation must contain the diagonal");
        for (int j = i + 1; j < n; ++j) {
            const bool fwd = t[cell(i, j, n)] != 0;
            const bool bwd = t[cell(j, i, n)] != 0;
            if (fwd == bwd)
                throw relation_error("relation must contain exactly one orientation of (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

}  // namespace

RelationSet RelationSet::natural_order(int n) {
    if (n < 0) throw dimension_error("relation dimension must be nonnegative");
    std::vector<char> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) t[cell(i, j, n)] = 1;
    return RelationSet(n, std::move(t));
}

RelationSet RelationSet::from_pairs(int n, const std::vector<std::pair<int, int>>& offdiag) {
    if (n < 0) throw dimension_error("relation dimension must be nonnegative");
    std::vector<char> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) t[cell(i, i, n)] = 1;
    for (auto [i, j] : offdiag) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw dimension_error("relation pair index out of range");
        t[cell(i, j, n)] = 1;
    }
    validate(t, n);
    return RelationSet(n, std::move(t));
}

RelationSet RelationSet::from_orientation_bits(int n, unsigned long long bits) {
    PairIndexer ix(n);
    if (ix.count() > 63) throw dimension_error("orientation word limited to 63 pairs");
    std::vector<std::pair<int, int>> off;
    off.reserve(static_cast<std::size_t>(ix.count()));
    for (int alpha = 0; alpha < ix.count(); ++alpha) {
        auto [i, j] = ix.pair(alpha);
        if (bits >> alpha & 1ull)
            off.emplace_back(i, j);
        else
            off.emplace_back(j, i);
    }
    return from_pairs(n, off);
}

bool RelationSet::contains(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw dimension_error("relation index out of range");
    return table_[cell(i, j, n_)] != 0;
}

std::vector<std::pair<int, int>> RelationSet::offdiagonal_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && table_[cell(i, j, n_)]) out.emplace_back(i, j);
    return out;  // row-major scan is already lexicographic
}

RelationSet RelationSet::reversed() const {
    std::vector<char> t(table_.size(), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (table_[cell(i, j, n_)]) t[cell(j, i, n_)] = 1;
    return RelationSet(n_, std::move(t));
}

bool is_transitive(const RelationSet& w) {
    const int n = w.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !w.contains(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (w.contains(j, k) && !w.contains(i, k)) return false;
        }
    return true;
}

RelationSet w_from_partition(const SignPartition& j, const PairIndexer& ix) {
    if (j.universe_size != ix.count())
        throw dimension_error("partition universe must equal the pair count");
    const int n = ix.dimension();
    std::vector<std::pair<int, int>> off;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const bool keep = a < b ? j.contains(ix.index(a, b)) : !j.contains(ix.index(b, a));
            if (keep) off.emplace_back(a, b);
        }
    return RelationSet::from_pairs(n, off);
}

SignPartition partition_from_w(const RelationSet& w, const PairIndexer& ix) {
    if (w.size() != ix.dimension())
        throw dimension_error("relation and pair indexer dimensions differ");
    std::set<int> members;
    for (int i = 0; i < w.size(); ++i)
        for (int j = i + 1; j < w.size(); ++j)
            if (w.contains(i, j)) members.insert(ix.index(i, j));
    return SignPartition::subset(ix.count(), std::move(members));
}

RelationSet w_hat(const SignPartition& j, const SignPartition& j_tilde, const PairIndexer& ix) {
    const int n = ix.dimension();
    if (j.universe_size != n) throw dimension_error("index partition universe must equal n");
    if (j_tilde.universe_size != ix.count())
        throw dimension_error("pair partition universe must equal the pair count");
    std::vector<std::pair<int, int>> off;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const bool split = j.split(a, b);
            const bool member = j_tilde.contains(ix.sorted_index(a, b));
            const bool keep = a < b ? (split ? !member : member) : (split ? member : !member);
            if (keep) off.emplace_back(a, b);
        }
    return RelationSet::from_pairs(n, off);
}

Permutation permutation_from_w(const RelationSet& w) {
    if (!is_transitive(w)) throw not_transitive_error("relation is not a linear order");
    const int n = w.size();
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        // Insert j after the last already-placed index that precedes it.
        int slot = 0;
        for (int k = 0; k < static_cast<int>(seq.size()); ++k)
            if (w.contains(seq[static_cast<std::size_t>(k)], j)) slot = k + 1;
        seq.insert(seq.begin() + slot, j);
    }
    return Permutation::from_image(std::move(seq));
}

RelationSet w_from_permutation(const Permutation& theta) {
    const int n = theta.size();
    const Permutation pos = theta.inverse();
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && pos(i) <= pos(j)) off.emplace_back(i, j);
    return RelationSet::from_pairs(n, off);
}

void enumerate_relations(int n, const std::function<void(const RelationSet&)>& visit) {
    if (n < 1 || n > 6) throw precondition_error("relation enumeration supports 1 <= n <= 6");
    const int m = n * (n - 1) / 2;
    for (unsigned long long bits = 0; bits < (1ull << m); ++bits)
        visit(RelationSet::from_orientation_bits(n, bits));
}

std::string relation_grid(const RelationSet& w) {
    const int n = w.size();
    std::string out;
    for (int j = n - 1; j >= 0; --j) {
        out += "j=" + std::to_string(j + 1) + " ";
        for (int i = 0; i < n; ++i) {
            out += ' ';
            out += (i != j && w.contains(i, j)) ? '*' : '.';
        }
        out += '\n';
    }
    out += "    ";
    for (int i = 0; i < n; ++i) out += " " + std::to_string((i + 1) % 10);
    out += "  (i right, j up; diagonal omitted)\n";
    return out;
}

}  // namespace signspec
