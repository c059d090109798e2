#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "signspec/matrix.hpp"

namespace signspec {

/// Bipartition of {0..universe_size-1} into `members` and its complement.
/// A partition and its complement describe the same split of the index
/// set; the canonical representative excludes the smallest index of every
/// constraint-graph component.
struct SignPartition {
    int universe_size = 0;
    std::set<int> members;
    bool strict = false;
    bool unique_up_to_complement = false;
    int components = 0;
    /// Number of valid partitions counted up to complement, 2^(components-1);
    /// saturates at the unsigned 64-bit maximum.
    unsigned long long alternatives_count = 1;

    /// Plain subset wrapper without detection metadata.
    static SignPartition subset(int universe, std::set<int> members);

    bool contains(int i) const { return members.count(i) != 0; }
    /// True when exactly one of i, j lies in `members`.
    bool split(int i, int j) const { return contains(i) != contains(j); }
    std::set<int> complement() const;
    /// Set equality up to complement.
    bool matches(const std::set<int>& other) const;
};

enum class SignDefect { none, zero_entry, sign_conflict, negative_diagonal };

const char* to_string(SignDefect d);

/// Outcome of a sign-partition search: the partition, or the defect that
/// rules one out together with a witness (entry position or an odd
/// constraint cycle).
struct SignDetection {
    std::optional<SignPartition> partition;
    SignDefect defect = SignDefect::none;
    std::string witness;
    std::vector<int> conflict_cycle;

    explicit operator bool() const { return partition.has_value(); }
};

/// Sign of x with a dead band: 0 whenever |x| <= band.
int sign_with_band(double x, double band);

/// Default dead band for compounds and other computed matrices:
/// 1e-12 * max|a_ij|. Parsed inputs should use band 0 (exact signs).
double default_zero_band(const Matrix& a);

/// Finds the partition certifying that negative entries occur exactly on
/// split index pairs and every entry is nonzero. Fails with zero_entry,
/// negative_diagonal or sign_conflict.
SignDetection detect_strict(const Matrix& a, double zero_band = 0.0);

/// Like detect_strict, but zero entries impose no constraint: negative
/// entries must lie on split pairs and positive entries on unsplit ones.
SignDetection detect_weak(const Matrix& a, double zero_band = 0.0);

/// Diagonal signature with -1 exactly on the partition members; conjugating
/// by it makes the matrix entrywise positive (strict) or nonnegative (weak).
SignatureMatrix signature_from_partition(const SignPartition& j);

/// Re-checks the definitional inequalities entry by entry; the independent
/// oracle for both detectors.
bool verify_partition(const Matrix& a, const SignPartition& j, bool strict,
                      double zero_band = 0.0);

}  // namespace signspec
