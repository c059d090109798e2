#pragma once

#include <string>
#include <vector>

#include "signspec/matrix.hpp"
#include "signspec/relation.hpp"

namespace signspec {

/// Per-step verification record. A step counts as certified only when the
/// smoothed matrix is entrywise positive, its second compound is entrywise
/// positive, and the strict sign-partition detector confirms both the
/// mapped-back approximant and its compound.
struct StepCertificate {
    double min_entry = 0.0;
    double min_compound_entry = 0.0;
    bool entrywise_positive = false;
    bool compound_positive = false;
    bool partition_strict = false;
    bool compound_partition_strict = false;
    bool fallback_used = false;
    double fallback_eta = 0.0;

    bool certified() const {
        return entrywise_positive && compound_positive && partition_strict &&
               compound_partition_strict;
    }
};

struct ApproxStep {
    double epsilon = 0.0;
    Matrix approximant;
    double distance = 0.0;  // max-entry distance to the target
    StepCertificate certificate;
};

/// Certified approximation run. `complete` is true when certified steps
/// reached the requested distance goal; otherwise `failure` says how far
/// certification got and why it stopped.
struct ApproxSequence {
    Matrix target;
    std::vector<ApproxStep> steps;  // certified steps, distance non-increasing
    double converged_norm = 0.0;    // distance of the last accepted step
    double goal = 0.0;
    bool complete = false;
    std::string failure;
};

/// Width schedule 1, 1/2, 1/3, ..., 1/60: the kernel parameter exp(-1/eps)
/// then decays by a constant factor per step.
std::vector<double> default_epsilon_schedule();

inline constexpr double kDefaultApproxGoal = 1e-7;

/// Row-normalized Gaussian kernel g_ij = q^{(i-j)^2}, q = exp(-1/epsilon);
/// strictly totally positive, tends to the identity as epsilon -> 0.
Matrix smoothing_kernel(int n, double epsilon);

/// Smooths the permutation-normalized matrix between two kernel factors and
/// certifies every step: positive entries, positive second compound, strict
/// sign partitions on the mapped-back approximant and its compound. An
/// epsilon whose plain smoothing fails certification is retried once with a
/// rank-repair nudge toward the kernel before being skipped. The relation
/// must be transitive and the corresponding minor table nonnegative;
/// otherwise precondition_error.
ApproxSequence approximate_nonnegative(const Matrix& a, const RelationSet& w,
                                       const std::vector<double>& epsilons = default_epsilon_schedule(),
                                       double goal = kDefaultApproxGoal);

/// Factors the matrix through its sign partition, approximates the
/// nonnegative part over the combined pair relation, and conjugates each
/// step back, re-certifying strict sign symmetry of step and compound.
ApproxSequence approximate_jss(const Matrix& a,
                               const std::vector<double>& epsilons = default_epsilon_schedule(),
                               double goal = kDefaultApproxGoal);

}  // namespace signspec
