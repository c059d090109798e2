#include "signspec/approx.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "signspec/compound.hpp"
#include "signspec/signsym.hpp"

namespace signspec {

std::vector<double> default_epsilon_schedule() {
    // Harmonic in epsilon, geometric in the kernel parameter exp(-1/eps).
    // A 2^-k schedule makes the kernel decay double-exponentially and jumps
    // straight past the last widths double precision can still certify.
    std::vector<double> eps;
    eps.reserve(60);
    for (int k = 1; k <= 60; ++k) eps.push_back(1.0 / k);
    return eps;
}

Matrix smoothing_kernel(int n, double epsilon) {
    if (n < 1) throw dimension_error("kernel dimension must be positive");
    if (!(epsilon > 0.0)) throw precondition_error("kernel width must be positive");
    const double q = std::exp(-1.0 / epsilon);
    Matrix g(n);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const double d = static_cast<double>(i - j);
            g(i, j) = std::pow(q, d * d);
            row += g(i, j);
        }
        for (int j = 0; j < n; ++j) g(i, j) /= row;
    }
    return g;
}

namespace {

// Certification of one candidate: raw positivity of the smoothed matrix and
// its compound, plus the strict detector on the mapped-back approximant.
StepCertificate certify(const Matrix& smoothed, const Matrix& mapped_back) {
    StepCertificate cert;
    cert.min_entry = smoothed.min_entry();
    cert.entrywise_positive = cert.min_entry > 0.0;
    const Matrix comp = second_compound(smoothed);
    cert.min_compound_entry = comp.min_entry();
    cert.compound_positive = cert.min_compound_entry > 0.0;
    if (cert.entrywise_positive && cert.compound_positive) {
        cert.partition_strict = static_cast<bool>(detect_strict(mapped_back));
        cert.compound_partition_strict =
            static_cast<bool>(detect_strict(second_compound(mapped_back)));
    }
    return cert;
}

}  // namespace

ApproxSequence approximate_nonnegative(const Matrix& a, const RelationSet& w,
                                       const std::vector<double>& epsilons, double goal) {
    const int n = a.size();
    if (n < 2) throw dimension_error("approximation requires n >= 2");
    if (w.size() != n) throw dimension_error("relation dimension does not match the matrix");
    if (a.min_entry() < 0.0)
        throw precondition_error("approximation target must be entrywise nonnegative");
    if (!is_transitive(w))
        throw precondition_error("the pair relation is not transitive; normalization by a "
                                 "permutation is unavailable");

    const Permutation theta = permutation_from_w(w);
    const Permutation theta_inv = theta.inverse();
    const Matrix p = conjugate_permutation(a, theta);
    {
        const Matrix pc = second_compound(p);
        if (pc.min_entry() < -default_zero_band(pc))
            throw precondition_error(
                "the normalized matrix has a negative second compound entry; the supplied "
                "relation does not match the sign structure");
    }

    ApproxSequence seq;
    seq.target = a;
    seq.goal = goal;
    double prev = std::numeric_limits<double>::infinity();
    for (const double eps : epsilons) {
        if (!(eps > 0.0)) continue;
        if (std::exp(-1.0 / eps) == 0.0) break;  // kernel underflowed to the identity
        const Matrix g = smoothing_kernel(n, eps);
        Matrix smoothed = g * p * g;
        Matrix candidate = conjugate_permutation(smoothed, theta_inv);
        StepCertificate cert = certify(smoothed, candidate);
        if (!cert.certified()) {
            // rank-repair retry: nudge toward the strictly totally positive
            // kernel, with the nudge tied to the current epsilon
            const double eta = eps * 1e-3 * (p.max_abs() + 1.0);
            Matrix repaired = p;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) repaired(i, j) += eta * g(i, j);
            smoothed = g * repaired * g;
            candidate = conjugate_permutation(smoothed, theta_inv);
            StepCertificate retry = certify(smoothed, candidate);
            retry.fallback_used = true;
            retry.fallback_eta = eta;
            cert = retry;
        }
        if (!cert.certified()) continue;
        const double dist = max_abs_diff(candidate, a);
        if (dist > prev) continue;  // keep the distance monotone
        prev = dist;
        seq.steps.push_back(ApproxStep{eps, std::move(candidate), dist, cert});
        if (dist <= goal) break;
    }

    if (seq.steps.empty()) {
        seq.complete = false;
        seq.failure =
            "no epsilon in the budget produced a certified strictly positive approximant with a "
            "strictly positive second compound";
    } else {
        seq.converged_norm = seq.steps.back().distance;
        seq.complete = seq.converged_norm <= goal;
        if (!seq.complete)
            seq.failure = "certification reached distance " + std::to_string(seq.converged_norm) +
                          " but failed for every smaller epsilon in the budget (goal " +
                          std::to_string(goal) + ")";
    }
    return seq;
}

ApproxSequence approximate_jss(const Matrix& a, const std::vector<double>& epsilons, double goal) {
    const int n = a.size();
    if (n < 2) throw dimension_error("approximation requires n >= 2");

    const SignDetection da = detect_weak(a);
    if (!da)
        throw precondition_error(std::string("target admits no sign partition (") +
                                 to_string(da.defect) + ": " + da.witness + ")");
    const Matrix c = second_compound(a);
    const SignDetection dc = detect_weak(c, default_zero_band(c));
    if (!dc)
        throw precondition_error(std::string("target compound admits no sign partition (") +
                                 to_string(dc.defect) + ": " + dc.witness + ")");
    const PairIndexer ix(n);
    const RelationSet what = w_hat(*da.partition, *dc.partition, ix);
    if (!is_transitive(what))
        throw precondition_error("the combined pair relation is not transitive; certified "
                                 "approximation is unavailable for this target");

    const SignatureMatrix d = signature_from_partition(*da.partition);
    const Matrix nonneg = conjugate_signature(a, d);

    ApproxSequence inner = approximate_nonnegative(nonneg, what, epsilons, goal);
    ApproxSequence seq;
    seq.target = a;
    seq.goal = goal;
    seq.complete = inner.complete;
    seq.failure = inner.failure;
    for (ApproxStep& step : inner.steps) {
        ApproxStep mapped;
        mapped.epsilon = step.epsilon;
        mapped.approximant = conjugate_signature(step.approximant, d);
        mapped.distance = max_abs_diff(mapped.approximant, a);
        mapped.certificate = step.certificate;
        // conjugation flips signs only; re-run the strict detector on the
        // mapped-back step and its compound
        mapped.certificate.partition_strict = static_cast<bool>(detect_strict(mapped.approximant));
        mapped.certificate.compound_partition_strict =
            static_cast<bool>(detect_strict(second_compound(mapped.approximant)));
        if (!mapped.certificate.certified()) {
            seq.complete = false;
            seq.failure = "a mapped-back step lost its strict sign partition";
            break;
        }
        seq.steps.push_back(std::move(mapped));
    }
    if (!seq.steps.empty()) seq.converged_norm = seq.steps.back().distance;
    return seq;
}

}  // namespace signspec
