#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "signspec/compound.hpp"
#include "signspec/matrix.hpp"
#include "signspec/relation.hpp"
#include "signspec/signsym.hpp"

namespace signspec {

inline constexpr double kDefaultPeripheralTol = 1e-7;

/// Full spectrum of a matrix with per-pair backward-error estimates.
/// Eigenvalues are sorted by decreasing modulus (ties by real part, then
/// imaginary part, both decreasing), which makes the report deterministic.
struct SpectralReport {
    std::vector<std::complex<double>> eigenvalues;
    std::vector<std::vector<std::complex<double>>> eigenvectors;
    std::vector<double> residuals;  // ||A v - lambda v||_2 per pair
    double rho = 0.0;               // max |lambda|
    std::vector<int> peripheral;    // indices with |lambda| >= rho (1 - peripheral tol)
    int h = 0;                      // imprimitivity index once computed, else 0
    bool converged = true;          // QR sweep budget (100 n) was enough
    bool residual_ok = true;        // every residual <= residual_tol * max(1, norm)
    double norm = 0.0;              // Frobenius norm of the input

    double max_residual() const;
};

/// Eigenvalues via balancing, Householder reduction to Hessenberg form and
/// double-shift QR with deflation; eigenvectors and residuals via inverse
/// iteration on the original matrix. Deterministic for a fixed input.
SpectralReport eigenvalues(const Matrix& a, double residual_tol = 1e-9);

/// Number of eigenvalues on the spectral circle, cross-checked against the
/// gcd of cycle lengths of the |a| > zero_tol digraph; the two must agree.
/// Also asserts the peripheral-root and rotation-invariance structure.
/// Requires a matrix that is signature-similar to a nonnegative
/// irreducible one; throws precondition_error when the pattern is not
/// strongly connected and verification_error when the methods disagree.
int imprimitivity_index(const Matrix& a, const SpectralReport& report,
                        double zero_tol = 0.0, double peripheral_tol = kDefaultPeripheralTol);

enum class SpectralCase { two_positive_leading, trident_h3, inapplicable };

const char* to_string(SpectralCase c);

/// Verdict of the peripheral-spectrum analysis, together with everything
/// the analysis computed along the way (partitions, relation, order,
/// spectra), so reports need not recompute.
struct Classification {
    SpectralCase kind = SpectralCase::inapplicable;
    double lambda1 = 0.0;  // leading eigenvalue when a verdict was reached
    double lambda2 = 0.0;  // second eigenvalue in the transitive case
    int h_a = 0;
    int h_compound = 0;
    std::string witness;

    std::optional<SignPartition> j_a;
    std::optional<SignPartition> j_compound;
    std::optional<RelationSet> order_relation;
    std::optional<bool> order_transitive;
    std::optional<Permutation> order;  // recovered when transitive
    std::optional<SpectralReport> spectrum;
    std::optional<SpectralReport> compound_spectrum;
};

struct ClassifyOptions {
    double input_zero_band = 0.0;  // sign/irreducibility band for the input itself
    double peripheral_tol = kDefaultPeripheralTol;
};

/// Decides between the two-positive-leading-eigenvalue case and the
/// three-peripheral-eigenvalue case from the sign partitions of the matrix
/// and its second compound; inapplicability is an outcome, not an error.
/// Every verdict is verified against the computed spectrum.
Classification classify(const Matrix& a, const ClassifyOptions& opts = {});

/// Result of matching the spectrum of a w-matrix against the pairwise
/// products of the eigenvalues of the base matrix.
struct SpectrumMatch {
    bool ok = false;
    double worst = 0.0;  // largest pairing distance
    double scale = 0.0;  // rho(a)^2 reference scale
    std::string diagnostic;
};

/// Checks that the eigenvalue multiset of w_matrix(a,w) equals the multiset
/// of products lambda_i lambda_j (i < j) within tol * rho(a)^2.
SpectrumMatch check_pair_product_spectrum(const Matrix& a, const RelationSet& w,
                                          double tol = 1e-6);

/// Greedy nearest-pair matching of two equal-size complex multisets;
/// returns the largest matched distance.
double match_complex_multisets(std::vector<std::complex<double>> xs,
                               std::vector<std::complex<double>> ys);

/// True when the listed values agree with {modulus * e^{2 pi i k / count}}
/// up to `tol` under greedy matching.
bool matches_root_ring(const std::vector<std::complex<double>>& values, double modulus,
                       int count, double tol);

}  // namespace signspec
