#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "signspec/approx.hpp"
#include "signspec/matrix.hpp"
#include "signspec/spectral.hpp"

namespace signspec {

struct AnalysisOptions {
    double zero_band = 0.0;  // sign/irreducibility band for the parsed input
    bool run_approx = false;
    bool trace = false;
};

/// Everything one analysis run produced. Fields that do not apply carry an
/// explicit reason instead of being silently absent.
struct AnalysisReport {
    std::string input_digest;
    int n = 0;
    Classification classification;
    std::optional<ApproxSequence> approx;
    std::string approx_skipped_reason;  // set when approximation was requested but inapplicable
    bool approx_requested = false;
    std::string trace_text;
};

AnalysisReport analyze(const Matrix& a, const AnalysisOptions& opts = {});

/// Deterministic JSON rendering: fixed field order, floats rounded to 12
/// significant digits. Identical input and options give identical bytes.
std::string report_to_json(const AnalysisReport& r);

/// Command-line front end; returns the process exit status.
/// 0 analysis done (including inapplicable verdicts), 2 parse failure,
/// 3 solver failure, 4 bad flags.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace signspec
