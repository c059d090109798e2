#pragma once

#include <iosfwd>
#include <string>

#include "signspec/matrix.hpp"

namespace signspec {

/// Rows of comma-separated decimals, one row per line. Locale-independent:
/// decimal points only, no thousands separators.
Matrix parse_matrix_csv(std::istream& in);
Matrix parse_matrix_csv(const std::string& text);

/// {"n": int, "entries": [[...], ...]}.
Matrix parse_matrix_json(std::istream& in);
Matrix parse_matrix_json(const std::string& text);

/// format "csv", "json", or "auto" (by file extension, defaulting to csv).
Matrix load_matrix(const std::string& path, const std::string& format = "auto");

/// Nearest double with the given number of significant decimal digits.
double round_significant(double x, int digits = 12);

/// Shortest decimal rendering at the given significance.
std::string format_significant(double x, int digits = 12);

/// FNV-1a hash over a canonical rendering of the entries, as 16 hex digits.
std::string matrix_digest(const Matrix& a);

}  // namespace signspec
