#include "signspec/io.hpp"

#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace signspec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view field, int row, int col) {
    field = trim(field);
    if (field.size() > 1 && field.front() == '+') field.remove_prefix(1);  // from_chars rejects it
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw parse_error("bad number '" + std::string(field) + "' at row " + std::to_string(row + 1) +
                          ", column " + std::to_string(col + 1));
    if (!std::isfinite(value))
        throw parse_error("non-finite entry at row " + std::to_string(row + 1));
    return value;
}

}  // namespace

Matrix parse_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::string_view rest = line;
        const int r = static_cast<int>(rows.size());
        while (true) {
            const std::size_t comma = rest.find(',');
            const std::string_view field = comma == std::string_view::npos ? rest : rest.substr(0, comma);
            row.push_back(parse_number(field, r, static_cast<int>(row.size())));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty matrix input");
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            throw parse_error("matrix must be square: row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    return Matrix::from_rows(rows);
}

Matrix parse_matrix_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_csv(in);
}

Matrix parse_matrix_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw parse_error("JSON matrix must be an object with \"n\" and \"entries\"");
    int n = 0;
    try {
        n = j.at("n").get<int>();
        const auto& entries = j.at("entries");
        if (!entries.is_array() || static_cast<int>(entries.size()) != n)
            throw parse_error("\"entries\" must hold n rows");
        std::vector<std::vector<double>> rows;
        rows.reserve(entries.size());
        for (const auto& row : entries) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw parse_error("every row must hold n numbers");
            rows.push_back(row.get<std::vector<double>>());
        }
        return Matrix::from_rows(rows);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON matrix: ") + e.what());
    }
}

Matrix parse_matrix_json(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_json(in);
}

Matrix load_matrix(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::string fmt = format;
    if (fmt == "auto") {
        const std::size_t dot = path.find_last_of('.');
        fmt = dot != std::string::npos && path.substr(dot) == ".json" ? "json" : "csv";
    }
    if (fmt == "csv") return parse_matrix_csv(in);
    if (fmt == "json") return parse_matrix_json(in);
    throw parse_error("unknown matrix format '" + format + "'");
}

std::string format_significant(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double round_significant(double x, int digits) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format_significant(x, digits).c_str(), nullptr);
}

std::string matrix_digest(const Matrix& a) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
    const auto mix = [&h](std::string_view s) {
        for (const char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
    };
    mix(std::to_string(a.size()));
    char buf[64];
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            std::snprintf(buf, sizeof buf, ";%.17g", a(i, j));
            mix(buf);
        }
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

}  // namespace signspec
