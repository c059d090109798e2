#include <doctest.h>

#include <fstream>
#include <sstream>

#include "common.hpp"
#include "signspec/io.hpp"
#include "signspec/report.hpp"

using namespace signspec;

namespace {

int cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::vector<const char*> argv{"signspec"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

std::string fixture(const char* name) {
    return std::string(SIGNSPEC_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analysis report carries the full pipeline for the mixed-sign fixture") {
    const AnalysisReport r = analyze(testutil::mixed_sign_3x3());
    CHECK(r.n == 3);
    CHECK(r.classification.kind == SpectralCase::two_positive_leading);
    const std::string json = report_to_json(r);
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("two_positive_leading") != std::string::npos);
    CHECK(json.find("\"inapplicable\": \"not requested\"") != std::string::npos);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    const Matrix a = testutil::mixed_sign_3x3();
    AnalysisOptions opts;
    opts.run_approx = true;
    const std::string first = report_to_json(analyze(a, opts));
    const std::string second = report_to_json(analyze(a, opts));
    CHECK(first == second);
}

TEST_CASE("inapplicable stages are marked, never omitted") {
    // sign conflict: no partitions, no relation, no permutation
    const AnalysisReport r = analyze(Matrix::from_rows({{1, 1}, {-1, 1}}));
    const std::string json = report_to_json(r);
    CHECK(json.find("\"classification\"") != std::string::npos);
    CHECK(json.find("inapplicable") != std::string::npos);
    CHECK(json.find("\"spectrum\"") != std::string::npos);  // spectrum itself is computable
    CHECK(json.find("\"relation\"") != std::string::npos);
    CHECK(json.find("\"permutation\"") != std::string::npos);
}

TEST_CASE("cli analyzes the csv fixtures end to end") {
    std::string out;
    CHECK(cli({"--in", fixture("mixed_sign_3x3.csv").c_str()}, &out) == 0);
    CHECK(out.find("two_positive_leading") != std::string::npos);
    CHECK(out.find("\"lambda1\": 15.10") != std::string::npos);

    std::string out5;
    CHECK(cli({"--in", fixture("cyclic_3x3.csv").c_str(), "--trace"}, &out5) == 0);
    CHECK(out5.find("trident_h3") != std::string::npos);

    std::string outj;
    CHECK(cli({"--in", fixture("mixed_sign_3x3.json").c_str(), "--format", "json"}, &outj) == 0);
    CHECK(outj.find("two_positive_leading") != std::string::npos);
}

TEST_CASE("cli runs are deterministic byte for byte") {
    std::string a, b;
    CHECK(cli({"--in", fixture("positive_symmetric_4x4.csv").c_str()}, &a) == 0);
    CHECK(cli({"--in", fixture("positive_symmetric_4x4.csv").c_str()}, &b) == 0);
    CHECK(a == b);
}

TEST_CASE("cli trace goes to stderr, report to stdout") {
    std::string out, err;
    CHECK(cli({"--in", fixture("cyclic_3x3.csv").c_str(), "--trace"}, &out, &err) == 0);
    CHECK(err.find("(i right, j up") != std::string::npos);  // the dot grid lives in the trace
    CHECK(out.find("(i right, j up") == std::string::npos);
    CHECK(out.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("cli enumeration counts relations and linear orders") {
    std::string out;
    CHECK(cli({"--enumerate", "3"}, &out) == 0);
    CHECK(out.find("\"total\": 8") != std::string::npos);
    CHECK(out.find("\"transitive\": 6") != std::string::npos);
}

TEST_CASE("cli --tol widens the zero band for the input signs") {
    // a dust entry at (1,2) conflicts under exact reading but vanishes
    // inside the band, restoring the fixture's classification
    const std::string path = std::string(SIGNSPEC_FIXTURE_DIR) + "/../.tmp_dust.csv";
    {
        std::ofstream f(path);
        f << "8.5,1e-15,6.1\n-5.6,3.2,-7.4\n6,-2.8,6.6\n";
    }
    std::string strictly, banded;
    CHECK(cli({"--in", path.c_str()}, &strictly) == 0);
    CHECK(strictly.find("\"case\": \"inapplicable\"") != std::string::npos);
    CHECK(cli({"--in", path.c_str(), "--tol", "1e-12"}, &banded) == 0);
    CHECK(banded.find("\"case\": \"two_positive_leading\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli exit codes: parse, flags") {
    std::string out, err;
    CHECK(cli({"--in", "/nonexistent/x.csv"}, &out, &err) == 2);
    CHECK(cli({}, &out, &err) == 4);
    CHECK(cli({"--in", fixture("bad.csv").c_str()}, &out, &err) == 2);
    CHECK(cli({"--bogus-flag"}, &out, &err) == 4);
    CHECK(cli({"--enumerate", "9"}, &out, &err) == 4);
}

TEST_CASE("cli --approx embeds the certified schedule") {
    std::string out;
    CHECK(cli({"--in", fixture("mixed_sign_3x3.csv").c_str(), "--approx"}, &out) == 0);
    CHECK(out.find("\"approx\"") != std::string::npos);
    CHECK(out.find("\"complete\": true") != std::string::npos);

    // trident fixture: approximation must be reported as skipped, exit still 0
    std::string out5;
    CHECK(cli({"--in", fixture("cyclic_3x3.csv").c_str(), "--approx"}, &out5) == 0);
    CHECK(out5.find("not transitive") != std::string::npos);
}

TEST_CASE("cli --out writes the same bytes to a file") {
    const std::string path = std::string(SIGNSPEC_FIXTURE_DIR) + "/../.tmp_report.json";
    std::string out;
    CHECK(cli({"--in", fixture("mixed_sign_3x3.csv").c_str(), "--out", path.c_str()}, &out) == 0);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string direct;
    CHECK(cli({"--in", fixture("mixed_sign_3x3.csv").c_str()}, &direct) == 0);
    CHECK(buf.str() == direct);
    std::remove(path.c_str());
}

TEST_CASE("number formatting is locale-free and rounds to 12 significant digits") {
    CHECK(format_significant(15.1019613, 6) == "15.102");
    CHECK(round_significant(1.0000000000004) == 1.0);
    CHECK(round_significant(-2.5) == -2.5);
}
