#include "signspec/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "signspec/io.hpp"

namespace signspec {

namespace {

using ordered_json = nlohmann::ordered_json;

double r12(double x) { return round_significant(x, 12); }

ordered_json partition_json(const SignPartition& p) {
    ordered_json j;
    ordered_json members = ordered_json::array();
    for (int m : p.members) members.push_back(m + 1);
    j["members"] = std::move(members);
    j["strict"] = p.strict;
    j["alternatives"] = p.alternatives_count;
    j["unique_up_to_complement"] = p.unique_up_to_complement;
    j["universe"] = p.universe_size;
    return j;
}

ordered_json relation_json(const RelationSet& w) {
    ordered_json j;
    ordered_json pairs = ordered_json::array();
    for (auto [a, b] : w.offdiagonal_pairs()) pairs.push_back(ordered_json::array({a + 1, b + 1}));
    j["pairs"] = std::move(pairs);
    j["transitive"] = is_transitive(w);
    return j;
}

ordered_json spectrum_json(const SpectralReport& r) {
    ordered_json j;
    ordered_json eigs = ordered_json::array();
    for (const auto& v : r.eigenvalues) eigs.push_back(ordered_json::array({r12(v.real()), r12(v.imag())}));
    j["eigenvalues"] = std::move(eigs);
    j["rho"] = r12(r.rho);
    ordered_json periph = ordered_json::array();
    for (int idx : r.peripheral) periph.push_back(idx + 1);
    j["peripheral"] = std::move(periph);
    if (r.h > 0) j["h"] = r.h;
    ordered_json res = ordered_json::array();
    for (double x : r.residuals) res.push_back(r12(x));
    j["residuals"] = std::move(res);
    j["converged"] = r.converged;
    j["residual_ok"] = r.residual_ok;
    return j;
}

ordered_json approx_json(const ApproxSequence& s) {
    ordered_json j;
    ordered_json steps = ordered_json::array();
    for (const ApproxStep& st : s.steps) {
        ordered_json step;
        step["epsilon"] = r12(st.epsilon);
        step["distance"] = r12(st.distance);
        ordered_json cert;
        cert["certified"] = st.certificate.certified();
        cert["min_entry"] = r12(st.certificate.min_entry);
        cert["min_compound_entry"] = r12(st.certificate.min_compound_entry);
        cert["strict_partition"] = st.certificate.partition_strict;
        cert["compound_strict_partition"] = st.certificate.compound_partition_strict;
        cert["fallback"] = st.certificate.fallback_used;
        if (st.certificate.fallback_used) cert["fallback_eta"] = r12(st.certificate.fallback_eta);
        step["certificate"] = std::move(cert);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["converged_norm"] = r12(s.converged_norm);
    j["goal"] = r12(s.goal);
    j["complete"] = s.complete;
    if (!s.failure.empty()) j["failure"] = s.failure;
    return j;
}

ordered_json inapplicable(const std::string& why) {
    ordered_json j;
    j["inapplicable"] = why;
    return j;
}

std::string order_text(const Permutation& theta) {
    std::string s;
    for (int i = 0; i < theta.size(); ++i) {
        if (i) s += " < ";
        s += std::to_string(theta(i) + 1);
    }
    return s;
}

std::string render_trace(const AnalysisReport& r) {
    std::ostringstream out;
    const Classification& c = r.classification;
    out << "input digest " << r.input_digest << ", n = " << r.n << "\n";
    if (c.order_relation) {
        out << "combined pair relation:\n" << relation_grid(*c.order_relation);
        if (c.order) out << "recovered order: " << order_text(*c.order) << "\n";
    }
    out << c.witness;
    if (r.approx_requested) {
        if (r.approx) {
            out << "approximation steps (epsilon, distance, certified):\n";
            for (const ApproxStep& st : r.approx->steps)
                out << "  " << format_significant(st.epsilon, 6) << "  "
                    << format_significant(st.distance, 6) << "  "
                    << (st.certificate.certified() ? "yes" : "NO")
                    << (st.certificate.fallback_used ? " (fallback)" : "") << "\n";
            if (!r.approx->complete) out << "approximation failed: " << r.approx->failure << "\n";
        } else {
            out << "approximation skipped: " << r.approx_skipped_reason << "\n";
        }
    }
    return out.str();
}

}  // namespace

AnalysisReport analyze(const Matrix& a, const AnalysisOptions& opts) {
    AnalysisReport r;
    r.input_digest = matrix_digest(a);
    r.n = a.size();
    ClassifyOptions copts;
    copts.input_zero_band = opts.zero_band;
    r.classification = classify(a, copts);
    r.approx_requested = opts.run_approx;
    if (opts.run_approx) {
        try {
            r.approx = approximate_jss(a);
        } catch (const precondition_error& e) {
            r.approx_skipped_reason = e.what();
        } catch (const error& e) {
            r.approx_skipped_reason = e.what();
        }
    }
    if (opts.trace) r.trace_text = render_trace(r);
    return r;
}

std::string report_to_json(const AnalysisReport& r) {
    const Classification& c = r.classification;
    ordered_json j;
    j["schema"] = 1;
    j["input"] = ordered_json{{"digest", r.input_digest}, {"n", r.n}};

    ordered_json sign;
    sign["matrix"] = c.j_a ? partition_json(*c.j_a)
                           : inapplicable("no sign partition for the matrix");
    sign["compound"] = c.j_compound ? partition_json(*c.j_compound)
                                    : inapplicable("no sign partition for the second compound");
    j["sign_analysis"] = std::move(sign);

    j["relation"] = c.order_relation ? relation_json(*c.order_relation)
                                     : inapplicable("requires sign partitions of matrix and compound");
    j["permutation"] = [&]() -> ordered_json {
        if (!c.order) {
            return inapplicable(c.order_transitive.has_value() && !*c.order_transitive
                                    ? "the pair relation is not transitive"
                                    : "requires a transitive pair relation");
        }
        ordered_json p;
        ordered_json image = ordered_json::array();
        for (int i = 0; i < c.order->size(); ++i) image.push_back((*c.order)(i) + 1);
        p["image"] = std::move(image);
        p["order"] = order_text(*c.order);
        return p;
    }();

    j["spectrum"] = c.spectrum ? spectrum_json(*c.spectrum) : inapplicable("empty matrix");
    j["compound_spectrum"] = c.compound_spectrum ? spectrum_json(*c.compound_spectrum)
                                                 : inapplicable("dimension below 2");

    ordered_json cls;
    cls["case"] = to_string(c.kind);
    if (c.kind == SpectralCase::two_positive_leading) {
        cls["lambda1"] = r12(c.lambda1);
        cls["lambda2"] = r12(c.lambda2);
    } else if (c.kind == SpectralCase::trident_h3) {
        cls["lambda1"] = r12(c.lambda1);
    }
    if (c.h_a > 0) cls["h_matrix"] = c.h_a;
    if (c.h_compound > 0) cls["h_exterior_square"] = c.h_compound;
    cls["witness"] = c.witness;
    j["classification"] = std::move(cls);

    if (!r.approx_requested)
        j["approx"] = inapplicable("not requested");
    else if (r.approx)
        j["approx"] = approx_json(*r.approx);
    else
        j["approx"] = inapplicable(r.approx_skipped_reason);

    return j.dump(2) + "\n";
}

namespace {

int run_enumerate(int n, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (n < 1 || n > 6) {
        err << "enumeration supports 1 <= n <= 6\n";
        return 4;
    }
    long long total = 0, transitive = 0;
    enumerate_relations(n, [&](const RelationSet& w) {
        ++total;
        if (is_transitive(w)) ++transitive;
    });
    ordered_json j;
    j["schema"] = 1;
    j["enumerate"] = ordered_json{{"n", n}, {"total", total}, {"transitive", transitive}};
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write '" << out_path << "'\n";
            return 4;
        }
        f << text;
    } else {
        out << text;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sign-structure and peripheral-spectrum analysis of real square matrices"};
    app.name("signspec");
    std::string in_path, format = "auto", out_path;
    double tol = 0.0;
    bool do_approx = false, do_trace = false;
    int enumerate_n = 0;
    app.add_option("--in", in_path, "input matrix file");
    app.add_option("--format", format, "input format: csv, json or auto")
        ->check(CLI::IsMember({"csv", "json", "auto"}));
    app.add_option("--out", out_path, "write the JSON report to this path");
    app.add_option("--tol", tol, "zero band for sign and irreducibility tests on the input");
    app.add_flag("--approx", do_approx, "run the certified approximation sequence");
    app.add_flag("--trace", do_trace, "print a human-readable walk-through to stderr");
    app.add_option("--enumerate", enumerate_n, "count relation sets for the given dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 4;
    }

    if (enumerate_n > 0 && in_path.empty()) return run_enumerate(enumerate_n, out_path, out, err);
    if (enumerate_n > 0 || in_path.empty()) {
        err << "exactly one of --in or --enumerate is required\n";
        return 4;
    }

    Matrix a;
    try {
        a = load_matrix(in_path, format);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }

    AnalysisOptions opts;
    opts.zero_band = tol;
    opts.run_approx = do_approx;
    opts.trace = do_trace;
    AnalysisReport report;
    try {
        report = analyze(a, opts);
    } catch (const error& e) {
        err << "solver error: " << e.what() << "\n";
        return 3;
    }
    if (do_trace) err << report.trace_text;
    const std::string text = report_to_json(report);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write '" << out_path << "'\n";
            return 4;
        }
        f << text;
    } else {
        out << text;
    }
    return 0;
}

}  // namespace signspec
