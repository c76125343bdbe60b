// csdiag: batch driver for the charged-string diagram library.
//
// Subcommands run the verification suites and emit CheckReports (one JSON
// object per line behind --json, a human summary on stdout). `eval`
// normalizes a diagram document and prints its value when closed.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cs/checks.hpp"

namespace {

int emit_reports(const std::vector<cs::CheckReport>& reports,
                 const std::string& jsonPath, bool quiet) {
    if (!jsonPath.empty()) {
        std::ofstream f(jsonPath, std::ios::binary);
        if (!f) {
            std::cerr << "csdiag: cannot open " << jsonPath
                      << " for writing\n";
            return 2;
        }
        f << cs::reports_to_lines(reports);
    }
    int failed = 0;
    for (const auto& r : reports) {
        if (!r.pass) ++failed;
        if (!quiet)
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.checkId << " "
                      << r.metrics.dump() << "\n";
        else if (!r.pass)
            std::cout << "FAIL " << r.checkId << " "
                      << cs::report_to_json(r).dump() << "\n";
    }
    if (!quiet)
        std::cout << reports.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int run_eval(const std::string& file, const std::string& jsonPath,
             bool quiet) {
    std::string text;
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(file, std::ios::binary);
        if (!f) {
            std::cerr << "csdiag: cannot read " << file << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    cs::ChargedDiagram doc = cs::parse_diagram(text);
    auto normalized = cs::normalize(cs::DiagramSum(doc));
    cs::Json out;
    out["closed"] = doc.num_points() == 0;
    if (doc.num_points() == 0) {
        auto value = cs::eval_closed(normalized);
        auto z = value.to_complex();
        out["value"] = cs::scalar_to_json(value);
        out["valueText"] = value.to_string();
        out["numeric"] = cs::Json::array({z.real(), z.imag()});
        if (!quiet)
            std::cout << value.to_string() << " = " << z.real()
                      << (z.imag() < 0 ? " - " : " + ")
                      << std::abs(z.imag()) << "i\n";
    } else {
        cs::Json terms = cs::Json::array();
        for (const auto& term : normalized.terms())
            terms.push_back(cs::diagram_to_json(term));
        out["terms"] = std::move(terms);
        if (!quiet)
            std::cout << normalized.terms().size()
                      << " normal-form term(s)\n";
    }
    if (!jsonPath.empty()) {
        std::ofstream f(jsonPath, std::ios::binary);
        if (!f) {
            std::cerr << "csdiag: cannot open " << jsonPath
                      << " for writing\n";
            return 2;
        }
        f << out.dump() << "\n";
    } else if (quiet) {
        std::cout << out.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"charged-string diagram calculus verification driver"};
    app.require_subcommand(1);

    cs::CheckOptions opt;
    std::string jsonPath;
    bool quiet = false;
    app.add_option("--d", opt.d, "restrict to one qudit order");
    app.add_option("--seed", opt.seed, "base RNG seed (default 7)");
    app.add_option("--samples", opt.samples,
                   "override per-check sample counts");
    app.add_option("--tol", opt.tol, "override per-check tolerances");
    app.add_option("--json", jsonPath, "write reports to this file");
    app.add_flag("--quiet", quiet, "suppress the human summary");

    auto* evalCmd =
        app.add_subcommand("eval", "normalize/evaluate a diagram document");
    std::string evalFile;
    evalCmd->add_option("file", evalFile,
                        "diagram document path ('-' for stdin)")
        ->required();

    auto* qfaCmd = app.add_subcommand(
        "qfa", "norm/positivity/entropy inequality suites");
    std::string qfaMode = "all";
    qfaCmd->add_option("mode", qfaMode, "hy | schur | entropy | uncertainty")
        ->check(CLI::IsMember({"hy", "schur", "entropy", "uncertainty",
                               "all"}));

    auto* sixjCmd = app.add_subcommand("sixj", "6j self-duality suite");
    std::string category = "all";
    sixjCmd->add_option("--category", category, "zd | fib | all")
        ->check(CLI::IsMember({"zd", "fib", "all"}));

    std::vector<CLI::App*> subs = {evalCmd, qfaCmd, sixjCmd};
    subs.push_back(app.add_subcommand("sft", "string Fourier transform suite"));
    subs.push_back(app.add_subcommand("gates", "dictionary and Pauli suite"));
    subs.push_back(app.add_subcommand("rp", "reflection positivity suite"));
    subs.push_back(app.add_subcommand("states", "quon state suite"));
    subs.push_back(app.add_subcommand("braids", "parafermion braid suite"));
    subs.push_back(app.add_subcommand("all", "full verification suite"));
    for (auto* sub : subs) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "eval") return run_eval(evalFile, jsonPath, quiet);
        std::vector<cs::CheckReport> reports;
        if (cmd == "sft") reports = cs::check_sft(opt);
        else if (cmd == "gates") reports = cs::check_gates(opt);
        else if (cmd == "qfa") reports = cs::check_qfa(opt, qfaMode);
        else if (cmd == "rp") reports = cs::check_rp(opt);
        else if (cmd == "states") reports = cs::check_states(opt);
        else if (cmd == "braids") reports = cs::check_braids(opt);
        else if (cmd == "sixj") {
            reports = cs::check_sixj(opt);
            if (category != "all") {
                const std::string want = category == "zd"
                                             ? "sixj.pointed-cyclic"
                                             : "sixj.fibonacci";
                std::erase_if(reports, [&](const cs::CheckReport& r) {
                    return r.checkId != want;
                });
                if (reports.empty()) {
                    std::cerr << "csdiag: category '" << category
                              << "' is not available in this build\n";
                    return 2;
                }
            }
        } else {
            reports = cs::check_all(opt);
        }
        return emit_reports(reports, jsonPath, quiet);
    } catch (const std::invalid_argument& e) {
        std::cerr << "csdiag: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "csdiag: " << e.what() << "\n";
        return 1;
    }
}
