#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stocenv/errors.hpp"
#include "stocenv/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw stocenv::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int state_index(const stocenv::StochasticMatrix& p, const std::string& label) {
    for (std::size_t i = 0; i < p.states.size(); ++i)
        if (p.states[i] == label) return static_cast<int>(i);
    throw stocenv::ParseError("unknown state label: " + label);
}

void emit(const nlohmann::json& report, bool pretty) {
    std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator-algebraic invariants of finite irreducible stochastic matrices"};
    app.require_subcommand(1);

    bool pretty = false, strict = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");
    app.add_flag("--json", "compact JSON output (default)");
    app.add_flag("--strict", strict, "exit 2 when any verdict is Indeterminate");

    std::string file_a, file_b, column_label, basepoint_label;
    unsigned long levels = 0;
    double tolerance = 1e-9;

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for one matrix");
    analyze->add_option("file", file_a, "matrix JSON file")->required();

    CLI::App* classify = app.add_subcommand("classify", "compare two matrices");
    classify->add_option("fileP", file_a, "first matrix JSON file")->required();
    classify->add_option("fileQ", file_b, "second matrix JSON file")->required();

    CLI::App* galg = app.add_subcommand("graph-algebra", "Cuntz-Krieger K-theory of the support");
    galg->add_option("file", file_a, "matrix JSON file")->required();

    CLI::App* fock = app.add_subcommand("fock-verify", "finite-level operator verification suite");
    fock->add_option("file", file_a, "matrix JSON file")->required();
    fock->add_option("--column", column_label, "column state label (default: all boundary states)");
    fock->add_option("--levels", levels, "truncation depth N (default 4*m0 + 2r)");
    fock->add_option("--tolerance", tolerance, "pass/fail tolerance (default 1e-9)");
    fock->add_option("--basepoint", basepoint_label, "basepoint state label (default: first state)");

    // Let --pretty/--json/--strict appear after the subcommand as well.
    for (CLI::App* sub : {analyze, classify, galg, fock}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        nlohmann::json report;
        if (app.got_subcommand(analyze)) {
            report = stocenv::analysis_report(stocenv::parse_input_text(read_file(file_a)));
        } else if (app.got_subcommand(classify)) {
            report = stocenv::classify_report(stocenv::parse_input_text(read_file(file_a)),
                                              stocenv::parse_input_text(read_file(file_b)));
        } else if (app.got_subcommand(galg)) {
            report = stocenv::graph_algebra_report(stocenv::parse_input_text(read_file(file_a)));
        } else if (app.got_subcommand(fock)) {
            stocenv::StochasticMatrix p = stocenv::parse_input_text(read_file(file_a));
            std::vector<int> columns;
            if (!column_label.empty()) columns.push_back(state_index(p, column_label));
            int basepoint = basepoint_label.empty() ? 0 : state_index(p, basepoint_label);
            report = stocenv::fock_report(p, columns, levels, tolerance, basepoint);
        }
        emit(report, pretty);
        if (strict && stocenv::report_has_indeterminate(report)) return 2;
        return 0;
    } catch (const stocenv::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const stocenv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
