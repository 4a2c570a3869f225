// Command-line front end: generate the graph families, run analysis
// suites, verify named theorems, and search for Hamilton cycles.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "midcube/midcube.hpp"

namespace {

using namespace midcube;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Target {
    Graph graph;
    std::optional<FamilySpec> family;
    std::string description;
};

// A target is either a "family:param" spec or a path to an edge-list file.
Target load_target(const std::string& arg) {
    try {
        const FamilySpec spec = parse_family_spec(arg);
        return {standard_graph(spec), spec, spec.to_string()};
    } catch (const std::invalid_argument&) {
        // fall through to file loading
    }
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("not a family spec and not a readable file: " + arg);
    return {Graph::from_edge_list(in), std::nullopt, arg};
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
    out << text;
}

int cmd_gen(const std::string& spec_arg, const std::string& format,
            const std::string& output_path) {
    const FamilySpec spec = parse_family_spec(spec_arg);
    const Graph g = standard_graph(spec);
    std::string text;
    if (format == "edges") {
        text = g.to_edge_list();
    } else if (format == "dot") {
        text = g.to_dot(spec.to_string());
    } else if (format == "json") {
        Json j = to_json(g);
        j["family"] = spec.to_string();
        text = j.dump(2) + "\n";
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    write_output(text, output_path);
    return kExitOk;
}

int cmd_analyze(const std::string& target_arg, const std::string& checks_csv,
                const std::string& output_path) {
    const Target target = load_target(target_arg);
    std::vector<std::string> checks;
    if (checks_csv.empty()) {
        checks = all_analysis_checks();
    } else {
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (std::find(all_analysis_checks().begin(), all_analysis_checks().end(), item) ==
                all_analysis_checks().end())
                throw std::invalid_argument("unknown check: " + item);
            checks.push_back(item);
        }
    }
    const AnalysisReport rep = analyze(target.graph, target.description, target.family, checks);
    write_output(rep.to_json().dump(2) + "\n", output_path);
    return rep.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& theorem, const std::string& target_arg,
               const std::string& output_path) {
    if (std::find(all_theorems().begin(), all_theorems().end(), theorem) == all_theorems().end())
        throw std::invalid_argument("unknown theorem: " + theorem);
    const Target target = load_target(target_arg);
    const VerifyOutcome outcome = verify_theorem(theorem, target.graph, target.family);
    Json j;
    j["schema"] = 1;
    j["theorem"] = theorem;
    j["target"] = target.description;
    j["holds"] = outcome.ok;
    j["details"] = outcome.details;
    write_output(j.dump(2) + "\n", output_path);
    return outcome.ok ? kExitOk : kExitCheckFailed;
}

int cmd_hamilton(const std::string& target_arg, std::uint64_t budget,
                 const std::string& output_path) {
    const Target target = load_target(target_arg);
    const HamiltonResult result = find_hamilton_cycle(target.graph, budget);
    if (result.status == HamiltonStatus::found &&
        !validate_hamilton_cycle(target.graph, result.cycle))
        throw std::logic_error("search returned an invalid cycle");
    Json j = to_json(result);
    j["target"] = target.description;
    write_output(j.dump(2) + "\n", output_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of middle cube graphs, odd graphs and their doubles"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string output_path;
    app.add_option("--output", output_path, "write output to a file instead of stdout");

    std::string gen_spec, gen_format = "edges";
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    gen->add_option("spec", gen_spec, "family spec, e.g. middle-cube:3")->required();
    gen->add_option("--format", gen_format, "edges | dot | json");

    std::string an_target, an_checks;
    auto* an = app.add_subcommand("analyze", "run analysis checks and emit a JSON report");
    an->add_option("target", an_target, "family spec or edge-list file")->required();
    an->add_option("--checks", an_checks, "comma-separated subset of: spectrum,diameter,drg,boundary,antipodal,hoffman");

    std::string ver_theorem, ver_target;
    auto* ver = app.add_subcommand("verify", "verify a named theorem on a target graph");
    ver->add_option("theorem", ver_theorem,
                    "double-charpoly | extended-charpoly | double-spectrum | eigenvector-lift | "
                    "distance-relations | diameter-bound | mqk-isomorphism | hoffman-identity | "
                    "boundary-identities")
        ->required();
    ver->add_option("target", ver_target, "family spec or edge-list file")->required();

    std::string ham_target;
    std::uint64_t ham_budget = 100'000'000;
    auto* ham = app.add_subcommand("hamilton", "search for a Hamilton cycle");
    ham->add_option("target", ham_target, "family spec or edge-list file")->required();
    ham->add_option("--budget", ham_budget, "node-expansion budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, gen_format, output_path);
        if (an->parsed()) return cmd_analyze(an_target, an_checks, output_path);
        if (ver->parsed()) return cmd_verify(ver_theorem, ver_target, output_path);
        if (ham->parsed()) return cmd_hamilton(ham_target, ham_budget, output_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
