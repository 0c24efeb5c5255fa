#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geolp/io.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitUnbounded = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedProblem {
    geolp::Problem problem;
    bool from_min = false;
};

// Returns the parsed problem or exits with kExitParse.
LoadedProblem load_problem(const std::string& path) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kExitParse);
    }
    geolp::ParseResult parsed = geolp::parse_problem_text(*text);
    if (!parsed.ok()) {
        for (const geolp::ParseIssue& issue : parsed.issues)
            std::cerr << path << ":" << issue.line << ":" << issue.column << ": " << issue.message
                      << "\n";
        std::exit(kExitParse);
    }
    const auto issues = geolp::validate(*parsed.problem);
    if (!issues.empty()) {
        for (const geolp::ValidationIssue& issue : issues)
            std::cerr << path << ": " << issue.message << "\n";
        std::exit(kExitParse);
    }
    return {*std::move(parsed.problem), parsed.from_min};
}

// Minimization inputs are solved as negated maximizations; x is unchanged,
// the minimum itself is -z.
void print_min_note(bool from_min, geolp::OutputFormat format) {
    if (from_min && format == geolp::OutputFormat::Text)
        std::cout << "note: objective was 'min:'; values refer to the negated maximization "
                     "(minimum value = -z)\n";
}

geolp::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return geolp::OutputFormat::Json;
    if (name == "csv") return geolp::OutputFormat::Csv;
    return geolp::OutputFormat::Text;
}

int outcome_exit_code(const geolp::SolveOutcome& outcome) {
    if (std::holds_alternative<geolp::Solved>(outcome)) return kExitSolved;
    if (std::holds_alternative<geolp::Unbounded>(outcome)) return kExitUnbounded;
    return kExitDegenerate;
}

std::vector<geolp::GenSpec> load_spec_file(const std::string& path) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kExitParse);
    }
    nlohmann::json doc = nlohmann::json::parse(*text, nullptr, false);
    if (doc.is_discarded()) {
        std::cerr << path << ": invalid json\n";
        std::exit(kExitParse);
    }
    if (doc.is_object()) doc = nlohmann::json::array({doc});
    std::vector<geolp::GenSpec> specs;
    for (const auto& item : doc) {
        geolp::GenSpec spec;
        spec.n = item.value("n", spec.n);
        spec.m_inward = item.value("m_inward", spec.m_inward);
        spec.m_outward = item.value("m_outward", spec.m_outward);
        spec.coeff_min = item.value("coeff_min", spec.coeff_min);
        spec.coeff_max = item.value("coeff_max", spec.coeff_max);
        spec.resource_min = item.value("resource_min", spec.resource_min);
        spec.resource_max = item.value("resource_max", spec.resource_max);
        spec.include_box = item.value("box", spec.include_box);
        specs.push_back(spec);
    }
    if (specs.empty()) {
        std::cerr << path << ": spec file holds no generator specs\n";
        std::exit(kExitParse);
    }
    return specs;
}

std::vector<geolp::GenSpec> default_specs() {
    return {
        {0, 2, 3, 2, 0.1, 2.0, 1.0, 6.0, true},
        {0, 3, 5, 3, 0.1, 2.0, 1.0, 6.0, true},
        {0, 4, 4, 4, 0.1, 2.0, 1.0, 6.0, true},
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-iterative geometric solver for linear maximization, with exact oracles"};
    app.require_subcommand(1);

    std::string file;
    std::string format_name = "text";
    double epsilon = 1e-9;
    std::string criterion = "table";
    bool no_verify = false;

    auto* solve_cmd = app.add_subcommand("solve", "Run the geometric heuristic on a problem file");
    solve_cmd->add_option("file", file, "problem file")->required();
    solve_cmd->add_option("--epsilon", epsilon, "criterion comparison slack");
    solve_cmd->add_option("--criterion", criterion, "printed|table")
        ->check(CLI::IsMember({"printed", "table"}));
    solve_cmd->add_flag("--no-verify", no_verify, "skip the feasibility report");
    solve_cmd->add_option("--format", format_name, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string method = "enum";
    auto* oracle_cmd = app.add_subcommand("oracle", "Solve exactly by enumeration or simplex");
    oracle_cmd->add_option("file", file, "problem file")->required();
    oracle_cmd->add_option("--method", method, "enum|simplex")
        ->check(CLI::IsMember({"enum", "simplex"}));
    oracle_cmd->add_option("--format", format_name, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* compare_cmd = app.add_subcommand("compare", "Heuristic vs oracle on one problem file");
    compare_cmd->add_option("file", file, "problem file")->required();
    compare_cmd->add_option("--format", format_name, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    geolp::GenSpec gen_spec;
    std::string out_path;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random problem file");
    gen_cmd->add_option("--seed", gen_spec.seed, "generator seed");
    gen_cmd->add_option("--n", gen_spec.n, "dimensions");
    gen_cmd->add_option("--m-in", gen_spec.m_inward, "inward rows");
    gen_cmd->add_option("--m-out", gen_spec.m_outward, "outward rows");
    gen_cmd->add_flag("--box,!--no-box", gen_spec.include_box, "append upper bounds");
    gen_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::size_t trials = 100;
    std::uint64_t bench_seed = 1;
    std::string spec_file;
    std::string bench_format = "csv";
    auto* bench_cmd = app.add_subcommand("bench", "Seeded heuristic-vs-oracle ensemble");
    bench_cmd->add_option("--trials", trials, "number of instances");
    bench_cmd->add_option("--seed", bench_seed, "base seed");
    bench_cmd->add_option("--spec-file", spec_file, "json generator spec (object or array)");
    bench_cmd->add_option("--format", bench_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const geolp::OutputFormat format = parse_format(format_name);

    if (solve_cmd->parsed()) {
        const LoadedProblem loaded = load_problem(file);
        const geolp::Problem& problem = loaded.problem;
        geolp::SolverOptions opts;
        opts.epsilon = epsilon;
        opts.criterion_direction = criterion == "printed" ? geolp::CriterionDirection::Printed
                                                          : geolp::CriterionDirection::TableConsistent;
        opts.verify = !no_verify;
        const geolp::SolveOutcome outcome = geolp::solve(problem, opts);
        std::cout << geolp::emit_result(outcome, opts, problem, format);
        print_min_note(loaded.from_min, format);
        return outcome_exit_code(outcome);
    }

    if (oracle_cmd->parsed()) {
        const LoadedProblem loaded = load_problem(file);
        const geolp::Problem& problem = loaded.problem;
        const geolp::OracleOutcome outcome = method == "enum"
                                                 ? geolp::enumerate_vertices(problem)
                                                 : geolp::simplex_solve(problem);
        if (const auto* err = std::get_if<geolp::OracleError>(&outcome)) {
            std::cerr << (*err == geolp::OracleError::BudgetExceeded
                              ? "error: enumeration budget exceeded (try --method simplex)"
                              : "error: simplex iteration cap reached")
                      << "\n";
            return kExitDegenerate;
        }
        const auto& result = std::get<geolp::OracleResult>(outcome);
        std::cout << geolp::emit_result(result, method, format);
        print_min_note(loaded.from_min, format);
        switch (result.status) {
            case geolp::OracleStatus::Optimal: return kExitSolved;
            case geolp::OracleStatus::Unbounded: return kExitUnbounded;
            case geolp::OracleStatus::Infeasible: return kExitInfeasible;
        }
        return kExitSolved;
    }

    if (compare_cmd->parsed()) {
        const LoadedProblem loaded = load_problem(file);
        const geolp::Problem& problem = loaded.problem;
        const geolp::ComparisonRecord record = geolp::compare(problem);
        std::cout << geolp::emit_result(record, problem, format);
        return kExitSolved;
    }

    if (gen_cmd->parsed()) {
        const geolp::Problem problem = geolp::generate_problem(gen_spec);
        const std::string text = geolp::emit_problem(problem);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitUsage;
            }
            out << text;
        }
        return kExitSolved;
    }

    if (bench_cmd->parsed()) {
        const std::vector<geolp::GenSpec> specs =
            spec_file.empty() ? default_specs() : load_spec_file(spec_file);
        const geolp::EnsembleReport report = geolp::run_ensemble(specs, trials, bench_seed);
        std::cout << geolp::emit_result(report, parse_format(bench_format));
        return kExitSolved;
    }

    return kExitUsage;
}
