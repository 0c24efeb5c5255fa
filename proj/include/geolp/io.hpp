#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geolp/harness.hpp"
#include "geolp/oracle.hpp"
#include "geolp/problem.hpp"
#include "geolp/solver.hpp"

namespace geolp {

enum class ParseErrorKind { Syntax, UnknownVariable, EmptyObjective };

struct ParseIssue {
    ParseErrorKind kind = ParseErrorKind::Syntax;
    std::size_t line = 0;    ///< 1-based
    std::size_t column = 0;  ///< 1-based
    std::string message;
};

struct ParseResult {
    std::optional<Problem> problem;
    bool from_min = false;  ///< objective line was `min:` and was negated
    std::vector<ParseIssue> issues;

    bool ok() const { return problem.has_value() && issues.empty(); }
};

/// Line-oriented grammar:
///   max: <term> (± <term>)*          (or `min:`, negated on input)
///   <name>: <term> (± <term>)* (<=|>=) <number>
/// with term = `<number> x<k>` or `x<k>`, `#` starting a comment, and the
/// dimension inferred from the highest variable index seen anywhere.
ParseResult parse_problem_text(std::string_view text);

/// Inverse of parse_problem_text. Numbers carry 17 significant digits so a
/// parse of the output reproduces the problem field-exactly.
std::string emit_problem(const Problem& problem, bool as_min = false);

enum class OutputFormat { Json, Csv, Text };

std::string emit_result(const SolveOutcome& outcome, const SolverOptions& opts,
                        const Problem& problem, OutputFormat format);
std::string emit_result(const OracleResult& result, std::string_view method, OutputFormat format);
std::string emit_result(const ComparisonRecord& record, const Problem& problem, OutputFormat format);
std::string emit_result(const EnsembleReport& report, OutputFormat format);

}  // namespace geolp
