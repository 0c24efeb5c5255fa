#include "geolp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <span>
#include <sstream>

#include <json.hpp>

#include "geolp/geometry.hpp"
#include "geolp/vec.hpp"

namespace geolp {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------- parsing

struct Token {
    enum Kind { Ident, Number, Colon, Plus, Minus, Le, Ge, End } kind = End;
    std::string text;
    double value = 0.0;
    std::size_t column = 0;
};

bool lex_line(const std::string& line, std::size_t line_no, std::vector<Token>& out,
              std::vector<ParseIssue>& issues) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token tok;
        tok.column = i + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            tok.kind = Token::Ident;
            tok.text = line.substr(i, j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = line.c_str() + i;
            char* end = nullptr;
            tok.value = std::strtod(begin, &end);
            if (end == begin) {
                issues.push_back({ParseErrorKind::Syntax, line_no, i + 1, "malformed number"});
                return false;
            }
            tok.kind = Token::Number;
            tok.text.assign(begin, static_cast<std::size_t>(end - begin));
            i += static_cast<std::size_t>(end - begin);
        } else if (c == ':') {
            tok.kind = Token::Colon;
            ++i;
        } else if (c == '+') {
            tok.kind = Token::Plus;
            ++i;
        } else if (c == '-') {
            tok.kind = Token::Minus;
            ++i;
        } else if (c == '<' && i + 1 < line.size() && line[i + 1] == '=') {
            tok.kind = Token::Le;
            i += 2;
        } else if (c == '>' && i + 1 < line.size() && line[i + 1] == '=') {
            tok.kind = Token::Ge;
            i += 2;
        } else {
            issues.push_back({ParseErrorKind::Syntax, line_no, i + 1,
                              std::string("unexpected character '") + c + "'"});
            return false;
        }
        out.push_back(std::move(tok));
    }
    out.push_back(Token{Token::End, "", 0.0, line.size() + 1});
    return true;
}

// `x<k>` with k >= 1; anything else is not a variable.
std::optional<std::size_t> variable_index(const std::string& ident) {
    if (ident.size() < 2 || ident[0] != 'x') return std::nullopt;
    for (std::size_t i = 1; i < ident.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return std::nullopt;
    const unsigned long k = std::strtoul(ident.c_str() + 1, nullptr, 10);
    if (k == 0) return std::nullopt;
    return static_cast<std::size_t>(k);
}

struct TermList {
    std::map<std::size_t, double> coeffs;  // 1-based variable index -> coefficient
    std::size_t max_index = 0;
};

// expr := (+|-)* (number var | var) ((+|-) ...)*
bool parse_terms(const std::vector<Token>& toks, std::size_t& pos, std::size_t line_no,
                 TermList& terms, std::vector<ParseIssue>& issues) {
    bool first = true;
    for (;;) {
        double sign = 1.0;
        bool saw_sign = false;
        while (toks[pos].kind == Token::Plus || toks[pos].kind == Token::Minus) {
            if (toks[pos].kind == Token::Minus) sign = -sign;
            saw_sign = true;
            ++pos;
        }
        if (toks[pos].kind == Token::End || toks[pos].kind == Token::Le ||
            toks[pos].kind == Token::Ge) {
            if (saw_sign) {
                issues.push_back({ParseErrorKind::Syntax, line_no, toks[pos].column,
                                  "dangling sign without a term"});
                return false;
            }
            if (first) return true;  // caller decides whether empty is allowed
            return true;
        }
        if (!first && !saw_sign) {
            issues.push_back({ParseErrorKind::Syntax, line_no, toks[pos].column,
                              "expected '+' or '-' between terms"});
            return false;
        }

        double coeff = sign;
        if (toks[pos].kind == Token::Number) {
            coeff = sign * toks[pos].value;
            ++pos;
        }
        if (toks[pos].kind != Token::Ident) {
            issues.push_back({ParseErrorKind::Syntax, line_no, toks[pos].column,
                              "expected a variable like x1"});
            return false;
        }
        const auto var = variable_index(toks[pos].text);
        if (!var) {
            issues.push_back({ParseErrorKind::UnknownVariable, line_no, toks[pos].column,
                              "unknown variable '" + toks[pos].text + "'"});
            return false;
        }
        terms.coeffs[*var] += coeff;
        terms.max_index = std::max(terms.max_index, *var);
        ++pos;
        first = false;
    }
}

struct RawRow {
    std::string name;
    TermList terms;
    Sense sense = Sense::LE;
    double rhs = 0.0;
};

}  // namespace

ParseResult parse_problem_text(std::string_view text) {
    ParseResult result;
    std::optional<TermList> objective;
    bool objective_is_min = false;
    std::vector<RawRow> rows;
    std::size_t max_index = 0;

    std::istringstream stream{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<Token> toks;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!lex_line(line, line_no, toks, result.issues)) continue;
        if (toks.front().kind == Token::End) continue;

        std::size_t pos = 0;
        if (toks[pos].kind != Token::Ident) {
            result.issues.push_back({ParseErrorKind::Syntax, line_no, toks[pos].column,
                                     "expected 'max:', 'min:' or a constraint name"});
            continue;
        }
        const std::string head = toks[pos].text;
        const std::size_t head_col = toks[pos].column;
        ++pos;
        if (toks[pos].kind != Token::Colon) {
            result.issues.push_back(
                {ParseErrorKind::Syntax, line_no, toks[pos].column, "expected ':'"});
            continue;
        }
        ++pos;

        if (head == "max" || head == "min") {
            if (objective) {
                result.issues.push_back(
                    {ParseErrorKind::Syntax, line_no, head_col, "duplicate objective line"});
                continue;
            }
            TermList terms;
            if (!parse_terms(toks, pos, line_no, terms, result.issues)) continue;
            if (toks[pos].kind != Token::End) {
                result.issues.push_back({ParseErrorKind::Syntax, line_no, toks[pos].column,
                                         "unexpected input after the objective"});
                continue;
            }
            if (terms.coeffs.empty()) {
                result.issues.push_back(
                    {ParseErrorKind::EmptyObjective, line_no, head_col, "objective has no terms"});
                continue;
            }
            objective = std::move(terms);
            objective_is_min = head == "min";
            max_index = std::max(max_index, objective->max_index);
            continue;
        }

        if (!objective) {
            result.issues.push_back({ParseErrorKind::Syntax, line_no, head_col,
                                     "the objective line must come first"});
            continue;
        }
        RawRow row;
        row.name = head;
        if (!parse_terms(toks, pos, line_no, row.terms, result.issues)) continue;
        if (row.terms.coeffs.empty()) {
            result.issues.push_back(
                {ParseErrorKind::Syntax, line_no, toks[pos].column, "constraint has no terms"});
            continue;
        }
        if (toks[pos].kind != Token::Le && toks[pos].kind != Token::Ge) {
            result.issues.push_back(
                {ParseErrorKind::Syntax, line_no, toks[pos].column, "expected '<=' or '>='"});
            continue;
        }
        row.sense = toks[pos].kind == Token::Le ? Sense::LE : Sense::GE;
        ++pos;
        double sign = 1.0;
        while (toks[pos].kind == Token::Plus || toks[pos].kind == Token::Minus) {
            if (toks[pos].kind == Token::Minus) sign = -sign;
            ++pos;
        }
        if (toks[pos].kind != Token::Number) {
            result.issues.push_back({ParseErrorKind::Syntax, line_no, toks[pos].column,
                                     "expected a number after the relation"});
            continue;
        }
        row.rhs = sign * toks[pos].value;
        ++pos;
        if (toks[pos].kind != Token::End) {
            result.issues.push_back({ParseErrorKind::Syntax, line_no, toks[pos].column,
                                     "unexpected input after the resource value"});
            continue;
        }
        max_index = std::max(max_index, row.terms.max_index);
        rows.push_back(std::move(row));
    }

    if (!objective && result.issues.empty())
        result.issues.push_back({ParseErrorKind::Syntax, 0, 0, "missing objective line"});
    if (!result.issues.empty()) return result;

    Problem p;
    p.objective.assign(max_index, 0.0);
    for (const auto& [k, v] : objective->coeffs)
        p.objective[k - 1] = objective_is_min ? -v : v;
    for (RawRow& row : rows) {
        Constraint c;
        c.coeffs.assign(max_index, 0.0);
        for (const auto& [k, v] : row.terms.coeffs) c.coeffs[k - 1] = v;
        c.sense = row.sense;
        c.rhs = row.rhs;
        p.constraints.push_back(std::move(c));
        p.names.push_back(std::move(row.name));
    }
    result.from_min = objective_is_min;
    result.problem = std::move(p);
    return result;
}

namespace {

std::string emit_terms(std::span<const double> coeffs) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        const double mag = std::abs(coeffs[i]);
        if (first) {
            if (coeffs[i] < 0.0) out += "-";
        } else {
            out += coeffs[i] < 0.0 ? " - " : " + ";
        }
        out += fmt17(mag) + " x" + std::to_string(i + 1);
        first = false;
    }
    if (first) out = "0 x1";  // degenerate all-zero row, kept parseable
    return out;
}

}  // namespace

std::string emit_problem(const Problem& problem, bool as_min) {
    std::string out;
    if (as_min) {
        std::vector<double> negated(problem.objective);
        for (double& c : negated) c = -c;
        out += "min: " + emit_terms(negated) + "\n";
    } else {
        out += "max: " + emit_terms(problem.objective) + "\n";
    }
    for (std::size_t j = 0; j < problem.row_count(); ++j) {
        const Constraint& row = problem.constraints[j];
        out += problem.row_name(j) + ": " + emit_terms(row.coeffs) +
               (row.sense == Sense::LE ? " <= " : " >= ") + fmt17(row.rhs) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- emission

namespace {

using ordered_json = nlohmann::ordered_json;

const char* class_name(ConstraintClass cls) {
    return cls == ConstraintClass::Inward ? "inward" : "outward";
}

ordered_json options_json(const SolverOptions& opts) {
    return ordered_json{
        {"epsilon", opts.epsilon},
        {"criterion_direction",
         opts.criterion_direction == CriterionDirection::Printed ? "printed" : "table-consistent"},
        {"verify", opts.verify},
    };
}

ordered_json solve_json(const SolveOutcome& outcome, const SolverOptions& opts) {
    ordered_json j;
    if (const auto* solved = std::get_if<Solved>(&outcome)) {
        j["status"] = "solved";
        j["x"] = solved->x;
        j["z"] = solved->z;
        ordered_json active = ordered_json::array();
        for (std::size_t row : solved->active.basis_rows) active.push_back(row + 1);
        j["active_rows"] = active;
        if (solved->pivot_point) {
            j["bodmp"] = ordered_json{{"index", solved->pivot_point->row + 1},
                                      {"distance", solved->pivot_point->distance},
                                      {"point", solved->pivot_point->point}};
        } else {
            j["bodmp"] = nullptr;
        }
        ordered_json selections = ordered_json::array();
        for (const LimiterChoice& c : solved->active.limiters) {
            selections.push_back(ordered_json{{"dim", c.dimension + 1},
                                              {"row", c.row + 1},
                                              {"class", class_name(c.cls)},
                                              {"e", c.e}});
        }
        j["selections"] = selections;
        ordered_json violations = ordered_json::array();
        if (solved->feasibility) {
            for (std::size_t row : solved->feasibility->violated) {
                violations.push_back(ordered_json{
                    {"row", row + 1}, {"amount", solved->feasibility->rows[row].violation}});
            }
        }
        j["diagnostics"] = ordered_json{{"residual", solved->residual}, {"violations", violations}};
    } else if (const auto* unb = std::get_if<Unbounded>(&outcome)) {
        j["status"] = "unbounded";
        j["dimension"] = unb->dimension + 1;
    } else if (const auto* deg = std::get_if<DegenerateSelection>(&outcome)) {
        j["status"] = "degenerate_selection";
        ordered_json dims = ordered_json::array();
        for (std::size_t d : deg->dimensions) dims.push_back(d + 1);
        j["dimensions"] = dims;
    } else {
        j["status"] = "singular_basis";
    }
    j["options"] = options_json(opts);
    return j;
}

const char* oracle_status_name(OracleStatus status) {
    switch (status) {
        case OracleStatus::Optimal: return "optimal";
        case OracleStatus::Infeasible: return "infeasible";
        case OracleStatus::Unbounded: return "unbounded";
    }
    return "?";
}

ordered_json oracle_json(const OracleResult& result, std::string_view method) {
    ordered_json j;
    j["status"] = oracle_status_name(result.status);
    if (result.status == OracleStatus::Optimal) {
        j["x"] = result.x;
        j["z"] = result.z;
        ordered_json active = ordered_json::array();
        for (std::size_t row : result.active_rows) active.push_back(row + 1);
        j["active_rows"] = active;
    }
    j["vertex_count"] = result.vertex_count;
    j["method"] = std::string(method);
    return j;
}

const char* heuristic_status_name(const SolveOutcome& outcome) {
    if (std::holds_alternative<Solved>(outcome)) return "solved";
    if (std::holds_alternative<Unbounded>(outcome)) return "unbounded";
    if (std::holds_alternative<DegenerateSelection>(outcome)) return "degenerate_selection";
    return "singular_basis";
}

ordered_json record_json(const ComparisonRecord& rec) {
    ordered_json j;
    j["trial"] = rec.trial;
    j["seed"] = rec.seed;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["heuristic_status"] = heuristic_status_name(rec.heuristic);
    if (const auto* solved = std::get_if<Solved>(&rec.heuristic)) {
        j["z_heuristic"] = solved->z;
        ordered_json basis = ordered_json::array();
        for (std::size_t row : solved->active.basis_rows) basis.push_back(row + 1);
        j["heuristic_basis"] = basis;
    } else {
        j["z_heuristic"] = nullptr;
        j["heuristic_basis"] = ordered_json::array();
    }
    if (rec.oracle) {
        if (const auto* res = std::get_if<OracleResult>(&*rec.oracle)) {
            j["oracle_status"] = oracle_status_name(res->status);
            if (res->status == OracleStatus::Optimal) {
                j["z_oracle"] = res->z;
                ordered_json active = ordered_json::array();
                for (std::size_t row : res->active_rows) active.push_back(row + 1);
                j["oracle_active_rows"] = active;
            } else {
                j["z_oracle"] = nullptr;
                j["oracle_active_rows"] = ordered_json::array();
            }
        } else {
            j["oracle_status"] = std::get<OracleError>(*rec.oracle) == OracleError::BudgetExceeded
                                     ? "budget_exceeded"
                                     : "iteration_cap";
            j["z_oracle"] = nullptr;
            j["oracle_active_rows"] = ordered_json::array();
        }
    } else {
        j["oracle_status"] = nullptr;
        j["z_oracle"] = nullptr;
        j["oracle_active_rows"] = ordered_json::array();
    }
    j["oracle_method"] = rec.oracle_method;
    if (rec.z_gap)
        j["z_gap"] = *rec.z_gap;
    else
        j["z_gap"] = nullptr;
    j["active_set_match"] = rec.active_set_match;
    j["max_violation"] = rec.max_violation;
    j["direction_flip"] = rec.direction_flip;
    j["rescale_flip_low"] = rec.rescale_flip_low;
    j["rescale_flip_high"] = rec.rescale_flip_high;
    j["wall_ms"] = ordered_json{{"heuristic", rec.heuristic_ms}, {"oracle", rec.oracle_ms}};
    return j;
}

ordered_json stats_json(const Statistics& s) {
    return ordered_json{
        {"trials", s.trials},
        {"heuristic_solved", s.heuristic_solved},
        {"heuristic_unbounded", s.heuristic_unbounded},
        {"heuristic_degenerate", s.heuristic_degenerate},
        {"oracle_optimal", s.oracle_optimal},
        {"comparable", s.comparable},
        {"matches", s.matches},
        {"match_fraction", s.match_fraction},
        {"match_ci_low", s.match_ci_low},
        {"match_ci_high", s.match_ci_high},
        {"gap_below_1e6", s.gap_below_1e6},
        {"rel_gap",
         ordered_json{{"p50", s.rel_gap.p50},
                      {"p90", s.rel_gap.p90},
                      {"p99", s.rel_gap.p99},
                      {"max", s.rel_gap.max}}},
        {"infeasible_solutions", s.infeasible_solutions},
        {"unbounded_on_optimal", s.unbounded_on_optimal},
        {"direction_flips", s.direction_flips},
        {"rescale_flips_low", s.rescale_flips_low},
        {"rescale_flips_high", s.rescale_flips_high},
    };
}

std::string record_csv_line(const ComparisonRecord& rec) {
    std::string line;
    line += std::to_string(rec.trial) + "," + std::to_string(rec.seed) + "," +
            std::to_string(rec.n) + "," + std::to_string(rec.m) + ",";
    line += heuristic_status_name(rec.heuristic);
    line += ",";
    if (const auto* solved = std::get_if<Solved>(&rec.heuristic)) line += fmt17(solved->z);
    line += ",";
    const OracleResult* res = rec.oracle ? std::get_if<OracleResult>(&*rec.oracle) : nullptr;
    if (res)
        line += oracle_status_name(res->status);
    else if (rec.oracle)
        line += "error";
    line += ",";
    if (res && res->status == OracleStatus::Optimal) line += fmt17(res->z);
    line += ",";
    if (rec.z_gap) line += fmt17(*rec.z_gap);
    line += ",";
    if (rec.z_gap && res) line += fmt17(std::abs(*rec.z_gap) / (1.0 + std::abs(res->z)));
    line += ",";
    line += rec.active_set_match ? "1" : "0";
    line += "," + fmt17(rec.max_violation);
    line += rec.direction_flip ? ",1" : ",0";
    line += rec.rescale_flip_low ? ",1" : ",0";
    line += rec.rescale_flip_high ? ",1" : ",0";
    line += "," + fmt6(rec.heuristic_ms) + "," + fmt6(rec.oracle_ms);
    return line;
}

const char* kRecordCsvHeader =
    "trial,seed,n,m,heuristic_status,z_heuristic,oracle_status,z_oracle,z_gap,rel_gap,"
    "active_set_match,max_violation,direction_flip,rescale_flip_low,rescale_flip_high,"
    "heuristic_ms,oracle_ms";

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

// Classification table in the style of the solver's own step-0 report:
// per row the stored orientation, class, angle to v_o, and ray distance.
std::string classification_table(const Problem& problem) {
    const NormalizedProblem np = canonicalize(problem);
    std::string out;
    out += "objective unit: (";
    for (std::size_t i = 0; i < np.objective_unit.size(); ++i)
        out += (i ? ", " : "") + fmt6(np.objective_unit[i]);
    out += ")\n";
    out += pad("row", 8) + pad("class", 9) + pad("stored", 28) + pad("sense", 7) +
           pad("b", 12) + pad("alpha", 10) + "d\n";
    for (std::size_t j = 0; j < np.row_count(); ++j) {
        const OrientedRow& row = np.rows[j];
        std::string coeffs = "(";
        for (std::size_t i = 0; i < row.coeffs.size(); ++i)
            coeffs += (i ? ", " : "") + fmt6(row.coeffs[i]);
        coeffs += ")";
        std::vector<double> le = row.coeffs;
        double le_rhs = row.rhs;
        if (row.cls == ConstraintClass::Outward) {
            for (double& a : le) a = -a;
            le_rhs = -le_rhs;
        }
        const auto d = bodd(le, le_rhs, np.objective_unit);
        out += pad(problem.row_name(j), 8) + pad(class_name(row.cls), 9) + pad(coeffs, 28) +
               pad(row.cls == ConstraintClass::Inward ? "<=" : ">=", 7) +
               pad(fmt6(row.rhs), 12) + pad(fmt6(row.angle), 10) + (d ? fmt6(*d) : "--") + "\n";
    }
    return out;
}

std::string solve_text(const SolveOutcome& outcome, const SolverOptions& opts,
                       const Problem& problem) {
    std::string out = classification_table(problem);
    if (const auto* solved = std::get_if<Solved>(&outcome)) {
        if (solved->pivot_point) {
            out += "pivot point: row " + problem.row_name(solved->pivot_point->row) +
                   ", distance " + fmt6(solved->pivot_point->distance) + ", point (";
            for (std::size_t i = 0; i < solved->pivot_point->point.size(); ++i)
                out += (i ? ", " : "") + fmt6(solved->pivot_point->point[i]);
            out += ")\n";
        } else {
            out += "pivot point: none (no inward crossing; origin used)\n";
        }
        for (const LimiterChoice& c : solved->active.limiters) {
            out += "dim " + std::to_string(c.dimension + 1) + " limited by " +
                   problem.row_name(c.row) + " (" + class_name(c.cls) +
                   ", e = " + fmt6(c.e) + (c.repaired ? ", repaired" : "") + ")\n";
        }
        out += "x* = (";
        for (std::size_t i = 0; i < solved->x.size(); ++i)
            out += (i ? ", " : "") + fmt6(solved->x[i]);
        out += ")\nz* = " + fmt6(solved->z) + "\n";
        out += "residual = " + fmt6(solved->residual) + "\n";
        if (solved->feasibility) {
            if (solved->feasibility->violated.empty()) {
                out += "feasible within tolerance\n";
            } else {
                for (std::size_t row : solved->feasibility->violated)
                    out += "violated: " + problem.row_name(row) + " by " +
                           fmt6(solved->feasibility->rows[row].violation) + "\n";
            }
        }
    } else if (const auto* unb = std::get_if<Unbounded>(&outcome)) {
        out += "unbounded in dimension " + std::to_string(unb->dimension + 1) + "\n";
    } else if (const auto* deg = std::get_if<DegenerateSelection>(&outcome)) {
        out += "degenerate selection; unfilled dimensions:";
        for (std::size_t d : deg->dimensions) out += " " + std::to_string(d + 1);
        out += "\n";
    } else {
        out += "singular basis\n";
    }
    out += "options: epsilon " + fmt6(opts.epsilon) + ", criterion " +
           (opts.criterion_direction == CriterionDirection::Printed ? "printed" : "table-consistent") +
           (opts.verify ? ", verify on" : ", verify off") + "\n";
    return out;
}

}  // namespace

std::string emit_result(const SolveOutcome& outcome, const SolverOptions& opts,
                        const Problem& problem, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return solve_json(outcome, opts).dump(2) + "\n";
        case OutputFormat::Csv: {
            std::string out = "status,z,residual,x\n";
            out += heuristic_status_name(outcome);
            if (const auto* solved = std::get_if<Solved>(&outcome)) {
                out += "," + fmt17(solved->z) + "," + fmt17(solved->residual);
                for (double xi : solved->x) out += "," + fmt17(xi);
            }
            return out + "\n";
        }
        case OutputFormat::Text:
            return solve_text(outcome, opts, problem);
    }
    return {};
}

std::string emit_result(const OracleResult& result, std::string_view method, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return oracle_json(result, method).dump(2) + "\n";
        case OutputFormat::Csv: {
            std::string out = "status,z,vertex_count,x\n";
            out += oracle_status_name(result.status);
            out += ",";
            if (result.status == OracleStatus::Optimal) out += fmt17(result.z);
            out += "," + std::to_string(result.vertex_count);
            for (double xi : result.x) out += "," + fmt17(xi);
            return out + "\n";
        }
        case OutputFormat::Text: {
            std::string out = "oracle (" + std::string(method) + "): ";
            out += oracle_status_name(result.status);
            out += "\n";
            if (result.status == OracleStatus::Optimal) {
                out += "x = (";
                for (std::size_t i = 0; i < result.x.size(); ++i)
                    out += (i ? ", " : "") + fmt6(result.x[i]);
                out += ")\nz = " + fmt6(result.z) + "\nactive rows:";
                for (std::size_t row : result.active_rows)
                    out += " " + std::to_string(row + 1);
                out += "\n";
            }
            if (result.vertex_count > 0)
                out += "feasible vertices examined: " + std::to_string(result.vertex_count) + "\n";
            return out;
        }
    }
    return {};
}

std::string emit_result(const ComparisonRecord& record, const Problem& problem,
                        OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return record_json(record).dump(2) + "\n";
        case OutputFormat::Csv:
            return std::string(kRecordCsvHeader) + "\n" + record_csv_line(record) + "\n";
        case OutputFormat::Text: {
            std::string out = classification_table(problem);
            out += "heuristic: ";
            out += heuristic_status_name(record.heuristic);
            if (const auto* solved = std::get_if<Solved>(&record.heuristic))
                out += ", z = " + fmt6(solved->z);
            out += "\noracle (" + record.oracle_method + "): ";
            const OracleResult* res =
                record.oracle ? std::get_if<OracleResult>(&*record.oracle) : nullptr;
            if (res) {
                out += oracle_status_name(res->status);
                if (res->status == OracleStatus::Optimal) out += ", z = " + fmt6(res->z);
            } else {
                out += "error";
            }
            out += "\n";
            if (record.z_gap) out += "z gap (oracle - heuristic) = " + fmt6(*record.z_gap) + "\n";
            out += "active set match: " + std::string(record.active_set_match ? "yes" : "no") + "\n";
            out += "max violation of heuristic x: " + fmt6(record.max_violation) + "\n";
            return out;
        }
    }
    return {};
}

std::string emit_result(const EnsembleReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            ordered_json j;
            j["stats"] = stats_json(report.stats);
            ordered_json records = ordered_json::array();
            for (const ComparisonRecord& rec : report.records) records.push_back(record_json(rec));
            j["records"] = records;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = kRecordCsvHeader;
            out += "\n";
            for (const ComparisonRecord& rec : report.records) out += record_csv_line(rec) + "\n";
            return out;
        }
        case OutputFormat::Text: {
            const Statistics& s = report.stats;
            std::string out;
            out += "trials: " + std::to_string(s.trials) + "\n";
            out += "heuristic solved: " + std::to_string(s.heuristic_solved) +
                   ", unbounded: " + std::to_string(s.heuristic_unbounded) +
                   ", degenerate/singular: " + std::to_string(s.heuristic_degenerate) + "\n";
            out += "oracle optimal: " + std::to_string(s.oracle_optimal) + "\n";
            out += "active-set match: " + std::to_string(s.matches) + "/" +
                   std::to_string(s.comparable) + " = " + fmt6(s.match_fraction) + " (95% CI [" +
                   fmt6(s.match_ci_low) + ", " + fmt6(s.match_ci_high) + "])\n";
            out += "relative gap < 1e-6: " + std::to_string(s.gap_below_1e6) + "/" +
                   std::to_string(s.comparable) + "\n";
            out += "relative gap quantiles: p50 " + fmt6(s.rel_gap.p50) + ", p90 " +
                   fmt6(s.rel_gap.p90) + ", p99 " + fmt6(s.rel_gap.p99) + ", max " +
                   fmt6(s.rel_gap.max) + "\n";
            out += "heuristic solutions infeasible beyond tol: " +
                   std::to_string(s.infeasible_solutions) + "\n";
            out += "heuristic unbounded while oracle optimal: " +
                   std::to_string(s.unbounded_on_optimal) + "\n";
            out += "criterion-direction selection flips: " + std::to_string(s.direction_flips) +
                   "\n";
            out += "row-rescale selection flips (0.1x): " + std::to_string(s.rescale_flips_low) +
                   ", (10x): " + std::to_string(s.rescale_flips_high) + "\n";
            return out;
        }
    }
    return {};
}

}  // namespace geolp
