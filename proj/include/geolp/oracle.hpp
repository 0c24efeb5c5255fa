#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "geolp/problem.hpp"

namespace geolp {

struct OracleOptions {
    double feasibility_tol = 1e-7;  ///< absolute tolerance on row slack
    double pivot_tol = 1e-10;
    std::size_t subset_cap = 200000;  ///< enumeration budget on (m choose n)
    std::size_t pivot_cap = 50000;    ///< simplex iteration cap
};

enum class OracleStatus { Optimal, Infeasible, Unbounded };

struct OracleResult {
    OracleStatus status = OracleStatus::Infeasible;
    std::vector<double> x;  ///< optimal point, when Optimal
    double z = 0.0;
    std::vector<std::size_t> active_rows;  ///< rows binding at the optimum, within tol
    std::size_t vertex_count = 0;          ///< feasible vertices examined (enumeration only)
};

enum class OracleError { BudgetExceeded, IterationCap };

using OracleOutcome = std::variant<OracleResult, OracleError>;

/// Exhaustive brute force: solves every n-subset of rows, keeps the feasible
/// vertex with the best objective. Unboundedness is detected conservatively
/// by scanning recession directions at the corners of the unit box; the
/// simplex oracle is the authority when the two disagree on that status.
OracleOutcome enumerate_vertices(const Problem& problem, const OracleOptions& opts = {});

/// Dense two-phase tableau simplex over free variables (split x = u - w),
/// Bland's smallest-index rule for anti-cycling. Exceeding pivot_cap reports
/// OracleError::IterationCap and indicates a bug, not an answer.
OracleOutcome simplex_solve(const Problem& problem, const OracleOptions& opts = {});

struct RowSlack {
    std::size_t row = 0;
    double slack = 0.0;      ///< signed: >= 0 means satisfied, in the row's own sense
    double violation = 0.0;  ///< max(0, -slack)
};

struct FeasibilityReport {
    std::vector<RowSlack> rows;
    std::vector<std::size_t> violated;  ///< rows with violation > tol
    double max_violation = 0.0;
};

FeasibilityReport check_feasibility(const Problem& problem, std::span<const double> x,
                                    double tol = 1e-7);

}  // namespace geolp
