#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "geolp/geometry.hpp"
#include "geolp/oracle.hpp"
#include "geolp/problem.hpp"

namespace geolp {

struct SolverOptions {
    double epsilon = 1e-9;  ///< absolute slack in the candidacy comparisons
    CriterionDirection criterion_direction = CriterionDirection::TableConsistent;
    bool verify = true;  ///< attach a feasibility report to Solved outcomes
};

/// The limiting constraint picked for one dimension.
struct LimiterChoice {
    std::size_t dimension = 0;  ///< 0-based
    std::size_t row = 0;
    ConstraintClass cls = ConstraintClass::Inward;
    double e = 0.0;                       ///< selection distance of the pick
    std::vector<std::size_t> candidates;  ///< every row that passed the criterion
    bool repaired = false;                ///< pick came from the duplicate-repair pass
};

struct ActiveSet {
    std::vector<LimiterChoice> limiters;     ///< one per dimension
    std::vector<std::size_t> basis_rows;     ///< deduplicated, size n
    std::vector<std::vector<double>> basis;  ///< stored-orientation coefficients
    std::vector<double> basis_rhs;
    bool repair_applied = false;
};

struct Unbounded {
    std::size_t dimension = 0;  ///< 0-based dimension with no limiting constraint
};
struct DegenerateSelection {
    std::vector<std::size_t> dimensions;  ///< dimensions the repair pass could not fill
};
struct SingularBasis {};

struct Solved {
    std::vector<double> x;
    double z = 0.0;
    ActiveSet active;
    std::optional<BodmpResult> pivot_point;  ///< empty on the no-inward-crossing path
    std::optional<FeasibilityReport> feasibility;
    double residual = 0.0;  ///< ||B x - b||_inf
};

using SelectionResult = std::variant<ActiveSet, Unbounded, DegenerateSelection>;
using SolveOutcome = std::variant<Solved, Unbounded, DegenerateSelection, SingularBasis>;

/// Per-dimension limiter selection. Inward candidates are preferred; a
/// dimension with no candidate of either class makes the problem unbounded.
/// Reference point is the bodmp point, or the origin when it is absent.
SelectionResult select_active_set(const NormalizedProblem& np,
                                  const std::optional<BodmpResult>& pivot,
                                  const SolverOptions& opts = {});

/// Solves basis * x = basis_rhs by row elimination with partial pivoting.
/// pre: basis_rows.size() == dimension count.
std::variant<std::vector<double>, SingularBasis> solve_vertex(const ActiveSet& active);

/// Full pipeline: canonicalize, locate the pivot point, select limiters per
/// dimension, solve the square system, evaluate the objective. Failures come
/// back as outcome variants, never exceptions.
/// pre: validate(problem) reported no issues.
SolveOutcome solve(const Problem& problem, const SolverOptions& opts = {});

double evaluate_objective(std::span<const double> c, std::span<const double> x);

}  // namespace geolp
