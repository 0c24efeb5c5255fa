#include "geolp/problem.hpp"

#include <algorithm>
#include <cmath>

#include "geolp/geometry.hpp"
#include "geolp/vec.hpp"

namespace geolp {

std::string Problem::row_name(std::size_t j) const {
    if (j < names.size() && !names[j].empty()) return names[j];
    return "R_" + std::to_string(j + 1);
}

std::vector<ValidationIssue> validate(const Problem& problem) {
    std::vector<ValidationIssue> issues;
    const std::size_t n = problem.dimension();

    if (n == 0) {
        issues.push_back({ValidationErrorKind::ZeroObjective, -1, "objective is empty"});
        return issues;
    }
    bool all_zero = true;
    for (double ci : problem.objective) {
        if (!std::isfinite(ci)) {
            issues.push_back({ValidationErrorKind::NonFiniteEntry, -1, "objective has a non-finite coefficient"});
            all_zero = false;
            break;
        }
        if (ci != 0.0) all_zero = false;
    }
    if (all_zero)
        issues.push_back({ValidationErrorKind::ZeroObjective, -1, "objective coefficients are all zero"});

    if (problem.constraints.empty())
        issues.push_back({ValidationErrorKind::DimensionMismatch, -1, "problem has no constraints"});

    for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
        const Constraint& row = problem.constraints[j];
        const long idx = static_cast<long>(j);
        if (row.coeffs.size() != n) {
            issues.push_back({ValidationErrorKind::DimensionMismatch, idx,
                              problem.row_name(j) + ": expected " + std::to_string(n) + " coefficients, got " +
                                  std::to_string(row.coeffs.size())});
            continue;
        }
        bool finite = std::isfinite(row.rhs);
        bool zero_row = true;
        for (double a : row.coeffs) {
            if (!std::isfinite(a)) finite = false;
            if (a != 0.0) zero_row = false;
        }
        if (!finite)
            issues.push_back({ValidationErrorKind::NonFiniteEntry, idx, problem.row_name(j) + ": non-finite entry"});
        if (zero_row)
            issues.push_back({ValidationErrorKind::ZeroRow, idx, problem.row_name(j) + ": all coefficients are zero"});
    }
    return issues;
}

NormalizedProblem canonicalize(const Problem& problem) {
    NormalizedProblem np;
    np.base = problem;
    np.objective_unit = unit_normal(problem.objective);

    np.rows.reserve(problem.constraints.size());
    for (const Constraint& row : problem.constraints) {
        // First rewrite in <= orientation, then classify by the sign of a.c.
        std::vector<double> le = row.coeffs;
        double le_rhs = row.rhs;
        if (row.sense == Sense::GE) {
            for (double& a : le) a = -a;
            le_rhs = -le_rhs;
        }
        const double d = dot(le, problem.objective);

        OrientedRow oriented;
        if (d > 0.0) {
            oriented.cls = ConstraintClass::Inward;
            oriented.coeffs = std::move(le);
            oriented.rhs = le_rhs;
        } else {
            oriented.cls = ConstraintClass::Outward;
            for (double& a : le) a = -a;
            oriented.coeffs = std::move(le);
            oriented.rhs = -le_rhs;
        }
        oriented.unit = unit_normal(oriented.coeffs);
        oriented.cos_to_objective = cos_angle(oriented.unit, np.objective_unit);
        oriented.angle = std::acos(oriented.cos_to_objective);
        np.rows.push_back(std::move(oriented));
    }
    return np;
}

}  // namespace geolp
