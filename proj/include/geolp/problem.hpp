#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace geolp {

enum class Sense { LE, GE };

enum class ConstraintClass { Inward, Outward };

struct Constraint {
    std::vector<double> coeffs;
    Sense sense = Sense::LE;
    double rhs = 0.0;
};

/// A raw maximization problem: max c.x subject to inequality rows.
/// Minimization inputs are negated at the parsing boundary; the core is
/// maximization-only.
struct Problem {
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<std::string> names;  ///< optional; row_name falls back to R_<j+1>

    std::size_t dimension() const { return objective.size(); }
    std::size_t row_count() const { return constraints.size(); }
    std::string row_name(std::size_t j) const;
};

enum class ValidationErrorKind { ZeroObjective, DimensionMismatch, NonFiniteEntry, ZeroRow };

struct ValidationIssue {
    ValidationErrorKind kind;
    long row = -1;  ///< constraint index, -1 for the objective / whole problem
    std::string message;
};

/// Checks every structural invariant and reports every violation found.
/// An empty result means the problem is well formed.
std::vector<ValidationIssue> validate(const Problem& problem);

/// One constraint after canonicalization. Inward rows are stored in <=
/// orientation, outward rows in >= orientation, so stored coefficients can be
/// read off directly for reports and basis assembly.
struct OrientedRow {
    std::vector<double> coeffs;
    double rhs = 0.0;
    ConstraintClass cls = ConstraintClass::Inward;
    std::vector<double> unit;  ///< coeffs / |coeffs|
    double cos_to_objective = 0.0;
    double angle = 0.0;  ///< radians between stored unit normal and v_o

    Sense stored_sense() const {
        return cls == ConstraintClass::Inward ? Sense::LE : Sense::GE;
    }
};

struct NormalizedProblem {
    Problem base;
    std::vector<double> objective_unit;  ///< v_o
    std::vector<OrientedRow> rows;       ///< same order as base.constraints

    std::size_t dimension() const { return base.dimension(); }
    std::size_t row_count() const { return rows.size(); }
};

/// Classifies and orients every row. A row whose <=-oriented coefficients
/// satisfy a.c > 0 is inward and kept as <=; otherwise it is outward and
/// stored re-negated as >=. Rows with a.c == 0 are treated as outward.
/// pre: validate(problem) reported no issues.
NormalizedProblem canonicalize(const Problem& problem);

}  // namespace geolp
