#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "demo_instance.hpp"
#include "geolp/problem.hpp"
#include "geolp/vec.hpp"

using namespace geolp;

namespace {

bool has_kind(const std::vector<ValidationIssue>& issues, ValidationErrorKind kind) {
    for (const auto& issue : issues)
        if (issue.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("validate accepts the demo instance") {
    CHECK(validate(demo3x8()).empty());
}

TEST_CASE("validate rejects a zero objective") {
    Problem p;
    p.objective = {0.0, 0.0, 0.0};
    p.constraints = {{{1.0, 0.0, 0.0}, Sense::LE, 1.0}};
    CHECK(has_kind(validate(p), ValidationErrorKind::ZeroObjective));
}

TEST_CASE("validate rejects a zero row") {
    Problem p;
    p.objective = {1.0, 1.0, 1.0};
    p.constraints = {{{0.0, 0.0, 0.0}, Sense::LE, 1.0}};
    CHECK(has_kind(validate(p), ValidationErrorKind::ZeroRow));
}

TEST_CASE("validate reports every violation at once") {
    Problem p;
    p.objective = {0.0, 0.0};
    p.constraints = {
        {{0.0, 0.0}, Sense::LE, 1.0},
        {{1.0}, Sense::LE, 1.0},
        {{1.0, std::numeric_limits<double>::quiet_NaN()}, Sense::LE, 1.0},
    };
    const auto issues = validate(p);
    CHECK(has_kind(issues, ValidationErrorKind::ZeroObjective));
    CHECK(has_kind(issues, ValidationErrorKind::ZeroRow));
    CHECK(has_kind(issues, ValidationErrorKind::DimensionMismatch));
    CHECK(has_kind(issues, ValidationErrorKind::NonFiniteEntry));
}

TEST_CASE("canonicalize classifies the demo instance rows") {
    const NormalizedProblem np = canonicalize(demo3x8());
    for (std::size_t j = 0; j < 5; ++j) CHECK(np.rows[j].cls == ConstraintClass::Inward);
    for (std::size_t j = 5; j < 8; ++j) CHECK(np.rows[j].cls == ConstraintClass::Outward);

    // outward rows keep their >= coefficients, e.g. the x2 bound
    CHECK(np.rows[6].coeffs == std::vector<double>{0.0, 1.0, 0.0});
    CHECK(np.rows[6].rhs == 0.0);

    // stored-orientation dot with c: positive for inward, non-negative for outward
    for (const OrientedRow& row : np.rows) {
        const double d = dot(row.coeffs, np.base.objective);
        if (row.cls == ConstraintClass::Inward)
            CHECK(d > 0.0);
        else
            CHECK(d >= 0.0);
    }
}

TEST_CASE("canonicalize stores a non-negativity bound written as <=") {
    Problem p;
    p.objective = {1.0};
    p.constraints = {{{-1.0}, Sense::LE, 0.0}};
    const NormalizedProblem np = canonicalize(p);
    CHECK(np.rows[0].cls == ConstraintClass::Outward);
    CHECK(np.rows[0].coeffs == std::vector<double>{1.0});
    CHECK(np.rows[0].rhs == 0.0);
}

TEST_CASE("a row orthogonal to the objective is outward") {
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {{{1.0, -1.0}, Sense::LE, 1.0}};
    const NormalizedProblem np = canonicalize(p);
    CHECK(np.rows[0].cls == ConstraintClass::Outward);
}

TEST_CASE("unit normals and angles on the demo instance") {
    const NormalizedProblem np = canonicalize(demo3x8());
    CHECK(norm(np.objective_unit) == doctest::Approx(1.0).epsilon(1e-12));
    for (const OrientedRow& row : np.rows)
        CHECK(norm(row.unit) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(np.objective_unit[0] == doctest::Approx(0.218).epsilon(5e-3));
    CHECK(np.rows[1].angle == doctest::Approx(0.494).epsilon(4e-3));
    for (std::size_t j = 0; j < 5; ++j) CHECK(np.rows[j].cos_to_objective > 0.0);
}

TEST_CASE("canonicalize is idempotent on classification") {
    const NormalizedProblem np = canonicalize(demo3x8());
    Problem again;
    again.objective = np.base.objective;
    for (const OrientedRow& row : np.rows)
        again.constraints.push_back({row.coeffs, row.stored_sense(), row.rhs});
    const NormalizedProblem np2 = canonicalize(again);
    for (std::size_t j = 0; j < np.row_count(); ++j) {
        CHECK(np2.rows[j].cls == np.rows[j].cls);
        CHECK(np2.rows[j].coeffs == np.rows[j].coeffs);
        CHECK(np2.rows[j].rhs == np.rows[j].rhs);
    }
}

TEST_CASE("canonicalization preserves the feasible set") {
    auto probe = [](const Problem& p, std::mt19937_64& rng, int trials) {
        const NormalizedProblem np = canonicalize(p);
        std::uniform_real_distribution<double> coord(-4.0, 4.0);
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<double> x(p.dimension());
            for (double& xi : x) xi = coord(rng);
            for (std::size_t j = 0; j < p.row_count(); ++j) {
                const Constraint& row = p.constraints[j];
                const double lhs = dot(row.coeffs, x);
                const bool original = row.sense == Sense::LE ? lhs <= row.rhs : lhs >= row.rhs;
                const double stored_lhs = dot(np.rows[j].coeffs, x);
                const bool stored = np.rows[j].cls == ConstraintClass::Inward
                                        ? stored_lhs <= np.rows[j].rhs
                                        : stored_lhs >= np.rows[j].rhs;
                CHECK(original == stored);
            }
        }
    };
    std::mt19937_64 rng(7);
    probe(demo3x8(), rng, 1000);

    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int instance = 0; instance < 20; ++instance) {
        Problem p;
        p.objective = {coef(rng), coef(rng), coef(rng)};
        if (norm(p.objective) < 1e-3) continue;
        for (int j = 0; j < 6; ++j) {
            Constraint row;
            row.coeffs = {coef(rng), coef(rng), coef(rng)};
            if (norm(row.coeffs) < 1e-3) row.coeffs[0] = 1.0;
            row.sense = instance % 2 == 0 ? Sense::LE : Sense::GE;
            row.rhs = coef(rng);
            p.constraints.push_back(std::move(row));
        }
        probe(p, rng, 50);
    }
}
