#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "demo_instance.hpp"
#include "geolp/harness.hpp"
#include "geolp/oracle.hpp"
#include "geolp/solver.hpp"
#include "geolp/vec.hpp"

using namespace geolp;

namespace {

Problem box2() {
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {
        {{1.0, 0.0}, Sense::LE, 1.0},
        {{0.0, 1.0}, Sense::LE, 1.0},
        {{1.0, 0.0}, Sense::GE, 0.0},
        {{0.0, 1.0}, Sense::GE, 0.0},
    };
    return p;
}

}  // namespace

TEST_CASE("select_active_set on the box picks one bound per dimension") {
    const NormalizedProblem np = canonicalize(box2());
    const auto selection = select_active_set(np, bodmp(np), {});
    REQUIRE(std::holds_alternative<ActiveSet>(selection));
    const auto& active = std::get<ActiveSet>(selection);
    CHECK(active.limiters[0].row == 0);
    CHECK(active.limiters[1].row == 1);
    CHECK_FALSE(active.repair_applied);
}

TEST_CASE("select_active_set reports the unbounded dimension") {
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {{{1.0, 0.0}, Sense::LE, 1.0}};
    const NormalizedProblem np = canonicalize(p);
    const auto selection = select_active_set(np, bodmp(np), {});
    REQUIRE(std::holds_alternative<Unbounded>(selection));
    CHECK(std::get<Unbounded>(selection).dimension == 1);
}

TEST_CASE("select_active_set on the demo instance under the default direction") {
    // The e-ranking at the computed pivot point crowds onto the first row;
    // the repair pass then fills dimension 2 with the next candidate. The
    // published marks for this instance (rows 3, 4, 7) are not reproducible
    // from the selection formula; see the acceptance suite.
    const NormalizedProblem np = canonicalize(demo3x8());
    const auto selection = select_active_set(np, bodmp(np), {});
    REQUIRE(std::holds_alternative<ActiveSet>(selection));
    const auto& active = std::get<ActiveSet>(selection);
    CHECK(active.limiters[0].row == 0);
    CHECK(active.limiters[1].row == 4);
    CHECK(active.limiters[1].repaired);
    CHECK(active.limiters[2].row == 6);
    CHECK(active.repair_applied);
    CHECK(active.basis_rows.size() == 3);

    // dimension 3 has no inward candidate and falls through to outward rows
    CHECK(active.limiters[2].cls == ConstraintClass::Outward);
}

TEST_CASE("duplicate selections exhaust into DegenerateSelection") {
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {{{1.0, 1.0}, Sense::LE, 1.0}};
    const NormalizedProblem np = canonicalize(p);
    const auto selection = select_active_set(np, bodmp(np), {});
    REQUIRE(std::holds_alternative<DegenerateSelection>(selection));
    CHECK(std::get<DegenerateSelection>(selection).dimensions == std::vector<std::size_t>{1});
}

TEST_CASE("solve_vertex on the identity basis") {
    ActiveSet active;
    active.basis = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    active.basis_rhs = {5.0, 5.2, 5.5};
    const auto result = solve_vertex(active);
    REQUIRE(std::holds_alternative<std::vector<double>>(result));
    CHECK(std::get<std::vector<double>>(result) == std::vector<double>{5.0, 5.2, 5.5});
}

TEST_CASE("solve_vertex reproduces the published answer from the reconciled rows") {
    ActiveSet active;
    active.basis = {{2.1, 3.0, 1.0}, {1.7, 2.8, 2.1}, {3.0, 1.0, 2.0}};
    active.basis_rhs = {5.0, 5.2, 5.5};
    const auto result = solve_vertex(active);
    REQUIRE(std::holds_alternative<std::vector<double>>(result));
    const auto& x = std::get<std::vector<double>>(result);
    CHECK(x[0] == doctest::Approx(1.1497).epsilon(1e-3));
    CHECK(x[1] == doctest::Approx(0.6241).epsilon(1e-3));
    CHECK(x[2] == doctest::Approx(0.7134).epsilon(1e-3));
    CHECK(evaluate_objective(std::vector<double>{0.5, 1.0, 2.0}, x) ==
          doctest::Approx(2.6257).epsilon(1e-3));
}

TEST_CASE("solve_vertex flags a rank-deficient basis") {
    ActiveSet active;
    active.basis = {{1.0, 2.0}, {1.0, 2.0}};
    active.basis_rhs = {1.0, 1.0};
    CHECK(std::holds_alternative<SingularBasis>(solve_vertex(active)));
}

TEST_CASE("solve finds the box corner") {
    const SolveOutcome outcome = solve(box2());
    REQUIRE(std::holds_alternative<Solved>(outcome));
    const auto& solved = std::get<Solved>(outcome);
    CHECK(solved.x[0] == doctest::Approx(1.0));
    CHECK(solved.x[1] == doctest::Approx(1.0));
    CHECK(solved.z == doctest::Approx(2.0));
    CHECK(solved.residual <= 1e-8 * (1.0 + 1.0));
    REQUIRE(solved.feasibility.has_value());
    CHECK(solved.feasibility->violated.empty());
}

TEST_CASE("solve reports unboundedness with the failing dimension") {
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {{{1.0, 0.0}, Sense::LE, 1.0}};
    const SolveOutcome outcome = solve(p);
    REQUIRE(std::holds_alternative<Unbounded>(outcome));
    CHECK(std::get<Unbounded>(outcome).dimension == 1);
}

TEST_CASE("solve on the demo instance records both sides honestly") {
    const SolveOutcome outcome = solve(demo3x8());
    REQUIRE(std::holds_alternative<Solved>(outcome));
    const auto& solved = std::get<Solved>(outcome);
    REQUIRE(solved.pivot_point.has_value());
    CHECK(solved.pivot_point->row == 1);

    const auto oracle = enumerate_vertices(demo3x8());
    const auto& exact = std::get<OracleResult>(oracle);
    CHECK(exact.z == doctest::Approx(4.761905).epsilon(1e-6));
    // the heuristic answer differs from the optimum and its violations are
    // reported, not repaired
    REQUIRE(solved.feasibility.has_value());
    CHECK_FALSE(solved.feasibility->violated.empty());
    CHECK(solved.z != doctest::Approx(exact.z).epsilon(1e-6));
}

TEST_CASE("solve surfaces a rank-deficient repaired basis as SingularBasis") {
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {
        {{1.0, 1.0}, Sense::LE, 1.0},
        {{2.0, 2.0}, Sense::LE, 3.0},
    };
    CHECK(std::holds_alternative<SingularBasis>(solve(p)));
}

TEST_CASE("solve falls back to outward-only selection without an inward crossing") {
    Problem p;
    p.objective = {1.0};
    p.constraints = {{{1.0}, Sense::GE, 0.0}};
    const SolveOutcome outcome = solve(p);
    REQUIRE(std::holds_alternative<Unbounded>(outcome));
    CHECK(std::get<Unbounded>(outcome).dimension == 0);
}

TEST_CASE("solve residual satisfies the solved-state bound") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = 2 + seed % 3;
        spec.m_inward = 4;
        spec.m_outward = spec.n;
        const Problem p = generate_problem(spec);
        const SolveOutcome outcome = solve(p);
        if (const auto* solved = std::get_if<Solved>(&outcome)) {
            const double scale = 1.0 + inf_norm(solved->active.basis_rhs);
            CHECK(solved->residual < 1e-8 * scale);
        }
    }
}

TEST_CASE("solve is deterministic") {
    GenSpec spec;
    spec.seed = 9;
    spec.n = 3;
    spec.m_inward = 5;
    spec.m_outward = 3;
    const Problem p = generate_problem(spec);
    const SolveOutcome a = solve(p);
    const SolveOutcome b = solve(p);
    REQUIRE(a.index() == b.index());
    if (const auto* sa = std::get_if<Solved>(&a)) {
        const auto& sb = std::get<Solved>(b);
        CHECK(sa->x == sb.x);
        CHECK(sa->z == sb.z);
        CHECK(sa->active.basis_rows == sb.active.basis_rows);
    }
}

TEST_CASE("permuting constraints permutes nothing but row labels") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = 3;
        spec.m_inward = 4;
        spec.m_outward = 3;
        const Problem p = generate_problem(spec);
        const SolveOutcome base = solve(p);
        const auto* solved = std::get_if<Solved>(&base);
        if (!solved) continue;

        // strict-tie detection: skip instances where any dimension had two
        // candidates at the same selection distance
        bool tied = false;
        for (const LimiterChoice& choice : solved->active.limiters) {
            const NormalizedProblem np = canonicalize(p);
            int at_min = 0;
            for (std::size_t j : choice.candidates) {
                const double e = selection_distance(np.rows[j].coeffs, np.rows[j].unit,
                                                    solved->pivot_point
                                                        ? solved->pivot_point->point
                                                        : std::vector<double>(3, 0.0));
                if (std::abs(e - choice.e) <= 1e-12) ++at_min;
            }
            if (at_min > 1) tied = true;
        }
        if (tied) continue;

        std::vector<std::size_t> perm(p.row_count());
        for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        Problem q;
        q.objective = p.objective;
        for (std::size_t j : perm) q.constraints.push_back(p.constraints[j]);

        const SolveOutcome permuted = solve(q);
        REQUIRE(std::holds_alternative<Solved>(permuted));
        const auto& sp = std::get<Solved>(permuted);
        for (std::size_t i = 0; i < sp.x.size(); ++i)
            CHECK(sp.x[i] == doctest::Approx(solved->x[i]).epsilon(1e-9));
    }
}

TEST_CASE("positive objective scaling never changes the selection") {
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = 2 + seed % 3;
        spec.m_inward = 4;
        spec.m_outward = spec.n;
        const Problem p = generate_problem(spec);
        Problem scaled = p;
        for (double& ci : scaled.objective) ci *= 3.0;
        CHECK(selection_signature(solve(p)) == selection_signature(solve(scaled)));
    }
}

TEST_CASE("matching bases imply matching objective values") {
    for (std::uint64_t seed = 400; seed < 460; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = 2;
        spec.m_inward = 3;
        spec.m_outward = 2;
        const Problem p = generate_problem(spec);
        const ComparisonRecord rec = compare(p);
        if (!rec.active_set_match) continue;
        REQUIRE(rec.z_gap.has_value());
        const auto& oracle = std::get<OracleResult>(*rec.oracle);
        CHECK(std::abs(*rec.z_gap) < 1e-8 * (1.0 + std::abs(oracle.z)));
    }
}

TEST_CASE("evaluate_objective") {
    CHECK(evaluate_objective(std::vector<double>{0.5, 1.0, 2.0},
                             std::vector<double>{1.1497, 0.6241, 0.7134}) ==
          doctest::Approx(2.6257).epsilon(1e-3));
    CHECK(evaluate_objective(std::vector<double>{1.0, 2.0}, std::vector<double>{0.0, 0.0}) == 0.0);
    CHECK(evaluate_objective(std::vector<double>{1.0, 0.0}, std::vector<double>{3.5, 9.0}) == 3.5);
}
