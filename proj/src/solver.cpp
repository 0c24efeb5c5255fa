#include "geolp/solver.hpp"

#include <algorithm>
#include <cmath>

#include "geolp/vec.hpp"

namespace geolp {

namespace {

// Sorted (e, row) pairs for a dimension's candidates; ties keep index order.
std::vector<std::pair<double, std::size_t>> ranked_by_e(const NormalizedProblem& np,
                                                        const std::vector<std::size_t>& candidates,
                                                        std::span<const double> point) {
    std::vector<std::pair<double, std::size_t>> ranked;
    ranked.reserve(candidates.size());
    for (std::size_t j : candidates)
        ranked.emplace_back(selection_distance(np.rows[j].coeffs, np.rows[j].unit, point), j);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return ranked;
}

}  // namespace

SelectionResult select_active_set(const NormalizedProblem& np,
                                  const std::optional<BodmpResult>& pivot,
                                  const SolverOptions& opts) {
    const std::size_t n = np.dimension();
    const std::vector<double> origin(n, 0.0);
    std::span<const double> point = pivot ? std::span<const double>(pivot->point)
                                          : std::span<const double>(origin);

    std::vector<LimiterChoice> limiters;
    std::vector<std::vector<std::pair<double, std::size_t>>> ranked(n);
    limiters.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> cand;
        ConstraintClass cls = ConstraintClass::Inward;
        if (pivot) cand = inward_candidates(i, np, opts.epsilon, opts.criterion_direction);
        if (cand.empty()) {
            cand = outward_candidates(i, np, opts.epsilon, opts.criterion_direction);
            cls = ConstraintClass::Outward;
        }
        if (cand.empty()) return Unbounded{i};

        ranked[i] = ranked_by_e(np, cand, point);
        LimiterChoice choice;
        choice.dimension = i;
        choice.row = ranked[i].front().second;
        choice.cls = cls;
        choice.e = ranked[i].front().first;
        choice.candidates = std::move(cand);
        limiters.push_back(std::move(choice));
    }

    // Deduplicate: the lowest dimension keeps its pick; later dimensions whose
    // pick is already claimed fall back to their next-smallest-e candidate.
    std::vector<std::size_t> claimed;
    std::vector<std::size_t> unfilled;
    bool repaired_any = false;
    for (std::size_t i = 0; i < n; ++i) {
        LimiterChoice& choice = limiters[i];
        auto taken = [&](std::size_t row) {
            return std::find(claimed.begin(), claimed.end(), row) != claimed.end();
        };
        if (!taken(choice.row)) {
            claimed.push_back(choice.row);
            continue;
        }
        bool filled = false;
        for (const auto& [e, row] : ranked[i]) {
            if (taken(row)) continue;
            choice.row = row;
            choice.e = e;
            choice.repaired = true;
            repaired_any = true;
            claimed.push_back(row);
            filled = true;
            break;
        }
        if (!filled) unfilled.push_back(i);
    }
    if (!unfilled.empty()) return DegenerateSelection{std::move(unfilled)};

    ActiveSet active;
    active.limiters = std::move(limiters);
    active.repair_applied = repaired_any;
    active.basis_rows = std::move(claimed);
    for (std::size_t j : active.basis_rows) {
        active.basis.push_back(np.rows[j].coeffs);
        active.basis_rhs.push_back(np.rows[j].rhs);
    }
    return active;
}

std::variant<std::vector<double>, SingularBasis> solve_vertex(const ActiveSet& active) {
    auto x = solve_square(active.basis, active.basis_rhs, 1e-10);
    if (!x) return SingularBasis{};
    return *std::move(x);
}

SolveOutcome solve(const Problem& problem, const SolverOptions& opts) {
    const NormalizedProblem np = canonicalize(problem);
    std::optional<BodmpResult> pivot = bodmp(np);

    SelectionResult selection = select_active_set(np, pivot, opts);
    if (auto* unb = std::get_if<Unbounded>(&selection)) return *unb;
    if (auto* deg = std::get_if<DegenerateSelection>(&selection)) return std::move(*deg);
    ActiveSet active = std::move(std::get<ActiveSet>(selection));

    auto vertex = solve_vertex(active);
    if (std::holds_alternative<SingularBasis>(vertex)) return SingularBasis{};

    Solved solved;
    solved.x = std::move(std::get<std::vector<double>>(vertex));
    solved.z = evaluate_objective(problem.objective, solved.x);
    solved.pivot_point = std::move(pivot);

    double residual = 0.0;
    for (std::size_t r = 0; r < active.basis.size(); ++r)
        residual = std::max(residual, std::abs(dot(active.basis[r], solved.x) - active.basis_rhs[r]));
    // a vertex this ill-determined is treated as numerically singular
    if (residual >= 1e-8 * (1.0 + inf_norm(active.basis_rhs))) return SingularBasis{};
    solved.residual = residual;
    solved.active = std::move(active);

    if (opts.verify) solved.feasibility = check_feasibility(problem, solved.x);
    return solved;
}

double evaluate_objective(std::span<const double> c, std::span<const double> x) {
    return dot(c, x);
}

}  // namespace geolp
