#include "geolp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "geolp/vec.hpp"

namespace geolp {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

}  // namespace

Problem generate_problem(const GenSpec& spec) {
    if (spec.n == 0) throw std::runtime_error("generate_problem: n must be positive");
    std::mt19937_64 rng(spec.seed);
    const double span = std::max(std::abs(spec.coeff_min), std::abs(spec.coeff_max));
    const std::size_t budget = 1000 * (spec.m_inward + 1);

    Problem p;
    p.objective.resize(spec.n);
    std::size_t attempts = 0;
    do {
        if (++attempts > budget) throw std::runtime_error("generate_problem: resample budget exceeded");
        for (double& ci : p.objective) ci = uniform(rng, spec.coeff_min, spec.coeff_max);
    } while (inf_norm(p.objective) < 1e-6 * span);

    // Inward rows: a.c strictly positive, positive resource, origin feasible.
    for (std::size_t j = 0; j < spec.m_inward; ++j) {
        Constraint row;
        row.coeffs.resize(spec.n);
        attempts = 0;
        do {
            if (++attempts > budget) throw std::runtime_error("generate_problem: resample budget exceeded");
            for (double& a : row.coeffs) a = uniform(rng, spec.coeff_min, spec.coeff_max);
        } while (dot(row.coeffs, p.objective) <= 1e-6 * span * span);
        row.sense = Sense::LE;
        row.rhs = uniform(rng, std::max(spec.resource_min, 1e-3), spec.resource_max);
        p.constraints.push_back(std::move(row));
    }

    // Outward rows: non-negativity first, then lower-bound-style rows with
    // non-positive resources so the origin stays feasible.
    const std::size_t bounds = std::min(spec.n, spec.m_outward);
    for (std::size_t i = 0; i < bounds; ++i) {
        Constraint row;
        row.coeffs.assign(spec.n, 0.0);
        row.coeffs[i] = 1.0;
        row.sense = Sense::GE;
        row.rhs = 0.0;
        p.constraints.push_back(std::move(row));
    }
    for (std::size_t j = bounds; j < spec.m_outward; ++j) {
        Constraint row;
        row.coeffs.resize(spec.n);
        attempts = 0;
        do {
            if (++attempts > budget) throw std::runtime_error("generate_problem: resample budget exceeded");
            for (double& a : row.coeffs) a = uniform(rng, spec.coeff_min, spec.coeff_max);
        } while (dot(row.coeffs, p.objective) <= 1e-6 * span * span);
        row.sense = Sense::GE;
        row.rhs = -uniform(rng, std::max(spec.resource_min, 1e-3), spec.resource_max);
        p.constraints.push_back(std::move(row));
    }

    if (spec.include_box) {
        for (std::size_t i = 0; i < spec.n; ++i) {
            Constraint row;
            row.coeffs.assign(spec.n, 0.0);
            row.coeffs[i] = 1.0;
            row.sense = Sense::LE;
            row.rhs = spec.resource_max;
            p.constraints.push_back(std::move(row));
        }
    }
    for (std::size_t j = 0; j < p.row_count(); ++j) p.names.push_back(p.row_name(j));
    return p;
}

std::vector<std::size_t> selection_signature(const SolveOutcome& outcome) {
    std::vector<std::size_t> rows;
    if (const auto* solved = std::get_if<Solved>(&outcome))
        for (const LimiterChoice& choice : solved->active.limiters) rows.push_back(choice.row);
    return rows;
}

namespace {

bool selections_differ(const SolveOutcome& a, const SolveOutcome& b) {
    if (a.index() != b.index()) return true;
    return selection_signature(a) != selection_signature(b);
}

Problem with_row_rescaled(const Problem& p, std::size_t row, double lambda) {
    Problem q = p;
    for (double& a : q.constraints[row].coeffs) a *= lambda;
    q.constraints[row].rhs *= lambda;
    return q;
}

bool any_row_rescale_flips(const Problem& p, const SolveOutcome& base, double lambda,
                           const SolverOptions& opts) {
    for (std::size_t j = 0; j < p.row_count(); ++j)
        if (selections_differ(base, solve(with_row_rescaled(p, j, lambda), opts))) return true;
    return false;
}

}  // namespace

ComparisonRecord compare(const Problem& problem, const SolverOptions& opts,
                         const OracleOptions& oracle_opts) {
    ComparisonRecord rec;
    rec.n = problem.dimension();
    rec.m = problem.row_count();

    double t0 = now_ms();
    rec.heuristic = solve(problem, opts);
    rec.heuristic_ms = now_ms() - t0;

    t0 = now_ms();
    OracleOutcome oracle = enumerate_vertices(problem, oracle_opts);
    rec.oracle_method = "enum";
    if (std::holds_alternative<OracleError>(oracle)) {
        oracle = simplex_solve(problem, oracle_opts);
        rec.oracle_method = "simplex";
    }
    rec.oracle_ms = now_ms() - t0;
    rec.oracle = oracle;

    const auto* solved = std::get_if<Solved>(&rec.heuristic);
    const auto* oracle_result = std::get_if<OracleResult>(&*rec.oracle);
    if (solved) {
        rec.max_violation = check_feasibility(problem, solved->x, oracle_opts.feasibility_tol).max_violation;
        if (oracle_result && oracle_result->status == OracleStatus::Optimal) {
            rec.z_gap = oracle_result->z - solved->z;
            std::vector<std::size_t> basis = solved->active.basis_rows;
            std::vector<std::size_t> active = oracle_result->active_rows;
            std::sort(basis.begin(), basis.end());
            std::sort(active.begin(), active.end());
            rec.active_set_match = basis == active;
        }
    }
    return rec;
}

Statistics compute_statistics(std::span<const ComparisonRecord> records, double feasibility_tol) {
    Statistics s;
    s.trials = records.size();
    std::vector<double> rel_gaps;
    for (const ComparisonRecord& rec : records) {
        const auto* solved = std::get_if<Solved>(&rec.heuristic);
        if (solved) {
            ++s.heuristic_solved;
            if (rec.max_violation > feasibility_tol) ++s.infeasible_solutions;
        }
        if (std::holds_alternative<Unbounded>(rec.heuristic)) ++s.heuristic_unbounded;
        if (std::holds_alternative<DegenerateSelection>(rec.heuristic) ||
            std::holds_alternative<SingularBasis>(rec.heuristic))
            ++s.heuristic_degenerate;

        const OracleResult* oracle = rec.oracle ? std::get_if<OracleResult>(&*rec.oracle) : nullptr;
        const bool oracle_optimal = oracle && oracle->status == OracleStatus::Optimal;
        if (oracle_optimal) {
            ++s.oracle_optimal;
            if (std::holds_alternative<Unbounded>(rec.heuristic)) ++s.unbounded_on_optimal;
        }
        if (rec.z_gap) {
            ++s.comparable;
            const double rel = std::abs(*rec.z_gap) / (1.0 + std::abs(oracle->z));
            rel_gaps.push_back(rel);
            if (rel < 1e-6) ++s.gap_below_1e6;
            if (rec.active_set_match) ++s.matches;
        }
        if (rec.direction_flip) ++s.direction_flips;
        if (rec.rescale_flip_low) ++s.rescale_flips_low;
        if (rec.rescale_flip_high) ++s.rescale_flips_high;
    }

    if (s.comparable > 0) {
        s.match_fraction = double(s.matches) / double(s.comparable);
        // Wilson 95% interval
        const double z = 1.959963984540054;
        const double nn = double(s.comparable);
        const double phat = s.match_fraction;
        const double denom = 1.0 + z * z / nn;
        const double center = phat + z * z / (2.0 * nn);
        const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn));
        s.match_ci_low = std::max(0.0, (center - half) / denom);
        s.match_ci_high = std::min(1.0, (center + half) / denom);
    }
    if (!rel_gaps.empty()) {
        std::sort(rel_gaps.begin(), rel_gaps.end());
        auto quantile = [&](double q) {
            const double idx = q * double(rel_gaps.size() - 1);
            const std::size_t lo = static_cast<std::size_t>(idx);
            const std::size_t hi = std::min(lo + 1, rel_gaps.size() - 1);
            const double frac = idx - double(lo);
            return rel_gaps[lo] * (1.0 - frac) + rel_gaps[hi] * frac;
        };
        s.rel_gap.p50 = quantile(0.50);
        s.rel_gap.p90 = quantile(0.90);
        s.rel_gap.p99 = quantile(0.99);
        s.rel_gap.max = rel_gaps.back();
    }
    return s;
}

EnsembleReport run_ensemble(std::span<const GenSpec> specs, std::size_t trials,
                            std::uint64_t base_seed, const SolverOptions& opts) {
    EnsembleReport report;
    if (specs.empty() || trials == 0) {
        report.stats = compute_statistics(report.records);
        return report;
    }
    report.records.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        GenSpec spec = specs[t % specs.size()];
        spec.seed = base_seed + t;
        const Problem problem = generate_problem(spec);

        ComparisonRecord rec = compare(problem, opts);
        rec.seed = spec.seed;
        rec.trial = t;

        SolverOptions flipped = opts;
        flipped.criterion_direction = opts.criterion_direction == CriterionDirection::Printed
                                          ? CriterionDirection::TableConsistent
                                          : CriterionDirection::Printed;
        rec.direction_flip = selections_differ(rec.heuristic, solve(problem, flipped));
        rec.rescale_flip_low = any_row_rescale_flips(problem, rec.heuristic, 0.1, opts);
        rec.rescale_flip_high = any_row_rescale_flips(problem, rec.heuristic, 10.0, opts);

        report.records.push_back(std::move(rec));
    }
    report.stats = compute_statistics(report.records);
    return report;
}

}  // namespace geolp
