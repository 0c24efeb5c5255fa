#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geolp/oracle.hpp"
#include "geolp/problem.hpp"
#include "geolp/solver.hpp"

namespace geolp {

/// Deterministic instance generator: same spec (seed included) gives the
/// identical problem. Inward rows keep the origin strictly inside, outward
/// rows are non-negativity bounds plus optional lower-bound-style rows, and
/// include_box adds x_i <= resource_max so instances stay bounded.
struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t n = 2;
    std::size_t m_inward = 3;
    std::size_t m_outward = 2;
    double coeff_min = 0.1;
    double coeff_max = 2.0;
    double resource_min = 1.0;
    double resource_max = 6.0;
    bool include_box = true;
};

/// Throws std::runtime_error when inward-row resampling exceeds its budget.
Problem generate_problem(const GenSpec& spec);

struct ComparisonRecord {
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    SolveOutcome heuristic;
    std::optional<OracleOutcome> oracle;
    std::string oracle_method;     ///< "enum" or "simplex"
    std::optional<double> z_gap;   ///< z_oracle - z_heuristic, both sides solved
    bool active_set_match = false; ///< heuristic basis == oracle binding set
    double max_violation = 0.0;    ///< heuristic x against the instance rows
    bool direction_flip = false;   ///< printed vs table-consistent selections differ
    bool rescale_flip_low = false; ///< some single-row 0.1x rescale changes selections
    bool rescale_flip_high = false;///< same with 10x
    double heuristic_ms = 0.0;
    double oracle_ms = 0.0;
};

/// Runs the heuristic and the exact oracle (enumeration, simplex above the
/// subset budget) on one instance and fills the record. Nothing is repaired
/// or filtered: gaps and violations are recorded raw.
ComparisonRecord compare(const Problem& problem, const SolverOptions& opts = {},
                         const OracleOptions& oracle_opts = {});

struct Quantiles {
    double p50 = 0.0;
    double p90 = 0.0;
    double p99 = 0.0;
    double max = 0.0;
};

/// Aggregates over a record multiset; order-independent and time-free, so
/// identical seeds reproduce identical statistics bit for bit.
struct Statistics {
    std::size_t trials = 0;
    std::size_t heuristic_solved = 0;
    std::size_t heuristic_unbounded = 0;
    std::size_t heuristic_degenerate = 0;
    std::size_t oracle_optimal = 0;
    std::size_t comparable = 0;  ///< both sides produced an objective value
    std::size_t matches = 0;
    double match_fraction = 0.0;
    double match_ci_low = 0.0;  ///< 95% Wilson interval
    double match_ci_high = 0.0;
    std::size_t gap_below_1e6 = 0;  ///< relative gap < 1e-6 among comparable
    Quantiles rel_gap;              ///< |z_gap| / (1 + |z_oracle|)
    std::size_t infeasible_solutions = 0;  ///< violation beyond tol among solved
    std::size_t unbounded_on_optimal = 0;  ///< heuristic unbounded, oracle optimal
    std::size_t direction_flips = 0;
    std::size_t rescale_flips_low = 0;
    std::size_t rescale_flips_high = 0;
};

Statistics compute_statistics(std::span<const ComparisonRecord> records,
                              double feasibility_tol = 1e-7);

struct EnsembleReport {
    std::vector<ComparisonRecord> records;
    Statistics stats;
};

/// Trial t draws specs[t % specs.size()] with seed base_seed + t, compares
/// heuristic and oracle, and probes selection sensitivity (criterion
/// direction, per-row rescaling by 0.1 and 10).
EnsembleReport run_ensemble(std::span<const GenSpec> specs, std::size_t trials,
                            std::uint64_t base_seed, const SolverOptions& opts = {});

/// Selected row per dimension, or empty when the outcome is not Solved.
std::vector<std::size_t> selection_signature(const SolveOutcome& outcome);

}  // namespace geolp
