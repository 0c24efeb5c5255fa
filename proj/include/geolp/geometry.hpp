#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geolp/problem.hpp"

namespace geolp {

inline constexpr double kCriterionEpsilon = 1e-9;

/// Direction of the per-dimension limiting criteria. The printed inequalities
/// and the worked tables they accompany disagree; both variants are kept so
/// the discrepancy stays testable. TableConsistent is the default everywhere.
enum class CriterionDirection { Printed, TableConsistent };

/// v / |v|. Throws std::invalid_argument on the zero vector.
std::vector<double> unit_normal(std::span<const double> v);

/// Dot product of two unit vectors, clamped to [-1, 1].
double cos_angle(std::span<const double> u, std::span<const double> w);

/// Distance from the origin to the row's boundary measured along the
/// objective's unit direction. The row must be in <= orientation. Empty when
/// the ray runs parallel to the boundary or meets it at a non-positive
/// parameter (boundary behind the origin).
std::optional<double> bodd(std::span<const double> coeffs, double rhs,
                           std::span<const double> objective_unit);

struct BodmpResult {
    std::size_t row = 0;  ///< index of the defining inward constraint
    double distance = 0.0;
    std::vector<double> point;  ///< distance * v_o
};

/// First inward boundary met by the objective ray: the minimum finite bodd
/// over inward rows, ties broken to the lowest index. Empty when no inward
/// row crosses the ray ahead of the origin.
std::optional<BodmpResult> bodmp(const NormalizedProblem& np);

/// |sum_i a_i (v_i - x_i)|: coefficient-weighted gap between a row's unit
/// normal and a reference point, computed on the stored orientation. Drives
/// limiter selection. Note this is not the point-to-hyperplane distance and
/// is not invariant under row rescaling.
double selection_distance(std::span<const double> coeffs, std::span<const double> unit,
                          std::span<const double> point);

/// |a.x - b| / |a|, the standard point-to-hyperplane distance. Reported as a
/// diagnostic alongside selection_distance.
double hyperplane_distance(std::span<const double> coeffs, double rhs,
                           std::span<const double> point);

/// Inward rows that can limit growth along dimension `dim` (0-based).
/// TableConsistent: v_ji >= v_oi - eps. Printed: v_oi >= v_ji - eps.
std::vector<std::size_t> inward_candidates(std::size_t dim, const NormalizedProblem& np,
                                           double epsilon = kCriterionEpsilon,
                                           CriterionDirection direction = CriterionDirection::TableConsistent);

/// Outward rows (stored >= orientation) that can limit growth along `dim`.
/// TableConsistent: v_oi > v_ji + eps; strict, so a bound whose own component
/// matches v_oi (e.g. x_i >= 0 against maximizing x_i) never limits its own
/// dimension. Printed: v_oi <= v_ji + eps.
std::vector<std::size_t> outward_candidates(std::size_t dim, const NormalizedProblem& np,
                                            double epsilon = kCriterionEpsilon,
                                            CriterionDirection direction = CriterionDirection::TableConsistent);

}  // namespace geolp
