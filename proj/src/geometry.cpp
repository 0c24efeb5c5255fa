#include "geolp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geolp/vec.hpp"

namespace geolp {

std::vector<double> unit_normal(std::span<const double> v) {
    const double len = norm(v);
    if (len == 0.0) throw std::invalid_argument("unit_normal: zero vector");
    std::vector<double> u(v.begin(), v.end());
    for (double& x : u) x /= len;
    return u;
}

double cos_angle(std::span<const double> u, std::span<const double> w) {
    return std::clamp(dot(u, w), -1.0, 1.0);
}

std::optional<double> bodd(std::span<const double> coeffs, double rhs,
                           std::span<const double> objective_unit) {
    const double rate = dot(coeffs, objective_unit);
    if (rate <= 0.0) return std::nullopt;
    const double d = rhs / rate;
    if (d <= 0.0) return std::nullopt;
    return d;
}

std::optional<BodmpResult> bodmp(const NormalizedProblem& np) {
    std::optional<BodmpResult> best;
    for (std::size_t j = 0; j < np.rows.size(); ++j) {
        const OrientedRow& row = np.rows[j];
        if (row.cls != ConstraintClass::Inward) continue;
        const auto d = bodd(row.coeffs, row.rhs, np.objective_unit);
        if (!d) continue;
        if (!best || *d < best->distance) {
            best = BodmpResult{j, *d, {}};
        }
    }
    if (best) {
        best->point.resize(np.dimension());
        for (std::size_t i = 0; i < np.dimension(); ++i)
            best->point[i] = best->distance * np.objective_unit[i];
    }
    return best;
}

double selection_distance(std::span<const double> coeffs, std::span<const double> unit,
                          std::span<const double> point) {
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * (unit[i] - point[i]);
    return std::abs(s);
}

double hyperplane_distance(std::span<const double> coeffs, double rhs,
                           std::span<const double> point) {
    return std::abs(dot(coeffs, point) - rhs) / norm(coeffs);
}

std::vector<std::size_t> inward_candidates(std::size_t dim, const NormalizedProblem& np,
                                           double epsilon, CriterionDirection direction) {
    std::vector<std::size_t> out;
    const double vo = np.objective_unit[dim];
    for (std::size_t j = 0; j < np.rows.size(); ++j) {
        const OrientedRow& row = np.rows[j];
        if (row.cls != ConstraintClass::Inward) continue;
        const double vj = row.unit[dim];
        const bool pass = direction == CriterionDirection::TableConsistent ? vj >= vo - epsilon
                                                                           : vo >= vj - epsilon;
        if (pass) out.push_back(j);
    }
    return out;
}

std::vector<std::size_t> outward_candidates(std::size_t dim, const NormalizedProblem& np,
                                            double epsilon, CriterionDirection direction) {
    std::vector<std::size_t> out;
    const double vo = np.objective_unit[dim];
    for (std::size_t j = 0; j < np.rows.size(); ++j) {
        const OrientedRow& row = np.rows[j];
        if (row.cls != ConstraintClass::Outward) continue;
        const double vj = row.unit[dim];
        const bool pass = direction == CriterionDirection::TableConsistent ? vo > vj + epsilon
                                                                           : vo <= vj + epsilon;
        if (pass) out.push_back(j);
    }
    return out;
}

}  // namespace geolp
