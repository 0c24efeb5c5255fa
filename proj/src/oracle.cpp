#include "geolp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geolp/vec.hpp"

namespace geolp {

namespace {

struct LeForm {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
};

LeForm to_le_form(const Problem& problem) {
    LeForm le;
    le.a.reserve(problem.row_count());
    le.b.reserve(problem.row_count());
    for (const Constraint& row : problem.constraints) {
        std::vector<double> a = row.coeffs;
        double b = row.rhs;
        if (row.sense == Sense::GE) {
            for (double& x : a) x = -x;
            b = -b;
        }
        le.a.push_back(std::move(a));
        le.b.push_back(b);
    }
    return le;
}

std::vector<std::size_t> binding_rows(const LeForm& le, std::span<const double> x, double tol) {
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < le.a.size(); ++j)
        if (std::abs(dot(le.a[j], x) - le.b[j]) <= tol) rows.push_back(j);
    return rows;
}

bool next_subset(std::vector<std::size_t>& pick, std::size_t m) {
    const std::size_t n = pick.size();
    std::size_t i = n;
    while (i-- > 0) {
        if (pick[i] + (n - i) < m) {
            ++pick[i];
            for (std::size_t k = i + 1; k < n; ++k) pick[k] = pick[k - 1] + 1;
            return true;
        }
    }
    return false;
}

// True when some corner of the unit box is a recession direction improving
// the objective. Provable-only: a miss is not a bounded verdict.
bool box_corner_recession(const LeForm& le, std::span<const double> c) {
    const std::size_t n = c.size();
    if (n > 20) return false;
    std::vector<double> d(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1 ? 1.0 : -1.0;
        if (dot(c, d) <= 1e-9 * (1.0 + inf_norm(c))) continue;
        bool ok = true;
        for (std::size_t j = 0; j < le.a.size() && ok; ++j)
            ok = dot(le.a[j], d) <= 1e-9 * (1.0 + inf_norm(le.a[j]));
        if (ok) return true;
    }
    return false;
}

}  // namespace

OracleOutcome enumerate_vertices(const Problem& problem, const OracleOptions& opts) {
    const std::size_t n = problem.dimension();
    const std::size_t m = problem.row_count();
    if (m < n) return OracleError::BudgetExceeded;

    double subsets = 1.0;
    for (std::size_t i = 0; i < n; ++i) subsets = subsets * double(m - i) / double(i + 1);
    if (subsets > double(opts.subset_cap)) return OracleError::BudgetExceeded;

    const LeForm le = to_le_form(problem);

    OracleResult result;
    double best = -std::numeric_limits<double>::infinity();
    bool feasible_found = false;

    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    std::vector<std::vector<double>> sys(n);
    std::vector<double> rhs(n);
    do {
        for (std::size_t i = 0; i < n; ++i) {
            sys[i] = le.a[pick[i]];
            rhs[i] = le.b[pick[i]];
        }
        const auto x = solve_square(sys, rhs, opts.pivot_tol);
        if (!x) continue;
        bool feasible = true;
        for (std::size_t j = 0; j < m && feasible; ++j)
            feasible = dot(le.a[j], *x) <= le.b[j] + opts.feasibility_tol;
        if (!feasible) continue;
        feasible_found = true;
        ++result.vertex_count;
        const double z = dot(problem.objective, *x);
        if (z > best) {
            best = z;
            result.x = *x;
        }
    } while (next_subset(pick, m));

    if (feasible_found && box_corner_recession(le, problem.objective)) {
        result.status = OracleStatus::Unbounded;
        result.x.clear();
        return result;
    }
    if (!feasible_found) {
        result.status = OracleStatus::Infeasible;
        return result;
    }
    result.status = OracleStatus::Optimal;
    result.z = best;
    result.active_rows = binding_rows(le, result.x, opts.feasibility_tol);
    return result;
}

namespace {

enum class RunResult { Optimal, Unbounded, Cap };

// Dense tableau over columns [u_1..u_n, w_1..w_n, s_1..s_m, t_1..t_k | rhs],
// with x = u - w. Bland's smallest-index rule throughout.
class Tableau {
public:
    Tableau(const LeForm& le, std::size_t n, const OracleOptions& opts)
        : n_(n), m_(le.a.size()), opts_(opts) {
        structural_ = 2 * n_ + m_;
        std::size_t artificials = 0;
        for (double b : le.b)
            if (b < 0.0) ++artificials;
        cols_ = structural_ + artificials;

        rows_.assign(m_, std::vector<double>(cols_ + 1, 0.0));
        basis_.assign(m_, 0);
        std::size_t art = 0;
        for (std::size_t j = 0; j < m_; ++j) {
            const double flip = le.b[j] < 0.0 ? -1.0 : 1.0;
            for (std::size_t i = 0; i < n_; ++i) {
                rows_[j][i] = flip * le.a[j][i];
                rows_[j][n_ + i] = -flip * le.a[j][i];
            }
            rows_[j][2 * n_ + j] = flip;
            rows_[j][cols_] = flip * le.b[j];
            if (flip < 0.0) {
                rows_[j][structural_ + art] = 1.0;
                basis_[j] = structural_ + art;
                ++art;
            } else {
                basis_[j] = 2 * n_ + j;
            }
        }
    }

    bool has_artificials() const { return cols_ > structural_; }

    // Minimizes `cost` over the current basis. Entering columns are capped at
    // `limit` so phase 2 can shut artificials out.
    RunResult run(const std::vector<double>& cost, std::size_t limit, std::size_t& pivots) {
        for (;;) {
            if (pivots >= opts_.pivot_cap) return RunResult::Cap;
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (reduced_cost(cost, j) < -1e-9) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) return RunResult::Optimal;

            std::size_t leave = m_;
            double best_ratio = 0.0;
            for (std::size_t r = 0; r < m_; ++r) {
                const double a = rows_[r][enter];
                if (a <= 1e-11) continue;
                const double ratio = rows_[r][cols_] / a;
                if (leave == m_ || ratio < best_ratio - 1e-12 ||
                    (std::abs(ratio - best_ratio) <= 1e-12 && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return RunResult::Unbounded;
            pivot(leave, enter);
            ++pivots;
        }
    }

    double objective_value(const std::vector<double>& cost) const {
        double z = 0.0;
        for (std::size_t r = 0; r < m_; ++r) z += cost[basis_[r]] * rows_[r][cols_];
        return z;
    }

    // Pivots still-basic artificials out where possible; a row that cannot
    // release its artificial is dependent and keeps it pinned at zero.
    void retire_artificials(std::size_t& pivots) {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < structural_) continue;
            for (std::size_t j = 0; j < structural_; ++j) {
                if (std::abs(rows_[r][j]) > 1e-9) {
                    pivot(r, j);
                    ++pivots;
                    break;
                }
            }
        }
    }

    std::vector<double> extract_x() const {
        std::vector<double> value(cols_, 0.0);
        for (std::size_t r = 0; r < m_; ++r) value[basis_[r]] = rows_[r][cols_];
        std::vector<double> x(n_);
        for (std::size_t i = 0; i < n_; ++i) x[i] = value[i] - value[n_ + i];
        return x;
    }

    std::size_t columns() const { return cols_; }
    std::size_t structural_columns() const { return structural_; }

private:
    double reduced_cost(const std::vector<double>& cost, std::size_t j) const {
        double rc = cost[j];
        for (std::size_t r = 0; r < m_; ++r) rc -= cost[basis_[r]] * rows_[r][j];
        return rc;
    }

    void pivot(std::size_t r, std::size_t c) {
        const double inv = 1.0 / rows_[r][c];
        for (double& v : rows_[r]) v *= inv;
        rows_[r][c] = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = rows_[i][c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) rows_[i][j] -= f * rows_[r][j];
            rows_[i][c] = 0.0;
        }
        basis_[r] = c;
    }

    std::size_t n_, m_, structural_ = 0, cols_ = 0;
    OracleOptions opts_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::size_t> basis_;
};

}  // namespace

OracleOutcome simplex_solve(const Problem& problem, const OracleOptions& opts) {
    const std::size_t n = problem.dimension();
    const LeForm le = to_le_form(problem);

    Tableau tab(le, n, opts);
    std::size_t pivots = 0;

    if (tab.has_artificials()) {
        std::vector<double> phase1(tab.columns(), 0.0);
        for (std::size_t j = tab.structural_columns(); j < tab.columns(); ++j) phase1[j] = 1.0;
        if (tab.run(phase1, tab.columns(), pivots) == RunResult::Cap) return OracleError::IterationCap;
        if (tab.objective_value(phase1) > opts.feasibility_tol) {
            OracleResult r;
            r.status = OracleStatus::Infeasible;
            return r;
        }
        tab.retire_artificials(pivots);
    }

    std::vector<double> phase2(tab.columns(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        phase2[i] = -problem.objective[i];
        phase2[n + i] = problem.objective[i];
    }
    switch (tab.run(phase2, tab.structural_columns(), pivots)) {
        case RunResult::Cap:
            return OracleError::IterationCap;
        case RunResult::Unbounded: {
            OracleResult r;
            r.status = OracleStatus::Unbounded;
            return r;
        }
        case RunResult::Optimal:
            break;
    }

    OracleResult r;
    r.status = OracleStatus::Optimal;
    r.x = tab.extract_x();
    r.z = dot(problem.objective, r.x);
    r.active_rows = binding_rows(le, r.x, opts.feasibility_tol);
    return r;
}

FeasibilityReport check_feasibility(const Problem& problem, std::span<const double> x, double tol) {
    FeasibilityReport report;
    report.rows.reserve(problem.row_count());
    for (std::size_t j = 0; j < problem.row_count(); ++j) {
        const Constraint& row = problem.constraints[j];
        const double lhs = dot(row.coeffs, x);
        const double slack = row.sense == Sense::LE ? row.rhs - lhs : lhs - row.rhs;
        RowSlack rs{j, slack, std::max(0.0, -slack)};
        if (rs.violation > tol) report.violated.push_back(j);
        report.max_violation = std::max(report.max_violation, rs.violation);
        report.rows.push_back(rs);
    }
    return report;
}

}  // namespace geolp
