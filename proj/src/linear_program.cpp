#include "hcara/linear_program.hpp"

#include "hcara/errors.hpp"

#include <limits>

namespace hcara {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau in canonical form: the basic column of row i is
// basis[i] and holds the i-th unit vector. The last column is the rhs.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : cells_(rows, std::vector<Rational>(cols + 1)), basis_(rows, kNone), cols_(cols) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
    Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
    const Rational& rhs(std::size_t r) const { return cells_[r][cols_]; }

    std::size_t rows() const { return cells_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }

    void erase_row(std::size_t r) {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    void pivot(std::size_t pr, std::size_t pc) {
        auto& prow = cells_[pr];
        const Rational inv = 1 / prow[pc];
        for (auto& cell : prow) {
            if (cell != 0) cell *= inv;
        }
        for (std::size_t r = 0; r < cells_.size(); ++r) {
            if (r == pr) continue;
            auto& row = cells_[r];
            if (row[pc] == 0) continue;
            const Rational factor = row[pc];
            for (std::size_t c = 0; c <= cols_; ++c) {
                if (prow[c] != 0) row[c] -= factor * prow[c];
            }
        }
        basis_[pr] = pc;
    }

    // Maximizes cost . x over the current basic feasible solution using
    // Bland's rule. Columns flagged in `banned` never enter. Returns false
    // when unbounded.
    bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& banned) {
        while (true) {
            const std::size_t enter = entering_column(cost, banned);
            if (enter == kNone) return true;
            std::size_t leave = kNone;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows(); ++r) {
                if (at(r, enter) <= 0) continue;
                Rational ratio = rhs(r) / at(r, enter);
                if (leave == kNone || ratio < best_ratio || (ratio == best_ratio && basic(r) < basic(leave))) {
                    leave = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }

    Rational objective_value(const std::vector<Rational>& cost) const {
        Rational value = 0;
        for (std::size_t r = 0; r < rows(); ++r) {
            if (cost[basic(r)] != 0) value += cost[basic(r)] * rhs(r);
        }
        return value;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(cols_);
        for (std::size_t r = 0; r < rows(); ++r) x[basic(r)] = rhs(r);
        return x;
    }

private:
    std::size_t entering_column(const std::vector<Rational>& cost, const std::vector<bool>& banned) const {
        std::vector<bool> is_basic(cols_, false);
        for (std::size_t r = 0; r < rows(); ++r) is_basic[basic(r)] = true;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (banned[c] || is_basic[c]) continue;
            Rational reduced = cost[c];
            for (std::size_t r = 0; r < rows(); ++r) {
                if (at(r, c) != 0 && cost[basic(r)] != 0) reduced -= cost[basic(r)] * at(r, c);
            }
            if (reduced > 0) return c;
        }
        return kNone;
    }

    std::vector<std::vector<Rational>> cells_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

void check_shape(const LinearProgram& lp) {
    if (lp.num_vars == 0) throw InputError("linear program needs at least one variable");
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        if (lp.rows[i].coeffs.dim() != lp.num_vars) {
            throw InputError("row " + std::to_string(i) + " has " + std::to_string(lp.rows[i].coeffs.dim()) +
                             " coefficients, expected " + std::to_string(lp.num_vars));
        }
    }
    if (lp.objective && lp.objective->dim() != lp.num_vars) {
        throw InputError("objective length does not match the number of variables");
    }
}

}  // namespace

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Infeasible: return "INFEASIBLE";
        case LpStatus::Optimal: return "OPTIMAL";
        case LpStatus::Unbounded: return "UNBOUNDED";
        case LpStatus::Feasible: return "FEASIBLE";
    }
    return "UNKNOWN";
}

bool satisfies(const LinearProgram& lp, const RVector& point) {
    for (const auto& row : lp.rows) {
        const Rational lhs = dot(row.coeffs, point);
        switch (row.relation) {
            case Relation::LessEqual:
                if (lhs > row.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != row.rhs) return false;
                break;
            case Relation::GreaterEqual:
                if (lhs < row.rhs) return false;
                break;
        }
    }
    return true;
}

LpOutcome solve(const LinearProgram& lp) {
    check_shape(lp);
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.rows.size();

    // Column layout: x = u - v with u, v >= 0, then one slack per inequality
    // row, then artificials for rows whose slack cannot start basic.
    std::vector<std::size_t> slack_col(m, kNone);
    std::size_t cols = 2 * n;
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.rows[i].relation != Relation::Equal) slack_col[i] = cols++;
    }
    std::vector<int> row_sign(m, 1);
    std::vector<bool> needs_artificial(m, true);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        row_sign[i] = row.rhs < 0 ? -1 : 1;
        const int slack_coeff = row.relation == Relation::LessEqual ? 1 : -1;
        if (row.relation != Relation::Equal && slack_coeff * row_sign[i] == 1) needs_artificial[i] = false;
    }
    const std::size_t first_artificial = cols;
    std::vector<std::size_t> artificial_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i) {
        if (needs_artificial[i]) artificial_col[i] = cols++;
    }

    Tableau tab(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        const Rational s(row_sign[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (row.coeffs[j] == 0) continue;
            tab.at(i, j) = s * row.coeffs[j];
            tab.at(i, n + j) = -tab.at(i, j);
        }
        if (slack_col[i] != kNone) {
            tab.at(i, slack_col[i]) = s * (row.relation == Relation::LessEqual ? 1 : -1);
        }
        tab.rhs(i) = s * row.rhs;
        if (artificial_col[i] != kNone) {
            tab.at(i, artificial_col[i]) = 1;
            tab.basic(i) = artificial_col[i];
        } else {
            tab.basic(i) = slack_col[i];
        }
    }

    // Phase 1: maximize minus the sum of artificials.
    std::vector<bool> banned(cols, false);
    if (first_artificial < cols) {
        std::vector<Rational> phase1(cols);
        for (std::size_t c = first_artificial; c < cols; ++c) phase1[c] = -1;
        tab.maximize(phase1, banned);
        if (tab.objective_value(phase1) < 0) return LpOutcome{LpStatus::Infeasible, std::nullopt, std::nullopt};

        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t r = 0; r < tab.rows();) {
            if (tab.basic(r) < first_artificial) {
                ++r;
                continue;
            }
            std::size_t replacement = kNone;
            for (std::size_t c = 0; c < first_artificial; ++c) {
                if (tab.at(r, c) != 0) {
                    replacement = c;
                    break;
                }
            }
            if (replacement == kNone) {
                tab.erase_row(r);
            } else {
                tab.pivot(r, replacement);
                ++r;
            }
        }
        for (std::size_t c = first_artificial; c < cols; ++c) banned[c] = true;
    }

    LpOutcome outcome;
    if (lp.objective) {
        std::vector<Rational> cost(cols);
        for (std::size_t j = 0; j < n; ++j) {
            cost[j] = (*lp.objective)[j];
            cost[n + j] = -(*lp.objective)[j];
        }
        if (!tab.maximize(cost, banned)) return LpOutcome{LpStatus::Unbounded, std::nullopt, std::nullopt};
        outcome.status = LpStatus::Optimal;
    } else {
        outcome.status = LpStatus::Feasible;
    }

    const auto values = tab.solution();
    RVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = values[j] - values[n + j];
    if (!satisfies(lp, x)) throw InternalError("simplex witness does not satisfy its program");
    if (lp.objective) outcome.value = dot(*lp.objective, x);
    outcome.witness = std::move(x);
    return outcome;
}

}  // namespace hcara
