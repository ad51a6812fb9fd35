#pragma once

// Exact two-phase simplex over Rational with Bland's anti-cycling rule.
//
//   minimize  c^T x   subject to  A x = b,  x >= 0
//
// Unit columns of A (after sign-normalizing b) seed the starting basis;
// only the remaining rows get artificial variables. Redundant equality rows
// are detected after phase 1 and dropped.

#include <cstddef>
#include <optional>
#include <vector>

#include "gcurv/error.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

struct LinearProgram {
    std::vector<std::vector<Rational>> a;  // rows x cols
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;  // empty unless Optimal
    Rational objective;
    std::size_t pivots = 0;
};

namespace detail {

class Tableau {
public:
    Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
            std::vector<std::size_t> basis)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return rows_.empty() ? 0 : rows_.front().size(); }

    // Reprices the objective for the current basis.
    void set_cost(const std::vector<Rational>& cost) {
        reduced_ = cost;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j < reduced_.size(); ++j) {
                if (!rows_[i][j].is_zero()) reduced_[j] -= cb * rows_[i][j];
            }
        }
    }

    // Returns false when unbounded.
    bool optimize() {
        while (true) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < reduced_.size(); ++j) {
                if (reduced_[j].sign() < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return true;

            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& coef = rows_[i][*entering];
                if (coef.sign() <= 0) continue;
                Rational ratio = rhs_[i] / coef;
                if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best = std::move(ratio);
                }
            }
            if (!leaving) return false;
            pivot(*leaving, *entering);
        }
    }

    void pivot(std::size_t r, std::size_t s) {
        ++pivots_;
        const Rational p = rows_[r][s];
        auto& prow = rows_[r];
        for (auto& x : prow) {
            if (!x.is_zero()) x /= p;
        }
        rhs_[r] /= p;
        auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
            const Rational f = row[s];
            if (f.is_zero()) return;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (!prow[j].is_zero()) row[j] -= f * prow[j];
            }
            rhs -= f * rhs_[r];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r) eliminate(rows_[i], rhs_[i]);
        }
        Rational unused;
        if (!reduced_.empty()) eliminate(reduced_, unused);
        basis_[r] = s;
    }

    // Drops artificial columns [first_artificial, cols). Artificials still
    // basic (at level zero) are pivoted out, or their row is removed when
    // every structural entry is zero.
    void remove_artificials(std::size_t first_artificial) {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (!rows_[i][j].is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (auto& row : rows_) row.resize(first_artificial);
        reduced_.clear();
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational z;
        for (std::size_t i = 0; i < rows_.size(); ++i) z += cost[basis_[i]] * rhs_[i];
        return z;
    }

    std::vector<Rational> solution(std::size_t cols) const {
        std::vector<Rational> x(cols);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < cols) x[basis_[i]] = rhs_[i];
        }
        return x;
    }

    std::size_t pivots() const { return pivots_; }

private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> reduced_;
    std::size_t pivots_ = 0;
};

}  // namespace detail

inline LpResult solve_lp(LinearProgram lp) {
    const std::size_t m = lp.a.size();
    const std::size_t k = lp.c.size();
    if (lp.b.size() != m) fail(ErrorKind::Input, "LP: b has wrong length");
    for (const auto& row : lp.a) {
        if (row.size() != k) fail(ErrorKind::Input, "LP: ragged constraint matrix");
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (lp.b[i].sign() < 0) {
            for (auto& x : lp.a[i]) x = -x;
            lp.b[i] = -lp.b[i];
        }
    }

    // Reuse unit columns as the starting basis where possible.
    std::vector<std::optional<std::size_t>> unit_for_row(m);
    for (std::size_t j = 0; j < k; ++j) {
        std::optional<std::size_t> one_at;
        bool unit = true;
        for (std::size_t i = 0; i < m && unit; ++i) {
            const Rational& x = lp.a[i][j];
            if (x.is_zero()) continue;
            if (x == Rational(1) && !one_at) {
                one_at = i;
            } else {
                unit = false;
            }
        }
        if (unit && one_at && !unit_for_row[*one_at]) unit_for_row[*one_at] = j;
    }

    std::size_t artificials = 0;
    for (const auto& u : unit_for_row) {
        if (!u) ++artificials;
    }

    std::vector<std::size_t> basis(m);
    std::size_t next_art = k;
    for (std::size_t i = 0; i < m; ++i) {
        lp.a[i].resize(k + artificials);
        if (unit_for_row[i]) {
            basis[i] = *unit_for_row[i];
        } else {
            lp.a[i][next_art] = 1;
            basis[i] = next_art++;
        }
    }

    detail::Tableau tab(std::move(lp.a), std::move(lp.b), std::move(basis));
    LpResult result;

    if (artificials > 0) {
        std::vector<Rational> phase1(k + artificials);
        for (std::size_t j = k; j < k + artificials; ++j) phase1[j] = 1;
        tab.set_cost(phase1);
        tab.optimize();  // bounded below by 0
        if (tab.objective(phase1).sign() > 0) {
            result.status = LpStatus::Infeasible;
            result.pivots = tab.pivots();
            return result;
        }
        tab.remove_artificials(k);
    }

    tab.set_cost(lp.c);
    const bool bounded = tab.optimize();
    result.pivots = tab.pivots();
    if (!bounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x = tab.solution(k);
    result.objective = tab.objective(lp.c);
    return result;
}

}  // namespace gcurv
