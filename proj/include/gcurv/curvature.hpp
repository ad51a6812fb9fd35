#pragma once

// Curvature vector w solving D w = n * 1, its l1 norm and the bound
// K = n / ||w||_1.
//
// The exact path classifies the system (unique / underdetermined /
// inconsistent) by Gaussian elimination over Rational. The float path is a
// partially pivoted LU in doubles for large n and never classifies rank.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcurv/error.hpp"
#include "gcurv/metric.hpp"
#include "gcurv/rational.hpp"
#include "gcurv/simplex.hpp"

namespace gcurv {

enum class SolutionStatus { Unique, Underdetermined, Inconsistent };

inline const char* to_string(SolutionStatus s) {
    switch (s) {
        case SolutionStatus::Unique: return "unique";
        case SolutionStatus::Underdetermined: return "underdetermined";
        case SolutionStatus::Inconsistent: return "inconsistent";
    }
    return "?";
}

// Which solution to report when D is singular but the system is consistent.
enum class Representative {
    // Basic optimal solution of min ||w||_1 s.t. D w = n 1. Non-negative
    // whenever any non-negative solution exists, because 1^T w is the same
    // for every solution.
    MinimumL1,
    // Particular solution from elimination with all free variables set to 0.
    FreeVariablesZero,
};

inline const char* to_string(Representative r) {
    return r == Representative::MinimumL1 ? "minimum-l1" : "free-variables-zero";
}

struct CurvatureSolution {
    SolutionStatus status = SolutionStatus::Inconsistent;
    std::size_t nullity = 0;  // positive iff Underdetermined
    Representative representative = Representative::MinimumL1;
    std::vector<Rational> w;  // empty iff Inconsistent
    std::optional<Rational> l1_norm;
    std::optional<Rational> bound_K;
    std::optional<Rational> min_entry;
    bool nonneg = false;

    bool has_solution() const { return status != SolutionStatus::Inconsistent; }

    std::vector<std::string> warnings() const {
        std::vector<std::string> out;
        if (status == SolutionStatus::Underdetermined) {
            std::string msg = "K is not canonical: D is singular (nullity " +
                              std::to_string(nullity) + "), w is the " +
                              to_string(representative) +
                              " representative of infinitely many solutions";
            if (representative == Representative::MinimumL1 && nonneg) {
                msg += "; every non-negative solution gives the same K";
            }
            out.push_back(std::move(msg));
        }
        if (status == SolutionStatus::Inconsistent) {
            out.push_back("D w = n 1 has no solution; K is undefined");
        }
        return out;
    }
};

namespace detail {

struct Elimination {
    std::size_t rank = 0;
    bool consistent = true;
    std::vector<std::size_t> pivot_rows;  // original row indices, independent
    std::vector<Rational> particular;     // free variables zero
};

// Row-echelon elimination of [D | n 1] with largest-magnitude pivots,
// ties to the lowest row position.
inline Elimination eliminate_exact(const DistanceMatrix& d) {
    const std::size_t n = d.order();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n, Rational(static_cast<std::uint64_t>(n)));
    std::vector<std::size_t> origin(n);
    for (std::size_t i = 0; i < n; ++i) {
        origin[i] = i;
        for (std::size_t j = 0; j < n; ++j) m[i][j] = d(i, j);
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t best = r;
        Rational best_abs = m[r][c].abs();
        for (std::size_t i = r + 1; i < n; ++i) {
            Rational a = m[i][c].abs();
            if (a > best_abs) {
                best = i;
                best_abs = std::move(a);
            }
        }
        if (best_abs.is_zero()) continue;
        std::swap(m[r], m[best]);
        std::swap(rhs[r], rhs[best]);
        std::swap(origin[r], origin[best]);
        for (std::size_t i = r + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] / m[r][c];
            m[i][c] = 0;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
            }
            rhs[i] -= f * rhs[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    Elimination out;
    out.rank = r;
    for (std::size_t i = r; i < n; ++i) {
        if (!rhs[i].is_zero()) out.consistent = false;
    }
    out.pivot_rows.assign(origin.begin(), origin.begin() + static_cast<std::ptrdiff_t>(r));
    if (!out.consistent) return out;

    out.particular.assign(n, Rational());
    for (std::size_t t = r; t-- > 0;) {
        const std::size_t c = pivot_cols[t];
        Rational acc = rhs[t];
        for (std::size_t j = c + 1; j < n; ++j) {
            if (!m[t][j].is_zero() && !out.particular[j].is_zero()) acc -= m[t][j] * out.particular[j];
        }
        out.particular[c] = acc / m[t][c];
    }
    return out;
}

inline std::vector<Rational> minimum_l1_solution(const DistanceMatrix& d,
                                                 const std::vector<std::size_t>& rows) {
    const std::size_t n = d.order();
    LinearProgram lp;
    lp.c.assign(2 * n, Rational(1));
    lp.b.assign(rows.size(), Rational(static_cast<std::uint64_t>(n)));
    for (std::size_t i : rows) {
        std::vector<Rational> row(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = d(i, j);
            row[n + j] = -row[j];
        }
        lp.a.push_back(std::move(row));
    }
    const auto result = solve_lp(std::move(lp));
    if (result.status != LpStatus::Optimal) {
        fail(ErrorKind::Verification, "minimum-l1 LP failed on a consistent system");
    }
    std::vector<Rational> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = result.x[j] - result.x[n + j];
    return w;
}

}  // namespace detail

// D w exactly.
inline std::vector<Rational> multiply(const DistanceMatrix& d, const std::vector<Rational>& x) {
    const std::size_t n = d.order();
    if (x.size() != n) fail(ErrorKind::Input, "dimension mismatch in D x");
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = d.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] != 0 && !x[j].is_zero()) out[i] += Rational(row[j]) * x[j];
        }
    }
    return out;
}

inline bool satisfies_system(const DistanceMatrix& d, const std::vector<Rational>& w) {
    const Rational target(static_cast<std::uint64_t>(d.order()));
    for (const auto& y : multiply(d, w)) {
        if (y != target) return false;
    }
    return true;
}

inline CurvatureSolution solve_curvature(const DistanceMatrix& d,
                                         Representative rep = Representative::MinimumL1) {
    const std::size_t n = d.order();
    if (n == 0) fail(ErrorKind::Input, "empty distance matrix");

    CurvatureSolution sol;
    sol.representative = rep;
    auto elim = detail::eliminate_exact(d);
    if (!elim.consistent) {
        sol.status = SolutionStatus::Inconsistent;
        sol.nullity = n - elim.rank;
        return sol;
    }
    sol.nullity = n - elim.rank;
    if (sol.nullity == 0) {
        sol.status = SolutionStatus::Unique;
        sol.w = std::move(elim.particular);
    } else {
        sol.status = SolutionStatus::Underdetermined;
        sol.w = rep == Representative::MinimumL1 ? detail::minimum_l1_solution(d, elim.pivot_rows)
                                                 : std::move(elim.particular);
    }
    if (!satisfies_system(d, sol.w)) {
        fail(ErrorKind::Verification, "internal error: solver output does not satisfy D w = n 1");
    }

    Rational l1;
    Rational lo = sol.w.front();
    for (const auto& x : sol.w) {
        l1 += x.abs();
        if (x < lo) lo = x;
    }
    sol.l1_norm = l1;
    sol.min_entry = lo;
    sol.nonneg = lo.sign() >= 0;
    if (!l1.is_zero()) sol.bound_K = Rational(static_cast<std::uint64_t>(n)) / l1;
    return sol;
}

inline Rational curvature_bound(const CurvatureSolution& sol, std::size_t n) {
    if (!sol.has_solution()) fail(ErrorKind::Inconsistent, "D w = n 1 has no solution");
    if (!sol.l1_norm || sol.l1_norm->is_zero()) fail(ErrorKind::Inconsistent, "||w||_1 is zero");
    return Rational(static_cast<std::uint64_t>(n)) / *sol.l1_norm;
}

// When every row sum equals S, w = (n / S) 1 solves the system and K = S / n.
inline std::optional<Rational> transitive_oracle(const DistanceMatrix& d) {
    const auto sums = row_sums(d);
    if (sums.empty()) return std::nullopt;
    for (auto s : sums) {
        if (s != sums.front()) return std::nullopt;
    }
    return Rational(mpz_class(static_cast<unsigned long>(sums.front())),
                    mpz_class(static_cast<unsigned long>(d.order())));
}

struct FloatSolution {
    bool numerically_singular = false;
    std::size_t singular_column = 0;  // meaningful iff numerically_singular
    std::vector<double> w;            // empty iff numerically_singular
    double residual_inf = 0.0;        // ||D w - n 1||_inf, recomputed from D
    double condition_hint = 0.0;      // 1 / pivot growth
};

inline FloatSolution solve_curvature_float(const DistanceMatrix& d) {
    const std::size_t n = d.order();
    if (n == 0) fail(ErrorKind::Input, "empty distance matrix");
    std::vector<double> a(d.entries().begin(), d.entries().end());
    std::vector<double> rhs(n, static_cast<double>(n));
    double max_input = 0.0;
    for (double x : a) max_input = std::max(max_input, std::abs(x));

    FloatSolution out;
    const double tiny = 1e-12 * static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best < tiny) {
            out.numerically_singular = true;
            out.singular_column = k;
            return out;
        }
        if (p != k) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(k * n),
                             a.begin() + static_cast<std::ptrdiff_t>((k + 1) * n),
                             a.begin() + static_cast<std::ptrdiff_t>(p * n));
            std::swap(rhs[k], rhs[p]);
        }
        const double* pivot_row = a.data() + k * n;
        const double inv = 1.0 / pivot_row[k];
        for (std::size_t i = k + 1; i < n; ++i) {
            double* row = a.data() + i * n;
            const double l = row[k] * inv;
            if (l == 0.0) continue;
            row[k] = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) row[j] -= l * pivot_row[j];
            rhs[i] -= l * rhs[k];
        }
    }

    double max_u = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) max_u = std::max(max_u, std::abs(a[i * n + j]));
    }
    out.condition_hint = max_u > 0.0 ? max_input / max_u : 0.0;

    out.w.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        const double* row = a.data() + i * n;
        for (std::size_t j = i + 1; j < n; ++j) acc -= row[j] * out.w[j];
        out.w[i] = acc / row[i];
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto row = d.row(i);
        double acc = -static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) acc += static_cast<double>(row[j]) * out.w[j];
        out.residual_inf = std::max(out.residual_inf, std::abs(acc));
    }
    return out;
}

}  // namespace gcurv
