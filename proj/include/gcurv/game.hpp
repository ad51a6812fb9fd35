#pragma once

// Zero-sum matrix games with non-negative payoffs, solved exactly.
//
// For payoff M (rows u = minimizer's pure responses, columns = maximizer's
// pure strategies):
//   maximin P : maximizes min_u (M P)_u
//   minimax Q : minimizes max_v (M^T Q)_v
// Payoffs are shifted by +1 so the game value is positive, each strategy is
// found from its own LP, and both certificates are checked exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcurv/curvature.hpp"
#include "gcurv/error.hpp"
#include "gcurv/metric.hpp"
#include "gcurv/minimax.hpp"
#include "gcurv/rational.hpp"
#include "gcurv/simplex.hpp"

namespace gcurv {

class PayoffMatrix {
public:
    PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0) fail(ErrorKind::Input, "empty payoff matrix");
        if (entries_.size() != rows_ * cols_) fail(ErrorKind::Input, "payoff matrix has wrong size");
    }

    explicit PayoffMatrix(const DistanceMatrix& d) : rows_(d.order()), cols_(d.order()) {
        if (rows_ == 0) fail(ErrorKind::Input, "game on an empty distance matrix");
        entries_.reserve(rows_ * cols_);
        for (Distance x : d.entries()) entries_.emplace_back(x);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    PayoffMatrix transposed() const {
        std::vector<Rational> t(entries_.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = (*this)(i, j);
        }
        return {cols_, rows_, std::move(t)};
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct GameSolution {
    Rational value;
    Measure maximin_strategy;  // over columns
    Measure minimax_strategy;  // over rows
    Rational maximin_residue;  // min_u (M P)_u - value, exactly zero
    Rational minimax_residue;  // max_v (M^T Q)_v - value, exactly zero
    std::size_t pivots = 0;
};

namespace detail {

inline Measure normalize(std::vector<Rational> x) {
    Rational total;
    for (const auto& v : x) total += v;
    for (auto& v : x) v /= total;
    return Measure(std::move(x));
}

}  // namespace detail

inline GameSolution solve_matrix_game(const PayoffMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (m(i, j).sign() < 0) fail(ErrorKind::Input, "payoff matrix has a negative entry");
        }
    }
    const Rational shift(1);

    // Maximizer: min 1^T y  s.t.  (M + 1) y >= 1, y >= 0  (surplus columns).
    LinearProgram maxi;
    maxi.c.assign(cols + rows, Rational());
    for (std::size_t j = 0; j < cols; ++j) maxi.c[j] = 1;
    maxi.b.assign(rows, Rational(1));
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rational> row(cols + rows);
        for (std::size_t j = 0; j < cols; ++j) row[j] = m(i, j) + shift;
        row[cols + i] = -1;
        maxi.a.push_back(std::move(row));
    }

    // Minimizer: max 1^T x  s.t.  (M + 1)^T x <= 1, x >= 0  (slack columns).
    LinearProgram mini;
    mini.c.assign(rows + cols, Rational());
    for (std::size_t i = 0; i < rows; ++i) mini.c[i] = -1;
    mini.b.assign(cols, Rational(1));
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> row(rows + cols);
        for (std::size_t i = 0; i < rows; ++i) row[i] = m(i, j) + shift;
        row[rows + j] = 1;
        mini.a.push_back(std::move(row));
    }

    const auto ymax = solve_lp(std::move(maxi));
    const auto xmin = solve_lp(std::move(mini));
    if (ymax.status != LpStatus::Optimal || xmin.status != LpStatus::Optimal) {
        fail(ErrorKind::Verification, "matrix game LP did not reach an optimum");
    }
    // Both objectives are 1 / (value + shift).
    if (ymax.objective != -xmin.objective) {
        fail(ErrorKind::Verification, "matrix game duality gap: " + ymax.objective.to_string() +
                                          " vs " + (-xmin.objective).to_string());
    }

    GameSolution g{
        Rational(1) / ymax.objective - shift,
        detail::normalize({ymax.x.begin(), ymax.x.begin() + static_cast<std::ptrdiff_t>(cols)}),
        detail::normalize({xmin.x.begin(), xmin.x.begin() + static_cast<std::ptrdiff_t>(rows)}),
        Rational(),
        Rational(),
        ymax.pivots + xmin.pivots,
    };

    std::optional<Rational> lo;
    for (std::size_t i = 0; i < rows; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * g.maximin_strategy[j];
        if (!lo || acc < *lo) lo = acc;
    }
    std::optional<Rational> hi;
    for (std::size_t j = 0; j < cols; ++j) {
        Rational acc;
        for (std::size_t i = 0; i < rows; ++i) acc += m(i, j) * g.minimax_strategy[i];
        if (!hi || acc > *hi) hi = acc;
    }
    g.maximin_residue = *lo - g.value;
    g.minimax_residue = *hi - g.value;
    if (!g.maximin_residue.is_zero() || !g.minimax_residue.is_zero()) {
        fail(ErrorKind::Verification, "matrix game certificate failed: residues " +
                                          g.maximin_residue.to_string() + ", " +
                                          g.minimax_residue.to_string());
    }
    return g;
}

inline GameSolution game_value(const DistanceMatrix& d) { return solve_matrix_game(PayoffMatrix(d)); }

struct CurvatureComparison {
    Rational value;
    Rational K;
    bool equal = false;
};

// value = K whenever w >= 0; K <= value always (K <= B(Q) for every Q).
inline CurvatureComparison game_vs_curvature(const GameSolution& game, const CurvatureSolution& sol,
                                             std::size_t n) {
    CurvatureComparison cmp{game.value, curvature_bound(sol, n), false};
    cmp.equal = cmp.value == cmp.K;
    if (sol.nonneg && !cmp.equal) {
        fail(ErrorKind::Verification, "w is non-negative but game value " + cmp.value.to_string() +
                                          " != K " + cmp.K.to_string());
    }
    if (cmp.value < cmp.K) {
        fail(ErrorKind::Verification, "game value " + cmp.value.to_string() + " below K " +
                                          cmp.K.to_string());
    }
    return cmp;
}

inline CurvatureComparison game_vs_curvature(const DistanceMatrix& d) {
    return game_vs_curvature(game_value(d), solve_curvature(d), d.order());
}

}  // namespace gcurv
