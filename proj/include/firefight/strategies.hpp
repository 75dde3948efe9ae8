#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "firefight/error.hpp"
#include "firefight/fire_state.hpp"
#include "firefight/rational.hpp"
#include "firefight/simulate.hpp"

namespace firefight {

enum class BaselineKind { OptimalC2, SymmetricAlternating, AsymmetricDiagonal };

constexpr std::string_view to_string(BaselineKind k) {
    switch (k) {
        case BaselineKind::OptimalC2: return "optimal-c2";
        case BaselineKind::SymmetricAlternating: return "symmetric";
        case BaselineKind::AsymmetricDiagonal: return "diagonal";
    }
    return "?";
}

inline std::optional<BaselineKind> parse_baseline(std::string_view s) {
    for (auto k : {BaselineKind::OptimalC2, BaselineKind::SymmetricAlternating, BaselineKind::AsymmetricDiagonal}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    return std::nullopt;
}

/// Smallest n with c*n >= n + 1.
inline std::int64_t min_diagonal_start(const Rational& c) {
    if (c <= Rational(1)) {
        throw BudgetTooSmall("diagonal start needs c > 1, got " + c.to_string());
    }
    return (Rational(1) / (c - Rational(1))).ceil();
}

inline bool threatened(const FireState& state, Cell c) {
    for (Cell d : kNeighbors4) {
        if (state.is_burning(c + d)) {
            return true;
        }
    }
    return false;
}

/// Enclosure in 8 steps with 18 cells lost at c = 2, fire at the origin.
inline std::vector<Cell> optimal_c2_cells() {
    return {{-1, 0}, {0, -1}, {-1, 1}, {0, 2}, {1, -2}, {2, -1}, {3, -1}, {4, 0},
            {0, 3},  {1, 4},  {2, 4},  {5, 1}, {5, 2},  {3, 4},  {5, 3},  {4, 4}};
}

inline ScriptedSource optimal_c2_enclosure() { return ScriptedSource(optimal_c2_cells()); }

/// c = 2.7 walkthrough: 2, 3, 3 and 2 protections, enclosed in step 4 with
/// five cells burning after the second spread.
inline std::vector<Cell> small_enclosure_cells() {
    return {{-1, 0}, {0, -1}, {-1, 1}, {0, 2}, {1, -1}, {1, 2}, {2, -1}, {3, 0}, {2, 2}, {3, 1}};
}

struct ScriptedRun {
    SimConfig config;
    std::vector<Cell> cells;
};

inline ScriptedRun small_enclosure_example() {
    ScriptedRun run;
    run.config.c = Rational(27, 10);
    run.config.t_max = 4;
    run.cells = small_enclosure_cells();
    return run;
}

/// Short highway game at c = 1.2 with one pre-placed protection: the fire
/// starts 3 rows above the highway and touches it in step 7, leaving
/// 1, 9 and 12 burning cells on the three rows nearest the highway.
inline ScriptedRun short_highway_example() {
    ScriptedRun run;
    run.config.c = Rational(6, 5);
    run.config.initial_budget = 1;
    run.config.initial_protected = {{-4, 1}};
    run.config.t_max = 7;
    run.config.scenario = Scenario::Highway;
    run.config.fire_origin = {0, 3};
    run.config.highway_row = 0;
    run.cells = {{0, 0}, {-1, 0}, {1, 0}, {-2, 1}, {2, 0}, {3, 0}, {-3, 0}, {6, 2}};
    return run;
}

/// Barrier on one row between fire and highway, grown outward from the
/// fire's column, right side first, then alternating.
class SymmetricAlternating {
public:
    SymmetricAlternating(Cell fire_origin, int barrier_row) : column_(fire_origin.x), row_(barrier_row) {}

    std::optional<Cell> next(const FireState& state) {
        if (row_ <= state.floor_row()) {
            return std::nullopt;
        }
        while (true) {
            Cell c{column_ + offset_, row_};
            offset_ = offset_ <= 0 ? 1 - offset_ : -offset_;
            if (state.protectable(c)) {
                return c;
            }
        }
    }
    bool exhausted() const { return false; }

private:
    int column_;
    int row_;
    int offset_ = 0;
};

/// Three-phase barrier for the highway below the fire. A diagonal of n + 1
/// cells sits on the face of the fire's diamond between the highway side and
/// the left. Its far end keeps growing away from the highway only when the
/// fire is about to pass; its near end grows sideways toward the right,
/// hugging the highway once it gets there.
class AsymmetricDiagonal {
public:
    AsymmetricDiagonal(const Rational& c, Cell fire_origin, int highway_row, std::int64_t n,
                       bool recursive_tail = false)
        : origin_(fire_origin), highway_row_(highway_row), n_(static_cast<int>(n)), recursive_tail_(recursive_tail) {
        if (n < min_diagonal_start(c)) {
            throw StartTooClose("diagonal start n=" + std::to_string(n) + " is below " +
                                std::to_string(min_diagonal_start(c)) + " for c=" + c.to_string());
        }
        if (fire_origin.y - highway_row <= n) {
            throw ConfigInvalid("diagonal start must lie above the highway");
        }
        tip_ = diagonal(0);
    }

    std::optional<Cell> next(const FireState& state) {
        while (k_ <= n_) {
            Cell c = diagonal(k_++);
            if (state.protectable(c)) {
                return c;
            }
        }

        Cell left = left_arm(j_);
        if (!left_lost_ && state.is_burning(left)) {
            left_lost_ = true;
        }
        auto right = right_candidate(state);
        bool bottom = tip_.y <= state.floor_row() + 1;

        if (bottom && right && threatened(state, *right)) {
            tip_ = *right;
            return right;
        }
        if (!left_lost_ && threatened(state, left)) {
            ++j_;
            return left;
        }
        if (right && (threatened(state, *right) || !bottom)) {
            tip_ = *right;
            return right;
        }
        if (!left_lost_) {
            if (bottom) {
                ++j_;
                return left;
            }
            return std::nullopt;
        }
        if (recursive_tail_ && bottom) {
            return tail(state, left.x);
        }
        if (right) {
            tip_ = *right;
            return right;
        }
        return std::nullopt;
    }
    bool exhausted() const { return false; }

    bool phase_one_done() const { return k_ > n_; }

private:
    Cell diagonal(int k) const { return {origin_.x - k, origin_.y - n_ + k}; }
    Cell left_arm(int j) const { return {origin_.x - n_ - j, origin_.y + j}; }

    std::optional<Cell> right_candidate(const FireState& state) {
        if (right_lost_) {
            return std::nullopt;
        }
        for (Cell step : {Cell{1, 0}, Cell{1, -1}, Cell{0, -1}}) {
            Cell c = tip_ + step;
            if (state.protectable(c)) {
                return c;
            }
            if (c.y > state.floor_row() && state.is_protected(c)) {
                tip_ = c;
                return right_candidate(state);
            }
        }
        right_lost_ = true;
        return std::nullopt;
    }

    // Alternating row next to the highway below the spot where the fire got
    // around the far end.
    std::optional<Cell> tail(const FireState& state, int column) {
        while (true) {
            Cell c{column + tail_offset_, state.floor_row() + 1};
            tail_offset_ = tail_offset_ <= 0 ? 1 - tail_offset_ : -tail_offset_;
            if (state.protectable(c)) {
                return c;
            }
        }
    }

    Cell origin_;
    int highway_row_;
    int n_;
    bool recursive_tail_;
    int k_ = 0;
    int j_ = 1;
    Cell tip_;
    bool left_lost_ = false;
    bool right_lost_ = false;
    int tail_offset_ = 0;
};

}  // namespace firefight
