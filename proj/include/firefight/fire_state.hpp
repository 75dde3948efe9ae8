#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "firefight/grid.hpp"
#include "firefight/rational.hpp"

namespace firefight {

/// Protection ledger. The account opens with `opening` (c when unset) before
/// step 1 and gains c after every spread; `initial` is extra whole-cell credit
/// (pre-placed protections). Cumulative capacity by step t is
/// initial + floor(opening + c * (t - 1)), which is initial + floor(c * t) by default.
struct BudgetAccount {
    Rational c;
    std::int64_t initial = 0;
    std::int64_t spent = 0;
    std::optional<Rational> opening;

    std::int64_t capacity(std::int64_t t) const {
        if (!opening) {
            return initial + c.floor_times(t);
        }
        return initial + (*opening + c * Rational(t - 1)).floor();
    }
};

/// Cells that may still be protected at step t (t >= 1 for regular steps;
/// t = 0 only exposes the initial credit).
inline std::int64_t budget_available(const BudgetAccount& account, std::int64_t t) {
    return account.capacity(t) - account.spent;
}

enum class ProtectStatus { Ok, CellBurning, CellAlreadyProtected, OffLimits, NoBudget };

constexpr std::string_view to_string(ProtectStatus s) {
    switch (s) {
        case ProtectStatus::Ok: return "ok";
        case ProtectStatus::CellBurning: return "cell burning";
        case ProtectStatus::CellAlreadyProtected: return "cell already protected";
        case ProtectStatus::OffLimits: return "cell off limits";
        case ProtectStatus::NoBudget: return "no budget";
    }
    return "?";
}

/// Dense storage over a growing window of the unbounded grid. Cells outside the
/// window read as zero.
class CellGrid {
public:
    CellGrid() = default;
    explicit CellGrid(Box hint) { reset(hint); }

    std::int32_t get(Cell c) const {
        if (!box_.contains(c)) {
            return 0;
        }
        return data_[index(c)];
    }

    void set(Cell c, std::int32_t v) {
        if (!box_.contains(c)) {
            grow(c);
        }
        data_[index(c)] = v;
    }

    const Box& box() const { return box_; }

private:
    void reset(Box b) {
        box_ = b;
        width_ = b.hi.x - b.lo.x + 1;
        data_.assign(static_cast<std::size_t>(b.area()), 0);
    }

    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.y - box_.lo.y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(c.x - box_.lo.x);
    }

    void grow(Cell c) {
        if (data_.empty()) {
            reset(Box{{c.x - 8, c.y - 8}, {c.x + 8, c.y + 8}});
            return;
        }
        int margin = std::max(8, std::max(width_, box_.hi.y - box_.lo.y + 1) / 2);
        Box next{{std::min(box_.lo.x, c.x - margin), std::min(box_.lo.y, c.y - margin)},
                 {std::max(box_.hi.x, c.x + margin), std::max(box_.hi.y, c.y + margin)}};
        CellGrid bigger(next);
        for (int y = box_.lo.y; y <= box_.hi.y; ++y) {
            auto src = data_.begin() + static_cast<std::ptrdiff_t>(index({box_.lo.x, y}));
            std::copy(src, src + width_, bigger.data_.begin() +
                                             static_cast<std::ptrdiff_t>(bigger.index({box_.lo.x, y})));
        }
        *this = std::move(bigger);
    }

    Box box_{{0, 0}, {-1, -1}};
    int width_ = 0;
    std::vector<std::int32_t> data_;
};

/// Burning and protected cells of one fire, its clock and its budget ledger.
///
/// time() counts completed spreads; the protect phase of step s happens while
/// time() == s - 1. Cells at or below floor_row cannot be protected (the
/// highway itself).
class FireState {
public:
    static constexpr int kNoFloor = std::numeric_limits<int>::min();

    FireState() = default;
    explicit FireState(BudgetAccount budget, int floor_row = kNoFloor, Box window_hint = {{-16, -16}, {16, 16}})
        : grid_(window_hint), budget_(budget), floor_row_(floor_row) {}

    int time() const { return time_; }
    int step() const { return time_ + 1; }
    const BudgetAccount& budget() const { return budget_; }
    int floor_row() const { return floor_row_; }

    /// Budget usable in the current protect phase.
    std::int64_t available() const { return budget_available(budget_, step()); }

    bool is_burning(Cell c) const { return grid_.get(c) > 0; }
    bool is_protected(Cell c) const { return grid_.get(c) < 0; }
    bool is_free(Cell c) const { return grid_.get(c) == 0; }
    bool protectable(Cell c) const { return c.y > floor_row_ && grid_.get(c) == 0; }

    /// Step whose spread ignited the cell (0 for ignition sources).
    std::optional<int> ignition_time(Cell c) const {
        auto v = grid_.get(c);
        if (v <= 0) {
            return std::nullopt;
        }
        return v - 1;
    }

    /// Step in which the cell was protected (0 for pre-protected cells).
    std::optional<int> protection_time(Cell c) const {
        auto v = grid_.get(c);
        if (v >= 0) {
            return std::nullopt;
        }
        return -v - 1;
    }

    /// Sets a cell on fire at the current time. Used for ignition and for
    /// hand-built test states; protected cells are left alone.
    void ignite(Cell c) {
        if (grid_.get(c) != 0) {
            return;
        }
        grid_.set(c, time_ + 1);
        burning_.push_back(c);
        frontier_.push_back(c);
        min_burning_y_ = std::min(min_burning_y_, c.y);
    }

    ProtectStatus protect(Cell c) {
        auto v = grid_.get(c);
        if (v > 0) {
            return ProtectStatus::CellBurning;
        }
        if (v < 0) {
            return ProtectStatus::CellAlreadyProtected;
        }
        if (c.y <= floor_row_) {
            return ProtectStatus::OffLimits;
        }
        if (available() < 1) {
            return ProtectStatus::NoBudget;
        }
        grid_.set(c, -(step() + 1));
        protected_.push_back(c);
        ++budget_.spent;
        return ProtectStatus::Ok;
    }

    /// Protection placed before the first step (labelled 0); paid from the
    /// initial credit.
    ProtectStatus preprotect(Cell c) {
        if (time_ != 0 || budget_.spent >= budget_.initial) {
            return ProtectStatus::NoBudget;
        }
        auto status = protect(c);
        if (status == ProtectStatus::Ok) {
            grid_.set(c, -1);
        }
        return status;
    }

    /// Every free 4-neighbour of a burning cell catches fire; the clock advances.
    /// Returns the number of newly burning cells.
    std::size_t spread() {
        next_frontier_.clear();
        const std::int32_t mark = time_ + 2;
        for (Cell b : frontier_) {
            for (Cell d : kNeighbors4) {
                Cell n = b + d;
                if (grid_.get(n) == 0) {
                    grid_.set(n, mark);
                    next_frontier_.push_back(n);
                }
            }
        }
        for (Cell n : next_frontier_) {
            burning_.push_back(n);
            min_burning_y_ = std::min(min_burning_y_, n.y);
        }
        frontier_.swap(next_frontier_);
        ++time_;
        return frontier_.size();
    }

    /// True iff spread would change nothing.
    bool is_enclosed() const {
        for (Cell b : frontier_) {
            for (Cell d : kNeighbors4) {
                if (grid_.get(b + d) == 0) {
                    return false;
                }
            }
        }
        return true;
    }

    bool highway_reached(int highway_row) const {
        return !burning_.empty() && min_burning_y_ <= highway_row;
    }

    /// Entry i counts burning cells at vertical offset i above the highway row.
    std::vector<int> distance_profile(int highway_row) const {
        std::vector<int> profile;
        for (Cell b : burning_) {
            int i = b.y - highway_row;
            if (i < 0) {
                continue;
            }
            if (static_cast<std::size_t>(i) >= profile.size()) {
                profile.resize(static_cast<std::size_t>(i) + 1, 0);
            }
            ++profile[static_cast<std::size_t>(i)];
        }
        return profile;
    }

    std::span<const Cell> burning() const { return burning_; }
    std::span<const Cell> protected_cells() const { return protected_; }
    /// Cells that ignited in the most recent spread (or since, via ignite()).
    std::span<const Cell> frontier() const { return frontier_; }

    std::size_t burning_count() const { return burning_.size(); }
    std::size_t protected_count() const { return protected_.size(); }

private:
    CellGrid grid_;
    BudgetAccount budget_;
    int floor_row_ = kNoFloor;
    int time_ = 0;
    int min_burning_y_ = std::numeric_limits<int>::max();
    std::vector<Cell> burning_;
    std::vector<Cell> protected_;
    std::vector<Cell> frontier_;
    std::vector<Cell> next_frontier_;
};

}  // namespace firefight
