#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "firefight/error.hpp"
#include "firefight/fire_state.hpp"

namespace firefight {

enum class Scenario { Enclosure, Highway };

constexpr std::string_view to_string(Scenario s) {
    return s == Scenario::Enclosure ? "enclosure" : "highway";
}

struct SimConfig {
    Rational c{2};
    std::int64_t initial_budget = 0;
    /// Balance usable in step 1 in place of c (the account still gains c per step).
    std::optional<Rational> opening_budget;
    int t_max = 10;
    Scenario scenario = Scenario::Enclosure;
    Cell fire_origin{0, 0};
    int highway_row = 0;
    /// Highway cells may be protected; when false only cells strictly on the
    /// fire's side of the highway may be.
    bool highway_protectable = true;
    std::uint64_t rng_seed = 0;
    /// Cells protected before step 1, paid from the initial credit.
    std::vector<Cell> initial_protected;
    /// Record a snapshot every frame_every steps (0 = none).
    int frame_every = 0;

    void validate() const {
        if (t_max < 1) {
            throw ConfigInvalid("t_max must be at least 1");
        }
        if (c < Rational(0)) {
            throw ConfigInvalid("budget income c must be non-negative");
        }
        if (opening_budget && *opening_budget < Rational(0)) {
            throw ConfigInvalid("opening budget must be non-negative");
        }
        if (initial_budget < 0) {
            throw ConfigInvalid("initial budget must be non-negative");
        }
        if (static_cast<std::int64_t>(initial_protected.size()) > initial_budget) {
            throw ConfigInvalid("initial protections exceed the initial budget");
        }
        if (scenario == Scenario::Highway && fire_origin.y <= highway_row) {
            throw ConfigInvalid("fire origin must lie strictly above the highway row");
        }
        if (frame_every < 0) {
            throw ConfigInvalid("frame interval must be non-negative");
        }
    }

    /// Every fire-touched cell lies within this box.
    Box reach() const {
        int r = t_max + 2;
        return {{fire_origin.x - r, fire_origin.y - r}, {fire_origin.x + r, fire_origin.y + r}};
    }
};

enum class EndReason { Enclosed, HighwayReached, TimeLimit, GenomeExhausted };

constexpr std::string_view to_string(EndReason r) {
    switch (r) {
        case EndReason::Enclosed: return "enclosed";
        case EndReason::HighwayReached: return "highway_reached";
        case EndReason::TimeLimit: return "time_limit";
        case EndReason::GenomeExhausted: return "genome_exhausted";
    }
    return "?";
}

/// Picture of the grid after the spread of a step (or after the protect phase
/// for the terminal enclosed step). Cells carry their ignition / protection step.
struct Snapshot {
    int step = 0;
    std::vector<std::pair<Cell, int>> burning;
    std::vector<std::pair<Cell, int>> protected_cells;

    static Snapshot of(const FireState& state, int step) {
        Snapshot s;
        s.step = step;
        s.burning.reserve(state.burning_count());
        for (Cell c : state.burning()) {
            s.burning.emplace_back(c, *state.ignition_time(c));
        }
        s.protected_cells.reserve(state.protected_count());
        for (Cell c : state.protected_cells()) {
            s.protected_cells.emplace_back(c, *state.protection_time(c));
        }
        return s;
    }
};

struct Outcome {
    EndReason reason = EndReason::TimeLimit;
    int end_time = 0;
    std::int64_t burning_count = 0;
    std::int64_t protected_count = 0;
    /// Highway scenario only: burning cells per vertical offset from the highway.
    std::vector<int> distance_profile;
    /// Cells protected in each step 1..end_time.
    std::vector<int> protections_per_step;
    /// Last step that protected at least one cell (0 if none).
    int last_protect_step = 0;
    std::vector<Snapshot> frames;
    FireState final_state;
};

/// Supplies protection targets on demand. next() returning nullopt ends the
/// current protect phase; exhausted() reports that nothing will ever come again.
template <class S>
concept StepSource = requires(S source, const FireState& state) {
    { source.next(state) } -> std::same_as<std::optional<Cell>>;
    { source.exhausted() } -> std::convertible_to<bool>;
};

/// Protect-then-spread loop. Illegal targets from the source are skipped
/// without charge.
template <StepSource Source>
Outcome simulate(Source& source, const SimConfig& config) {
    config.validate();
    const int floor_row = config.scenario != Scenario::Highway ? FireState::kNoFloor
                          : config.highway_protectable ? config.highway_row - 1
                                                       : config.highway_row;
    FireState state(BudgetAccount{config.c, config.initial_budget, 0, config.opening_budget}, floor_row,
                    config.reach());
    state.ignite(config.fire_origin);
    for (Cell c : config.initial_protected) {
        if (state.preprotect(c) != ProtectStatus::Ok) {
            throw ConfigInvalid("initial protection cannot be placed");
        }
    }

    Outcome out;
    out.protections_per_step.reserve(static_cast<std::size_t>(config.t_max));
    if (config.frame_every > 0) {
        out.frames.push_back(Snapshot::of(state, 0));
    }

    auto finish = [&](EndReason reason, int t) {
        out.reason = reason;
        out.end_time = t;
        out.burning_count = static_cast<std::int64_t>(state.burning_count());
        out.protected_count = static_cast<std::int64_t>(state.protected_count());
        if (config.scenario == Scenario::Highway) {
            out.distance_profile = state.distance_profile(config.highway_row);
        }
        out.final_state = std::move(state);
        return std::move(out);
    };

    for (int t = 1; t <= config.t_max; ++t) {
        int placed = 0;
        while (state.available() >= 1) {
            auto cell = source.next(state);
            if (!cell) {
                break;
            }
            if (state.protect(*cell) == ProtectStatus::Ok) {
                ++placed;
            }
        }
        out.protections_per_step.push_back(placed);
        if (placed > 0) {
            out.last_protect_step = t;
        }

        if (config.scenario == Scenario::Enclosure && state.is_enclosed()) {
            if (config.frame_every > 0) {
                out.frames.push_back(Snapshot::of(state, t));
            }
            return finish(EndReason::Enclosed, t);
        }

        state.spread();
        bool last = t == config.t_max;
        bool reached = config.scenario == Scenario::Highway && state.highway_reached(config.highway_row);
        if (config.frame_every > 0 && (t % config.frame_every == 0 || last || reached)) {
            out.frames.push_back(Snapshot::of(state, t));
        }
        if (reached) {
            return finish(EndReason::HighwayReached, t);
        }
    }
    return finish(source.exhausted() ? EndReason::GenomeExhausted : EndReason::TimeLimit, config.t_max);
}

/// Protections in the order they were made, each with the step it was made in
/// (0 for cells placed before the first step).
struct ProtectionSchedule {
    std::vector<std::pair<Cell, int>> entries;

    friend bool operator==(const ProtectionSchedule&, const ProtectionSchedule&) = default;
};

inline ProtectionSchedule schedule_of(const FireState& state) {
    ProtectionSchedule s;
    s.entries.reserve(state.protected_count());
    for (Cell c : state.protected_cells()) {
        s.entries.emplace_back(c, *state.protection_time(c));
    }
    return s;
}

/// Yields a fixed list of cells in order, skipping ones that are no longer
/// legal. A cell with a step attached is held back until that step.
class ScriptedSource {
public:
    ScriptedSource() = default;
    explicit ScriptedSource(std::vector<Cell> cells) : cells_(std::move(cells)), steps_(cells_.size(), 0) {}
    explicit ScriptedSource(const ProtectionSchedule& schedule) {
        for (const auto& [c, t] : schedule.entries) {
            if (t > 0) {
                cells_.push_back(c);
                steps_.push_back(t);
            }
        }
    }

    std::optional<Cell> next(const FireState& state) {
        while (index_ < cells_.size()) {
            if (steps_[index_] > state.step()) {
                return std::nullopt;
            }
            Cell c = cells_[index_++];
            if (state.protectable(c)) {
                return c;
            }
        }
        return std::nullopt;
    }
    bool exhausted() const { return index_ >= cells_.size(); }
    const std::vector<Cell>& cells() const { return cells_; }

private:
    std::vector<Cell> cells_;
    std::vector<int> steps_;
    std::size_t index_ = 0;
};

/// Never protects anything.
struct IdleSource {
    std::optional<Cell> next(const FireState&) { return std::nullopt; }
    bool exhausted() const { return true; }
};

}  // namespace firefight
