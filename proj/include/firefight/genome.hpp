#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <variant>
#include <vector>

#include "firefight/fire_state.hpp"
#include "firefight/grid.hpp"

namespace firefight {

using Rng = std::mt19937_64;

enum class ChainEnd : std::uint8_t { Front, Back };

/// Which way repair rotates for the front end; the back rotates the other way.
enum class RepairOrientation : std::uint8_t { FrontCounterClockwise, FrontClockwise };

struct Gene {
    Direction8 dir = Direction8::N;
    ChainEnd end = ChainEnd::Front;

    friend bool operator==(Gene, Gene) = default;
    friend auto operator<=>(Gene, Gene) = default;
};

/// Barrier grown from a start cell: each gene extends the front or the back
/// end of the chain by one cell in a compass direction.
struct ConnectedGenome {
    Cell start;
    std::vector<Gene> sequence;

    friend bool operator==(const ConnectedGenome&, const ConnectedGenome&) = default;
};

/// Arbitrary set of target cells, protected nearest-to-the-fire first.
struct CoordinateGenome {
    std::vector<Cell> cells;

    friend bool operator==(const CoordinateGenome&, const CoordinateGenome&) = default;
};

using Genome = std::variant<ConnectedGenome, CoordinateGenome>;

enum class GenomeKind { Connected, Coordinate };

struct GenomeCursor {
    Cell front;
    Cell back;
    std::size_t next_index = 0;
    int failures = 0;
    bool exhausted = false;

    static GenomeCursor at(Cell start) { return {start, start, 0, 0, false}; }
};

struct MutationRates {
    double p = 0.02;
    double move_rate = 0.0;
    double add_rate = 0.0;
    double remove_rate = 0.0;
    int move_radius = 1;
};

/// Rotates around anchor starting one step past dir, counter-clockwise for
/// the front (with the default orientation) and clockwise for the back, and
/// returns the first protectable neighbour.
inline std::optional<Cell> repair_direction(const FireState& state, Cell anchor, Direction8 dir, ChainEnd end,
                                            RepairOrientation orientation = RepairOrientation::FrontCounterClockwise) {
    bool ccw = (end == ChainEnd::Front) == (orientation == RepairOrientation::FrontCounterClockwise);
    Direction8 d = dir;
    for (int i = 0; i < 8; ++i) {
        d = ccw ? counter_clockwise(d) : clockwise(d);
        Cell candidate = anchor + offset(d);
        if (state.protectable(candidate)) {
            return candidate;
        }
    }
    return std::nullopt;
}

/// Applies the next gene. A yield-less call still consumes the gene; eight of
/// them in a row, or running off the end of the sequence, exhaust the cursor.
inline std::optional<Cell> decode_connected_step(const ConnectedGenome& genome, GenomeCursor& cursor,
                                                 const FireState& state,
                                                 RepairOrientation orientation = RepairOrientation::FrontCounterClockwise) {
    if (cursor.exhausted) {
        return std::nullopt;
    }
    if (cursor.next_index >= genome.sequence.size()) {
        cursor.exhausted = true;
        return std::nullopt;
    }
    const Gene gene = genome.sequence[cursor.next_index++];
    Cell& anchor = gene.end == ChainEnd::Front ? cursor.front : cursor.back;
    Cell candidate = anchor + offset(gene.dir);
    std::optional<Cell> chosen;
    if (state.protectable(candidate)) {
        chosen = candidate;
    } else {
        chosen = repair_direction(state, anchor, gene.dir, gene.end, orientation);
    }
    if (!chosen) {
        if (++cursor.failures >= 8 || cursor.next_index >= genome.sequence.size()) {
            cursor.exhausted = true;
        }
        return std::nullopt;
    }
    cursor.failures = 0;
    anchor = *chosen;
    if (cursor.next_index >= genome.sequence.size()) {
        cursor.exhausted = true;
    }
    return chosen;
}

/// Step source for a connected genome. The start cell seeds the chain and is
/// protected first (when still protectable); genes then extend either end.
class ConnectedDecoder {
public:
    explicit ConnectedDecoder(const ConnectedGenome& genome,
                              RepairOrientation orientation = RepairOrientation::FrontCounterClockwise,
                              bool seed_start = true)
        : genome_(&genome), cursor_(GenomeCursor::at(genome.start)), orientation_(orientation),
          seed_pending_(seed_start) {}

    std::optional<Cell> next(const FireState& state) {
        if (seed_pending_) {
            seed_pending_ = false;
            if (state.protectable(genome_->start)) {
                return genome_->start;
            }
        }
        while (!cursor_.exhausted) {
            if (auto cell = decode_connected_step(*genome_, cursor_, state, orientation_)) {
                return cell;
            }
        }
        return std::nullopt;
    }
    bool exhausted() const { return !seed_pending_ && cursor_.exhausted; }
    const GenomeCursor& cursor() const { return cursor_; }

private:
    const ConnectedGenome* genome_;
    GenomeCursor cursor_;
    RepairOrientation orientation_;
    bool seed_pending_;
};

/// Protection order: L1 distance to the fire origin, then y descending, then x ascending.
inline std::vector<Cell> decode_coordinate(const CoordinateGenome& genome, Cell fire_origin) {
    std::vector<Cell> order = genome.cells;
    std::stable_sort(order.begin(), order.end(), [&](Cell a, Cell b) {
        int da = l1_distance(a, fire_origin);
        int db = l1_distance(b, fire_origin);
        if (da != db) {
            return da < db;
        }
        if (a.y != b.y) {
            return a.y > b.y;
        }
        return a.x < b.x;
    });
    return order;
}

/// Cells that are burning or already protected when their turn comes are
/// skipped at no cost.
class CoordinateDecoder {
public:
    CoordinateDecoder(const CoordinateGenome& genome, Cell fire_origin)
        : order_(decode_coordinate(genome, fire_origin)) {}

    std::optional<Cell> next(const FireState& state) {
        while (index_ < order_.size()) {
            Cell c = order_[index_++];
            if (state.protectable(c)) {
                return c;
            }
        }
        return std::nullopt;
    }
    bool exhausted() const { return index_ >= order_.size(); }

private:
    std::vector<Cell> order_;
    std::size_t index_ = 0;
};

inline Gene random_gene(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 15);
    int v = pick(rng);
    return {static_cast<Direction8>(v & 7), (v & 8) ? ChainEnd::Back : ChainEnd::Front};
}

inline ConnectedGenome random_connected(std::size_t length, Cell start, Rng& rng) {
    ConnectedGenome g{start, {}};
    g.sequence.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        g.sequence.push_back(random_gene(rng));
    }
    return g;
}

inline Cell random_cell(const Box& window, Rng& rng) {
    std::uniform_int_distribution<int> xs(window.lo.x, window.hi.x);
    std::uniform_int_distribution<int> ys(window.lo.y, window.hi.y);
    int x = xs(rng);
    return {x, ys(rng)};
}

inline CoordinateGenome random_coordinate(std::size_t count, const Box& window, Rng& rng) {
    CoordinateGenome g;
    count = std::min<std::size_t>(count, static_cast<std::size_t>(window.area()));
    std::unordered_set<Cell, CellHash> seen;
    while (g.cells.size() < count) {
        Cell c = random_cell(window, rng);
        if (seen.insert(c).second) {
            g.cells.push_back(c);
        }
    }
    return g;
}

/// Each locus is resampled with probability p.
inline ConnectedGenome mutate_connected(ConnectedGenome genome, double p, Rng& rng) {
    if (p <= 0.0) {
        return genome;
    }
    std::bernoulli_distribution hit(std::min(p, 1.0));
    for (auto& gene : genome.sequence) {
        if (hit(rng)) {
            gene = random_gene(rng);
        }
    }
    return genome;
}

/// a[0, cut) followed by b[cut, len(b)); the child keeps a's start.
inline ConnectedGenome crossover_at(const ConnectedGenome& a, const ConnectedGenome& b, std::size_t cut) {
    ConnectedGenome child{a.start, {}};
    cut = std::min({cut, a.sequence.size(), b.sequence.size()});
    child.sequence.reserve(b.sequence.size());
    child.sequence.insert(child.sequence.end(), a.sequence.begin(), a.sequence.begin() + static_cast<std::ptrdiff_t>(cut));
    child.sequence.insert(child.sequence.end(), b.sequence.begin() + static_cast<std::ptrdiff_t>(cut), b.sequence.end());
    return child;
}

/// Single-point crossover with the cut drawn uniformly from [1, min_len - 1].
inline ConnectedGenome crossover(const ConnectedGenome& a, const ConnectedGenome& b, Rng& rng) {
    std::size_t shortest = std::min(a.sequence.size(), b.sequence.size());
    if (shortest < 2) {
        return crossover_at(a, b, shortest);
    }
    std::uniform_int_distribution<std::size_t> pick(1, shortest - 1);
    return crossover_at(a, b, pick(rng));
}

/// Per cell: move within move_radius (L-infinity), or delete; then maybe append
/// one fresh cell from the window. Duplicates are dropped, first occurrence wins.
inline CoordinateGenome mutate_coordinate(const CoordinateGenome& genome, const MutationRates& rates, Rng& rng,
                                          const Box& window) {
    std::bernoulli_distribution move(std::clamp(rates.move_rate, 0.0, 1.0));
    std::bernoulli_distribution remove(std::clamp(rates.remove_rate, 0.0, 1.0));
    std::bernoulli_distribution add(std::clamp(rates.add_rate, 0.0, 1.0));
    std::uniform_int_distribution<int> jitter(-rates.move_radius, rates.move_radius);

    CoordinateGenome out;
    out.cells.reserve(genome.cells.size() + 1);
    std::unordered_set<Cell, CellHash> seen;
    auto keep = [&](Cell c) {
        if (seen.insert(c).second) {
            out.cells.push_back(c);
        }
    };
    for (Cell c : genome.cells) {
        if (rates.remove_rate > 0.0 && remove(rng)) {
            continue;
        }
        if (rates.move_rate > 0.0 && move(rng)) {
            int dx = jitter(rng);
            c = {c.x + dx, c.y + jitter(rng)};
        }
        keep(c);
    }
    if (rates.add_rate > 0.0 && add(rng)) {
        keep(random_cell(window, rng));
    }
    return out;
}

}  // namespace firefight
