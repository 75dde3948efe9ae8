#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>

namespace firefight {

/// Lattice coordinate. y grows northwards.
struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Cell, Cell) = default;
    friend constexpr auto operator<=>(Cell, Cell) = default;
    friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
    friend std::ostream& operator<<(std::ostream& os, Cell c) {
        return os << '(' << c.x << ',' << c.y << ')';
    }
};

constexpr int l1_distance(Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }
constexpr int linf_distance(Cell a, Cell b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

struct CellHash {
    std::size_t operator()(Cell c) const noexcept {
        auto packed = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
                      static_cast<std::uint32_t>(c.y);
        packed ^= packed >> 33;
        packed *= 0xff51afd7ed558ccdULL;
        packed ^= packed >> 33;
        return static_cast<std::size_t>(packed);
    }
};

constexpr std::array<Cell, 4> kNeighbors4{{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};

/// Inclusive axis-aligned box.
struct Box {
    Cell lo;
    Cell hi;

    constexpr bool contains(Cell c) const {
        return c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y;
    }
    constexpr std::int64_t area() const {
        return static_cast<std::int64_t>(hi.x - lo.x + 1) * (hi.y - lo.y + 1);
    }
    friend constexpr bool operator==(const Box&, const Box&) = default;
};

/// Compass directions in clockwise order starting at north.
enum class Direction8 : std::uint8_t { N, NE, E, SE, S, SW, W, NW };

inline constexpr std::array<Direction8, 8> kAllDirections{
    Direction8::N, Direction8::NE, Direction8::E, Direction8::SE,
    Direction8::S, Direction8::SW, Direction8::W, Direction8::NW};

constexpr Cell offset(Direction8 d) {
    constexpr std::array<Cell, 8> table{{{0, 1}, {1, 1}, {1, 0}, {1, -1},
                                         {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};
    return table[static_cast<std::size_t>(d)];
}

constexpr Direction8 clockwise(Direction8 d) {
    return static_cast<Direction8>((static_cast<int>(d) + 1) % 8);
}

constexpr Direction8 counter_clockwise(Direction8 d) {
    return static_cast<Direction8>((static_cast<int>(d) + 7) % 8);
}

constexpr std::string_view to_string(Direction8 d) {
    constexpr std::array<std::string_view, 8> names{"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
    return names[static_cast<std::size_t>(d)];
}

constexpr std::optional<Direction8> parse_direction(std::string_view s) {
    for (auto d : kAllDirections) {
        if (to_string(d) == s) {
            return d;
        }
    }
    return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, Direction8 d) { return os << to_string(d); }

}  // namespace firefight
