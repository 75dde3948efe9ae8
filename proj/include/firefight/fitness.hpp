#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "firefight/simulate.hpp"

namespace firefight {

// Comparators in this file return std::strong_ordering where `greater` means
// the left argument is fitter.

struct EnclosureFitness {
    std::int64_t burning_count = 0;
    bool enclosed = false;
    std::optional<int> enclosure_time;
    std::int64_t protected_count = 0;

    friend bool operator==(const EnclosureFitness&, const EnclosureFitness&) = default;
};

inline EnclosureFitness enclosure_fitness(const Outcome& outcome) {
    EnclosureFitness f;
    f.burning_count = outcome.burning_count;
    f.enclosed = outcome.reason == EndReason::Enclosed;
    if (f.enclosed) {
        f.enclosure_time = outcome.end_time;
    }
    f.protected_count = outcome.protected_count;
    return f;
}

/// Fewer burning cells first; then enclosed, earlier enclosure, fewer protections.
inline std::strong_ordering compare_enclosure(const EnclosureFitness& a, const EnclosureFitness& b) {
    if (a.burning_count != b.burning_count) {
        return b.burning_count <=> a.burning_count;
    }
    if (a.enclosed != b.enclosed) {
        return a.enclosed <=> b.enclosed;
    }
    if (a.enclosed && *a.enclosure_time != *b.enclosure_time) {
        return *b.enclosure_time <=> *a.enclosure_time;
    }
    return b.protected_count <=> a.protected_count;
}

/// r is the first contact time; survivors carry r = horizon + 1 and compare
/// above every run that touched the highway.
struct HighwayProfile {
    int r = 1;
    bool survived = false;
    std::vector<int> d;

    friend bool operator==(const HighwayProfile&, const HighwayProfile&) = default;
};

inline HighwayProfile highway_fitness(const Outcome& outcome) {
    HighwayProfile p;
    p.survived = outcome.reason != EndReason::HighwayReached;
    p.r = p.survived ? outcome.end_time + 1 : outcome.end_time;
    p.d = outcome.distance_profile;
    return p;
}

inline std::strong_ordering compare_highway(const HighwayProfile& a, const HighwayProfile& b) {
    if (a.survived != b.survived) {
        return a.survived <=> b.survived;
    }
    if (a.r != b.r) {
        return a.r <=> b.r;
    }
    std::size_t n = std::max(a.d.size(), b.d.size());
    for (std::size_t i = 0; i < n; ++i) {
        int da = i < a.d.size() ? a.d[i] : 0;
        int db = i < b.d.size() ? b.d[i] : 0;
        if (da != db) {
            return db <=> da;
        }
    }
    return std::strong_ordering::equal;
}

using Fitness = std::variant<EnclosureFitness, HighwayProfile>;

inline Fitness scenario_fitness(const Outcome& outcome, Scenario scenario) {
    if (scenario == Scenario::Enclosure) {
        return enclosure_fitness(outcome);
    }
    return highway_fitness(outcome);
}

/// Both sides must come from the same scenario.
inline std::strong_ordering compare_fitness(const Fitness& a, const Fitness& b) {
    if (const auto* ea = std::get_if<EnclosureFitness>(&a)) {
        return compare_enclosure(*ea, std::get<EnclosureFitness>(b));
    }
    return compare_highway(std::get<HighwayProfile>(a), std::get<HighwayProfile>(b));
}

inline bool fitter(const Fitness& a, const Fitness& b) { return compare_fitness(a, b) > 0; }

inline std::string render_profile(const std::vector<int>& d) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < d.size(); ++i) {
        os << (i ? "," : "") << d[i];
    }
    os << ']';
    return os.str();
}

/// Run-log rendering: `fitness=<burning_count>` or `r=<r> d=[...]`.
inline std::string render_fitness(const Fitness& f) {
    if (const auto* e = std::get_if<EnclosureFitness>(&f)) {
        return "fitness=" + std::to_string(e->burning_count);
    }
    const auto& h = std::get<HighwayProfile>(f);
    return "r=" + std::to_string(h.r) + " d=" + render_profile(h.d);
}

}  // namespace firefight
