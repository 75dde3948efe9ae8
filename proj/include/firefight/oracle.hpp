#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firefight/error.hpp"
#include "firefight/evolution.hpp"
#include "firefight/fitness.hpp"
#include "firefight/genome.hpp"
#include "firefight/parallel.hpp"
#include "firefight/simulate.hpp"

namespace firefight {

inline constexpr std::uint64_t kOracleGuard = 100'000'000;

struct OracleResult {
    ConnectedGenome best;
    EnclosureFitness fitness;
    Outcome outcome;
    std::uint64_t evaluated = 0;
    /// How many enumerated genomes ended enclosed.
    std::uint64_t enclosing = 0;
};

/// Gene number v in [0, 16): direction v % 8, back end when v >= 8.
inline Gene gene_from_index(unsigned v) {
    return {static_cast<Direction8>(v & 7u), v >= 8 ? ChainEnd::Back : ChainEnd::Front};
}

inline std::uint64_t oracle_space(std::size_t seq_len, std::size_t starts) {
    long double size = static_cast<long double>(starts);
    for (std::size_t i = 0; i < seq_len; ++i) {
        size *= 16.0L;
        if (size > 1e19L) {
            return UINT64_MAX;
        }
    }
    return static_cast<std::uint64_t>(size);
}

/// Exhaustive search over every connected genome of length seq_len from every
/// start. Enumeration is lexicographic (start order, then genes); the fittest
/// genome wins and ties go to the earliest one.
inline OracleResult brute_force_best(const SimConfig& config, std::size_t seq_len, const std::vector<Cell>& starts,
                                     RepairOrientation repair = RepairOrientation::FrontCounterClockwise,
                                     int jobs = 0, std::uint64_t guard = kOracleGuard) {
    config.validate();
    if (starts.empty() || seq_len == 0) {
        throw ConfigInvalid("oracle needs at least one start and one gene");
    }
    const std::uint64_t space = oracle_space(seq_len, starts.size());
    if (space > guard) {
        throw SearchSpaceTooLarge("search space " + (space == UINT64_MAX ? std::string(">1e19") : std::to_string(space)) +
                                  " exceeds guard " + std::to_string(guard));
    }

    struct Chunk {
        std::optional<ConnectedGenome> best;
        EnclosureFitness fitness;
        std::uint64_t evaluated = 0;
        std::uint64_t enclosing = 0;
    };
    const std::size_t chunks = starts.size() * 16;
    std::vector<Chunk> found(chunks);

    parallel_for(chunks, jobs, [&](std::size_t index) {
        Chunk& chunk = found[index];
        ConnectedGenome genome{starts[index / 16], std::vector<Gene>(seq_len)};
        genome.sequence[0] = gene_from_index(static_cast<unsigned>(index % 16));
        std::vector<unsigned> digits(seq_len, 0);
        while (true) {
            for (std::size_t i = 1; i < seq_len; ++i) {
                genome.sequence[i] = gene_from_index(digits[i]);
            }
            Outcome o = evaluate_connected(genome, config, repair);
            EnclosureFitness f = enclosure_fitness(o);
            ++chunk.evaluated;
            chunk.enclosing += f.enclosed ? 1 : 0;
            if (!chunk.best || compare_enclosure(f, chunk.fitness) > 0) {
                chunk.best = genome;
                chunk.fitness = f;
            }
            std::size_t pos = seq_len;
            while (pos > 1 && ++digits[pos - 1] == 16) {
                digits[pos - 1] = 0;
                --pos;
            }
            if (pos <= 1) {
                break;
            }
        }
    });

    OracleResult result;
    bool have = false;
    for (auto& chunk : found) {
        result.evaluated += chunk.evaluated;
        result.enclosing += chunk.enclosing;
        if (!have || compare_enclosure(chunk.fitness, result.fitness) > 0) {
            result.best = *chunk.best;
            result.fitness = chunk.fitness;
            have = true;
        }
    }
    result.outcome = evaluate_connected(result.best, config, repair);
    return result;
}

inline OracleResult brute_force_best(const Rational& c, int t_max, std::size_t seq_len, const std::vector<Cell>& starts,
                                     int jobs = 0) {
    SimConfig config;
    config.c = c;
    config.t_max = t_max;
    return brute_force_best(config, seq_len, starts, RepairOrientation::FrontCounterClockwise, jobs);
}

}  // namespace firefight
