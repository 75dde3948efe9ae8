#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "firefight/fitness.hpp"
#include "firefight/genome.hpp"
#include "firefight/parallel.hpp"
#include "firefight/simulate.hpp"

namespace firefight {

/// Step-1 balance for enclosure runs: 2 when c < 2 (lets the first step
/// protect two cells), otherwise none.
inline std::optional<Rational> speedup_opening(const Rational& c) {
    if (c < Rational(2)) {
        return Rational(2);
    }
    return std::nullopt;
}

/// Knobs of the generational algorithm. n, p and r defaults are this
/// project's choice.
struct EAParams {
    Rational c{2};
    int n = 50;
    int t = 10;
    double p = 0.02;
    double r = 0.3;
    std::int64_t initial_budget = 0;
    /// Step-1 balance in place of c; the speed-up for c < 2 opens with 2.
    std::optional<Rational> opening_budget;
    Cell start{0, 1};
    Cell fire_origin{0, 0};
    std::uint64_t seed = 0;
    int max_generations = 1000;
    /// Stop once the best burning count is at or below this value.
    std::optional<std::int64_t> target_fitness;
    bool elitism = true;
    RepairOrientation repair = RepairOrientation::FrontCounterClockwise;
    /// 0 selects ceil(t * c) + initial_budget.
    std::size_t genome_length = 0;
    int jobs = 0;

    std::size_t effective_length() const {
        if (genome_length > 0) {
            return genome_length;
        }
        auto len = (c * Rational(t)).ceil() + initial_budget;
        return static_cast<std::size_t>(std::max<std::int64_t>(len, 1));
    }

    int parents() const { return static_cast<int>(std::floor(r * n + 1e-9)); }

    SimConfig sim_config() const {
        SimConfig cfg;
        cfg.c = c;
        cfg.initial_budget = initial_budget;
        cfg.opening_budget = opening_budget;
        cfg.t_max = t;
        cfg.scenario = Scenario::Enclosure;
        cfg.fire_origin = fire_origin;
        cfg.rng_seed = seed;
        return cfg;
    }

    void validate() const {
        if (n < 2) {
            throw ConfigInvalid("population size n must be at least 2");
        }
        if (!(r > 0.0 && r <= 1.0) || parents() < 1) {
            throw ConfigInvalid("parent ratio r must leave at least one parent");
        }
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigInvalid("mutation probability p must be in [0, 1]");
        }
        if (max_generations < 0) {
            throw ConfigInvalid("max_generations must be non-negative");
        }
        sim_config().validate();
    }

    std::vector<std::pair<std::string, std::string>> echo() const {
        return {{"c", c.to_string()},
                {"n", std::to_string(n)},
                {"t", std::to_string(t)},
                {"p", std::to_string(p)},
                {"r", std::to_string(r)},
                {"initial_budget", std::to_string(initial_budget)},
                {"opening_budget", opening_budget ? opening_budget->to_string() : c.to_string()},
                {"start", std::to_string(start.x) + "," + std::to_string(start.y)},
                {"seed", std::to_string(seed)},
                {"max_generations", std::to_string(max_generations)},
                {"genome_length", std::to_string(effective_length())},
                {"elitism", elitism ? "on" : "off"},
                {"repair_orientation", repair == RepairOrientation::FrontCounterClockwise ? "ccw" : "cw"}};
    }
};

struct GenerationRecord {
    std::int64_t generation = 0;
    Fitness best;
    double mean = 0.0;
    /// Present when the best genome changed in this record.
    std::optional<Genome> best_genome;
};

struct RunLog {
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    std::string terminal_reason;
    std::vector<GenerationRecord> records;
};

inline Outcome evaluate_connected(const ConnectedGenome& genome, const SimConfig& config,
                                  RepairOrientation repair = RepairOrientation::FrontCounterClockwise) {
    ConnectedDecoder decoder(genome, repair);
    return simulate(decoder, config);
}

inline Outcome evaluate_genome(const Genome& genome, const SimConfig& config,
                               RepairOrientation repair = RepairOrientation::FrontCounterClockwise) {
    if (const auto* g = std::get_if<ConnectedGenome>(&genome)) {
        return evaluate_connected(*g, config, repair);
    }
    CoordinateDecoder decoder(std::get<CoordinateGenome>(genome), config.fire_origin);
    return simulate(decoder, config);
}

struct GenerationResult {
    std::vector<ConnectedGenome> next;
    /// Best of the evaluated (incoming) population.
    ConnectedGenome best;
    EnclosureFitness best_fitness;
    double mean_burning = 0.0;
};

/// One generation: evaluate, rank, keep floor(r*n) parents, refill by
/// crossover of uniformly drawn parents, mutate (the top individual is kept
/// intact when elitism is on).
inline GenerationResult evolve_generation(const std::vector<ConnectedGenome>& population, const EAParams& params,
                                          Rng& rng) {
    const SimConfig config = params.sim_config();
    std::vector<EnclosureFitness> fitness(population.size());
    parallel_for(population.size(), params.jobs, [&](std::size_t i) {
        fitness[i] = enclosure_fitness(evaluate_connected(population[i], config, params.repair));
    });

    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_enclosure(fitness[a], fitness[b]) > 0;
    });

    GenerationResult result;
    result.best = population[order.front()];
    result.best_fitness = fitness[order.front()];
    double total = 0.0;
    for (const auto& f : fitness) {
        total += static_cast<double>(f.burning_count);
    }
    result.mean_burning = total / static_cast<double>(fitness.size());

    const auto keep = static_cast<std::size_t>(std::min(params.parents(), params.n));
    auto& next = result.next;
    next.reserve(static_cast<std::size_t>(params.n));
    for (std::size_t i = 0; i < keep; ++i) {
        next.push_back(population[order[i]]);
    }
    std::uniform_int_distribution<std::size_t> pick(0, keep - 1);
    while (next.size() < static_cast<std::size_t>(params.n)) {
        const auto& a = next[pick(rng)];
        const auto& b = next[pick(rng)];
        next.push_back(crossover(a, b, rng));
    }
    for (std::size_t i = params.elitism ? 1 : 0; i < next.size(); ++i) {
        next[i] = mutate_connected(std::move(next[i]), params.p, rng);
    }
    return result;
}

struct EAResult {
    ConnectedGenome best;
    EnclosureFitness best_fitness;
    Outcome best_outcome;
    int generations = 0;
    RunLog log;
};

inline std::vector<ConnectedGenome> initial_population(const EAParams& params, Rng& rng) {
    std::vector<ConnectedGenome> population;
    population.reserve(static_cast<std::size_t>(params.n));
    for (int i = 0; i < params.n; ++i) {
        population.push_back(random_connected(params.effective_length(), params.start, rng));
    }
    return population;
}

/// Runs generations until max_generations or the target burning count.
inline EAResult run_ea(const EAParams& params) {
    params.validate();
    auto clock_start = std::chrono::steady_clock::now();
    Rng rng(params.seed);
    auto population = initial_population(params, rng);

    EAResult result;
    result.log.params = params.echo();
    result.log.seed = params.seed;
    result.log.terminal_reason = "max_generations";
    bool have_best = false;

    for (int g = 0; g < params.max_generations; ++g) {
        auto gen = evolve_generation(population, params, rng);
        GenerationRecord rec;
        rec.generation = g;
        bool improved = !have_best || compare_enclosure(gen.best_fitness, result.best_fitness) > 0;
        if (improved) {
            result.best = gen.best;
            result.best_fitness = gen.best_fitness;
            rec.best_genome = gen.best;
            have_best = true;
        }
        rec.best = result.best_fitness;
        rec.mean = gen.mean_burning;
        result.log.records.push_back(std::move(rec));
        result.generations = g + 1;
        population = std::move(gen.next);
        if (params.target_fitness && result.best_fitness.burning_count <= *params.target_fitness) {
            result.log.terminal_reason = "target_reached";
            break;
        }
    }
    if (!have_best) {
        // zero generations: report the best of the initial population
        auto gen = evolve_generation(population, params, rng);
        result.best = gen.best;
        result.best_fitness = gen.best_fitness;
    }
    result.best_outcome = evaluate_connected(result.best, params.sim_config(), params.repair);
    result.log.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
    return result;
}

struct HillClimbParams {
    Rational c{6, 5};
    /// Simulation horizon.
    int t = 200;
    std::uint64_t seed = 0;
    std::int64_t max_iterations = 10000;
    int restarts = 1;
    GenomeKind kind = GenomeKind::Coordinate;
    MutationRates rates{0.02, 0.05, 0.5, 0.02, 2};
    Scenario scenario = Scenario::Highway;
    Cell fire_origin{0, 20};
    int highway_row = 0;
    /// Connected genomes: chain start.
    Cell start{0, 19};
    /// Coordinate genomes: where new cells are drawn.
    Box window{{-40, 0}, {40, 40}};
    std::int64_t initial_budget = 0;
    std::optional<Rational> opening_budget;
    bool highway_protectable = true;
    std::vector<Cell> initial_protected;
    /// Connected genome length (0 selects ceil(t * c) + initial_budget).
    std::size_t genome_length = 0;
    /// Coordinate genome initial size.
    std::size_t initial_cells = 20;
    RepairOrientation repair = RepairOrientation::FrontCounterClockwise;
    int jobs = 0;

    SimConfig sim_config() const {
        SimConfig cfg;
        cfg.c = c;
        cfg.initial_budget = initial_budget;
        cfg.opening_budget = opening_budget;
        cfg.t_max = t;
        cfg.scenario = scenario;
        cfg.fire_origin = fire_origin;
        cfg.highway_row = highway_row;
        cfg.highway_protectable = highway_protectable;
        cfg.rng_seed = seed;
        cfg.initial_protected = initial_protected;
        return cfg;
    }

    std::size_t effective_length() const {
        if (genome_length > 0) {
            return genome_length;
        }
        auto len = (c * Rational(t)).ceil() + initial_budget;
        return static_cast<std::size_t>(std::max<std::int64_t>(len, 1));
    }

    void validate() const {
        if (restarts < 1) {
            throw ConfigInvalid("restarts must be at least 1");
        }
        if (max_iterations < 0) {
            throw ConfigInvalid("max_iterations must be non-negative");
        }
        for (double rate : {rates.p, rates.move_rate, rates.add_rate, rates.remove_rate}) {
            if (!(rate >= 0.0 && rate <= 1.0)) {
                throw ConfigInvalid("mutation rates must be in [0, 1]");
            }
        }
        sim_config().validate();
    }

    std::vector<std::pair<std::string, std::string>> echo() const {
        return {{"c", c.to_string()},
                {"t", std::to_string(t)},
                {"seed", std::to_string(seed)},
                {"max_iterations", std::to_string(max_iterations)},
                {"restarts", std::to_string(restarts)},
                {"kind", kind == GenomeKind::Connected ? "connected" : "coordinate"},
                {"scenario", std::string(to_string(scenario))},
                {"fire_origin", std::to_string(fire_origin.x) + "," + std::to_string(fire_origin.y)},
                {"highway_row", std::to_string(highway_row)},
                {"p", std::to_string(rates.p)},
                {"move_rate", std::to_string(rates.move_rate)},
                {"add_rate", std::to_string(rates.add_rate)},
                {"remove_rate", std::to_string(rates.remove_rate)},
                {"move_radius", std::to_string(rates.move_radius)},
                {"initial_budget", std::to_string(initial_budget)},
                {"opening_budget", opening_budget ? opening_budget->to_string() : c.to_string()},
                {"highway_protectable", highway_protectable ? "true" : "false"}};
    }
};

inline Genome random_initial(const HillClimbParams& params, Rng& rng) {
    if (params.kind == GenomeKind::Connected) {
        return random_connected(params.effective_length(), params.start, rng);
    }
    return random_coordinate(params.initial_cells, params.window, rng);
}

inline Genome mutate_genome(const Genome& genome, const HillClimbParams& params, Rng& rng) {
    if (const auto* g = std::get_if<ConnectedGenome>(&genome)) {
        return mutate_connected(*g, params.rates.p, rng);
    }
    return mutate_coordinate(std::get<CoordinateGenome>(genome), params.rates, rng, params.window);
}

struct HillClimbResult {
    Genome best;
    Fitness fitness;
    Outcome outcome;
    RunLog log;
};

/// Mutation-only improvement of a single strategy: a mutant replaces the
/// current genome only if strictly fitter. Every acceptance is logged.
inline HillClimbResult hill_climb(Genome initial, const HillClimbParams& params, Rng& rng) {
    params.validate();
    auto clock_start = std::chrono::steady_clock::now();
    const SimConfig config = params.sim_config();

    HillClimbResult result;
    result.best = std::move(initial);
    result.outcome = evaluate_genome(result.best, config, params.repair);
    result.fitness = scenario_fitness(result.outcome, params.scenario);
    result.log.params = params.echo();
    result.log.seed = params.seed;
    result.log.terminal_reason = "max_iterations";
    result.log.records.push_back({0, result.fitness, 0.0, result.best});

    for (std::int64_t it = 1; it <= params.max_iterations; ++it) {
        Genome candidate = mutate_genome(result.best, params, rng);
        Outcome outcome = evaluate_genome(candidate, config, params.repair);
        Fitness f = scenario_fitness(outcome, params.scenario);
        if (fitter(f, result.fitness)) {
            result.best = std::move(candidate);
            result.fitness = std::move(f);
            result.outcome = std::move(outcome);
            result.log.records.push_back({it, result.fitness, 0.0, result.best});
        }
    }
    result.log.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
    return result;
}

/// Seeded start: draws the initial genome from the same stream.
inline HillClimbResult hill_climb(const HillClimbParams& params) {
    Rng rng(params.seed);
    Genome initial = random_initial(params, rng);
    return hill_climb(std::move(initial), params, rng);
}

struct RestartsResult {
    Genome best;
    Fitness fitness;
    Outcome outcome;
    int best_restart = 0;
    std::vector<RunLog> logs;
    std::vector<Fitness> restart_fitness;
};

/// Independent climbs with seeds derive_seed(seed, i); ties go to the lowest index.
inline RestartsResult parallel_restarts(const HillClimbParams& params) {
    params.validate();
    std::vector<std::optional<HillClimbResult>> runs(static_cast<std::size_t>(params.restarts));
    HillClimbParams inner = params;
    inner.jobs = 1;
    parallel_for(runs.size(), params.jobs, [&](std::size_t i) {
        HillClimbParams p = inner;
        p.seed = derive_seed(params.seed, i);
        runs[i] = hill_climb(p);
    });

    RestartsResult out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        auto& run = *runs[i];
        out.restart_fitness.push_back(run.fitness);
        if (i == 0 || fitter(run.fitness, out.fitness)) {
            out.best = run.best;
            out.fitness = run.fitness;
            out.outcome = run.outcome;
            out.best_restart = static_cast<int>(i);
        }
        out.logs.push_back(std::move(run.log));
    }
    return out;
}

}  // namespace firefight
