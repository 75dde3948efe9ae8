// firefight: evolve and replay firefighter strategies on the grid.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "firefight/firefight.hpp"

namespace fs = std::filesystem;
using namespace firefight;

namespace {

struct Options {
    std::string c = "2";
    int t = 0;
    int n = 50;
    double p = 0.02;
    double r = 0.3;
    std::optional<std::uint64_t> seed;
    int d = 20;
    std::string kind = "coordinate";
    std::string baseline;
    std::int64_t initial_budget = 0;
    std::string opening_budget;
    std::string repair = "ccw";
    std::string out = "out";
    std::string render = "none";
    int every = 1;
    int jobs = 0;
    int generations = 2000;
    std::optional<std::int64_t> target;
    std::string start;
    int restarts = 8;
    std::int64_t iterations = 20000;
    std::optional<int> diag_n;
    int barrier_row = 1;
    bool recursive_tail = false;
    bool highway_off_limits = false;
    std::vector<std::string> preprotect;
    std::string c_from = "1.6";
    std::string c_to = "2.0";
    std::string c_step = "0.05";
    int seeds = 1;
    int len = 6;
    std::vector<std::string> starts;
    std::vector<std::string> cs;
    std::string genome_path;
    std::string scenario = "enclosure";
    std::string config;
    std::string command_line;
};

Cell parse_cell(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ConfigInvalid("expected x,y but got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        int x = std::stoi(text.substr(0, comma), &used);
        if (used != comma) {
            throw ConfigInvalid("bad cell '" + text + "'");
        }
        std::string rest = text.substr(comma + 1);
        int y = std::stoi(rest, &used);
        if (used != rest.size()) {
            throw ConfigInvalid("bad cell '" + text + "'");
        }
        return {x, y};
    } catch (const std::logic_error&) {
        throw ConfigInvalid("bad cell '" + text + "'");
    }
}

std::uint64_t resolve_seed(Options& o) {
    if (!o.seed) {
        std::random_device rd;
        o.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        std::cout << "seed=" << *o.seed << '\n';
    }
    return *o.seed;
}

RepairOrientation parse_repair(const std::string& s) {
    if (s == "ccw") {
        return RepairOrientation::FrontCounterClockwise;
    }
    if (s == "cw") {
        return RepairOrientation::FrontClockwise;
    }
    throw ConfigInvalid("repair orientation must be cw or ccw");
}

RenderFormat render_format(const Options& o) {
    auto f = parse_render_format(o.render);
    if (!f) {
        throw ConfigInvalid("render must be none, ascii or svg");
    }
    if (o.every < 1) {
        throw ConfigInvalid("--every must be at least 1");
    }
    return *f;
}

/// Enclosure runs below c = 2 open with a balance of 2 unless told otherwise.
std::optional<Rational> enclosure_opening(const Options& o, const Rational& c) {
    if (!o.opening_budget.empty()) {
        return Rational::parse(o.opening_budget);
    }
    return speedup_opening(c);
}

Rational enclosure_c(const Options& o) {
    Rational c = Rational::parse(o.c);
    if (c <= Rational(1)) {
        throw BudgetTooSmall("enclosure needs c > 1 (got " + c.to_decimal_string() + "); c <= 1 cannot enclose");
    }
    return c;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string enclosure_line(const Outcome& o, int generations) {
    std::ostringstream os;
    os << "enclosed=" << bool_text(o.reason == EndReason::Enclosed) << " time=" << o.end_time
       << " burned=" << o.burning_count << " generations=" << generations;
    return os.str();
}

std::string highway_line(const Outcome& o) {
    auto f = highway_fitness(o);
    std::string line = "r=" + std::to_string(f.r) + " profile=" + render_profile(f.d);
    if (f.survived) {
        line += " survived=true";
    }
    return line;
}

void add_provenance(RunLog& log, const Options& o) {
    log.params.emplace_back("command_line", o.command_line);
    log.params.emplace_back("config_file", o.config);
}

void write_run(const fs::path& dir, const RunLog& log, Cell origin, const GenomeFile& best) {
    write_text(dir / "run.jsonl", runlog_jsonl(log, origin));
    write_text(dir / "summary.csv", summary_csv(log));
    write_text(dir / "best.genome", print_genome(best));
}

template <class Source>
Outcome run_with_frames(Source& source, SimConfig config, const Options& o, const fs::path& dir) {
    auto format = render_format(o);
    if (format != RenderFormat::None) {
        config.frame_every = o.every;
    }
    Outcome out = simulate(source, config);
    std::optional<int> highway;
    if (config.scenario == Scenario::Highway) {
        highway = config.highway_row;
    }
    write_frames(out.frames, dir, format, highway);
    return out;
}

int cmd_enclose(Options& o) {
    Rational c = enclosure_c(o);
    const fs::path dir = o.out;
    SimConfig config;
    config.c = c;
    config.t_max = o.t > 0 ? o.t : 10;
    config.initial_budget = o.initial_budget;
    config.opening_budget = enclosure_opening(o, c);
    config.validate();
    render_format(o);

    if (!o.baseline.empty()) {
        std::vector<Cell> cells;
        if (o.baseline == "optimal-c2") {
            cells = optimal_c2_cells();
        } else if (o.baseline == "ring") {
            cells = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};
        } else {
            throw ConfigInvalid("enclosure baselines are optimal-c2 and ring");
        }
        ScriptedSource source(cells);
        Outcome out = run_with_frames(source, config, o, dir);
        RunLog log;
        log.params = {{"c", c.to_string()}, {"t", std::to_string(config.t_max)}, {"baseline", o.baseline}};
        add_provenance(log, o);
        log.terminal_reason = "scripted";
        log.records.push_back({0, enclosure_fitness(out), static_cast<double>(out.burning_count), std::nullopt});
        write_run(dir, log, {0, 0}, {{0, 0}, schedule_of(out.final_state)});
        std::cout << enclosure_line(out, 0) << '\n';
        return 0;
    }

    EAParams params;
    params.c = c;
    params.t = config.t_max;
    params.n = o.n;
    params.p = o.p;
    params.r = o.r;
    params.initial_budget = o.initial_budget;
    params.opening_budget = config.opening_budget;
    params.start = o.start.empty() ? Cell{0, 1} : parse_cell(o.start);
    params.max_generations = o.generations;
    params.target_fitness = o.target;
    params.repair = parse_repair(o.repair);
    params.jobs = o.jobs;
    params.validate();
    params.seed = resolve_seed(o);

    EAResult result = run_ea(params);
    add_provenance(result.log, o);
    ConnectedDecoder decoder(result.best, params.repair);
    Outcome out = run_with_frames(decoder, params.sim_config(), o, dir);
    write_run(dir, result.log, {0, 0}, {result.best.start, result.best});
    std::cout << enclosure_line(out, result.generations) << '\n';
    return 0;
}

SimConfig highway_config(const Options& o) {
    SimConfig config;
    config.c = Rational::parse(o.c);
    config.t_max = o.t > 0 ? o.t : 500;
    config.scenario = Scenario::Highway;
    config.fire_origin = {0, o.d};
    config.highway_row = 0;
    config.highway_protectable = !o.highway_off_limits;
    config.initial_budget = o.initial_budget;
    if (!o.opening_budget.empty()) {
        config.opening_budget = Rational::parse(o.opening_budget);
    }
    for (const auto& s : o.preprotect) {
        config.initial_protected.push_back(parse_cell(s));
    }
    config.validate();
    return config;
}

int cmd_highway(Options& o) {
    SimConfig config = highway_config(o);
    const fs::path dir = o.out;
    render_format(o);

    if (!o.baseline.empty()) {
        Outcome out;
        if (o.baseline == "symmetric") {
            if (o.barrier_row < 0 || o.barrier_row >= o.d) {
                throw ConfigInvalid("barrier row must satisfy 0 <= row < d");
            }
            SymmetricAlternating source(config.fire_origin, config.highway_row + o.barrier_row);
            out = run_with_frames(source, config, o, dir);
        } else if (o.baseline == "diagonal") {
            std::int64_t n = o.diag_n ? *o.diag_n : min_diagonal_start(config.c);
            AsymmetricDiagonal source(config.c, config.fire_origin, config.highway_row, n, o.recursive_tail);
            out = run_with_frames(source, config, o, dir);
        } else {
            throw ConfigInvalid("highway baselines are symmetric and diagonal");
        }
        RunLog log;
        log.params = {{"c", config.c.to_string()}, {"d", std::to_string(o.d)},
                      {"tmax", std::to_string(config.t_max)}, {"baseline", o.baseline}};
        add_provenance(log, o);
        log.terminal_reason = "scripted";
        log.records.push_back({0, highway_fitness(out), 0.0, std::nullopt});
        write_run(dir, log, config.fire_origin, {config.fire_origin, schedule_of(out.final_state)});
        std::cout << highway_line(out) << '\n';
        return 0;
    }

    HillClimbParams params;
    params.c = config.c;
    params.t = config.t_max;
    params.max_iterations = o.iterations;
    params.restarts = o.restarts;
    if (o.kind == "coordinate") {
        params.kind = GenomeKind::Coordinate;
    } else if (o.kind == "connected") {
        params.kind = GenomeKind::Connected;
    } else {
        throw ConfigInvalid("kind must be connected or coordinate");
    }
    params.scenario = Scenario::Highway;
    params.fire_origin = config.fire_origin;
    params.highway_row = config.highway_row;
    params.highway_protectable = config.highway_protectable;
    params.start = o.start.empty() ? Cell{0, o.d - 1} : parse_cell(o.start);
    params.window = {{-2 * o.d - 20, config.highway_row}, {2 * o.d + 20, 2 * o.d}};
    params.initial_budget = config.initial_budget;
    params.opening_budget = config.opening_budget;
    params.initial_protected = config.initial_protected;
    params.rates.p = o.p;
    params.repair = parse_repair(o.repair);
    params.jobs = o.jobs;
    params.validate();
    params.seed = resolve_seed(o);

    RestartsResult result = parallel_restarts(params);
    RunLog log = result.logs[static_cast<std::size_t>(result.best_restart)];
    log.params.emplace_back("best_restart", std::to_string(result.best_restart));
    add_provenance(log, o);
    Outcome out;
    if (const auto* g = std::get_if<ConnectedGenome>(&result.best)) {
        ConnectedDecoder decoder(*g, params.repair);
        out = run_with_frames(decoder, config, o, dir);
        write_run(dir, log, config.fire_origin, {g->start, *g});
    } else {
        const auto& cg = std::get<CoordinateGenome>(result.best);
        CoordinateDecoder decoder(cg, config.fire_origin);
        out = run_with_frames(decoder, config, o, dir);
        write_run(dir, log, config.fire_origin, {config.fire_origin, cg});
    }
    std::cout << highway_line(out) << '\n';
    return 0;
}

int cmd_sweep(Options& o) {
    Rational from = Rational::parse(o.c_from);
    Rational to = Rational::parse(o.c_to);
    Rational step = Rational::parse(o.c_step);
    if (!(from <= to) || step <= Rational(0)) {
        throw ConfigInvalid("sweep needs c_from <= c_to and a positive step");
    }
    if (from <= Rational(1)) {
        throw BudgetTooSmall("enclosure needs c > 1");
    }
    if (o.seeds < 1) {
        throw ConfigInvalid("--seeds must be at least 1");
    }
    const std::uint64_t seed = resolve_seed(o);
    std::vector<SweepRow> rows;
    for (Rational c = from; c <= to; c = c + step) {
        EAParams params;
        params.c = c;
        params.t = o.t > 0 ? o.t : 80;
        params.n = o.n;
        params.p = o.p;
        params.r = o.r;
        params.initial_budget = o.initial_budget;
        params.opening_budget = enclosure_opening(o, c);
        params.start = o.start.empty() ? Cell{0, 1} : parse_cell(o.start);
        params.max_generations = o.generations;
        params.repair = parse_repair(o.repair);
        params.jobs = o.jobs;
        params.validate();
        std::optional<EAResult> best;
        for (int i = 0; i < o.seeds; ++i) {
            params.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
            EAResult res = run_ea(params);
            if (!best || compare_enclosure(res.best_fitness, best->best_fitness) > 0) {
                best = std::move(res);
            }
        }
        SweepRow row;
        row.c = c;
        row.enclosed = best->best_fitness.enclosed;
        row.enclose_time = best->best_fitness.enclosure_time;
        row.burned = best->best_fitness.burning_count;
        row.generations = best->generations;
        row.last_protect_step = best->best_outcome.last_protect_step;
        rows.push_back(row);
        std::cout << "c=" << c.to_decimal_string() << " enclosed=" << bool_text(row.enclosed)
                  << " time=" << (row.enclose_time ? std::to_string(*row.enclose_time) : "-")
                  << " burned=" << row.burned << " last_protect=" << row.last_protect_step << '\n';
    }
    write_text(fs::path(o.out) / "sweep.csv", sweep_csv(rows));
    return 0;
}

int cmd_replay(Options& o) {
    GenomeFile file = load_genome(o.genome_path);
    const fs::path dir = o.out;
    render_format(o);
    SimConfig config;
    if (o.scenario == "enclosure") {
        config.c = enclosure_c(o);
        config.t_max = o.t > 0 ? o.t : 10;
        config.initial_budget = o.initial_budget;
        config.opening_budget = enclosure_opening(o, config.c);
    } else if (o.scenario == "highway") {
        config = highway_config(o);
    } else {
        throw ConfigInvalid("scenario must be enclosure or highway");
    }
    if (auto* schedule = std::get_if<ProtectionSchedule>(&file.genome)) {
        config.fire_origin = file.start;
        for (const auto& [c, t] : schedule->entries) {
            if (t == 0) {
                config.initial_protected.push_back(c);
            }
        }
        config.initial_budget = std::max<std::int64_t>(config.initial_budget,
                                                       static_cast<std::int64_t>(config.initial_protected.size()));
    }
    config.validate();

    Outcome out;
    if (const auto* g = std::get_if<ConnectedGenome>(&file.genome)) {
        ConnectedDecoder decoder(*g, parse_repair(o.repair));
        out = run_with_frames(decoder, config, o, dir);
    } else if (const auto* cg = std::get_if<CoordinateGenome>(&file.genome)) {
        config.fire_origin = file.start;
        CoordinateDecoder decoder(*cg, config.fire_origin);
        out = run_with_frames(decoder, config, o, dir);
    } else {
        ScriptedSource source(std::get<ProtectionSchedule>(file.genome));
        out = run_with_frames(source, config, o, dir);
    }
    std::cout << (config.scenario == Scenario::Enclosure ? enclosure_line(out, 0) : highway_line(out)) << '\n';
    return 0;
}

int cmd_oracle(Options& o) {
    SimConfig config;
    config.c = Rational::parse(o.c);
    config.t_max = o.t > 0 ? o.t : 3;
    config.initial_budget = o.initial_budget;
    if (!o.opening_budget.empty()) {
        config.opening_budget = Rational::parse(o.opening_budget);
    }
    std::vector<Cell> starts;
    for (const auto& s : o.starts) {
        starts.push_back(parse_cell(s));
    }
    if (starts.empty()) {
        starts.push_back({0, 1});
    }
    if (o.len < 1) {
        throw ConfigInvalid("--len must be at least 1");
    }
    OracleResult res =
        brute_force_best(config, static_cast<std::size_t>(o.len), starts, parse_repair(o.repair), o.jobs);
    write_text(fs::path(o.out) / "best.genome", print_genome(res.best));
    std::cout << "enclosed=" << bool_text(res.fitness.enclosed) << " time=" << res.outcome.end_time
              << " burned=" << res.fitness.burning_count << " evaluated=" << res.evaluated
              << " enclosing=" << res.enclosing << '\n';
    return 0;
}

int cmd_baselines(Options& o) {
    std::vector<std::string> cs = o.cs.empty() ? std::vector<std::string>{"1.1", "1.2", "1.3", "1.4", "1.5"} : o.cs;
    std::ostringstream csv;
    csv << "c,symmetric_r,diagonal_n,diagonal_r,diagonal_survived\n";
    {
        SimConfig config;
        config.c = Rational(2);
        config.t_max = 10;
        auto source = optimal_c2_enclosure();
        std::cout << "optimal-c2 " << enclosure_line(simulate(source, config), 0) << '\n';
    }
    for (const auto& text : cs) {
        Options local = o;
        local.c = text;
        SimConfig config = highway_config(local);
        SymmetricAlternating sym(config.fire_origin, config.highway_row + o.barrier_row);
        auto sym_fit = highway_fitness(simulate(sym, config));
        std::string diag_n = "-";
        std::string diag_r = "-";
        bool survived = false;
        if (config.c > Rational(1)) {
            std::int64_t n = min_diagonal_start(config.c);
            if (config.fire_origin.y - config.highway_row > n) {
                AsymmetricDiagonal diag(config.c, config.fire_origin, config.highway_row, n, o.recursive_tail);
                auto f = highway_fitness(simulate(diag, config));
                diag_n = std::to_string(n);
                diag_r = std::to_string(f.r);
                survived = f.survived;
            }
        }
        std::cout << "c=" << config.c.to_decimal_string() << " symmetric r=" << sym_fit.r << " diagonal n=" << diag_n
                  << " r=" << diag_r << (survived ? " survived=true" : "") << '\n';
        csv << config.c.to_decimal_string() << ',' << sym_fit.r << ',' << diag_n << ',' << diag_r << ','
            << bool_text(survived) << '\n';
    }
    write_text(fs::path(o.out) / "baselines.csv", csv.str());
    return 0;
}

/// key=value lines ('#' comments) spliced in ahead of the user's own flags so
/// that flags given on the command line win.
std::vector<std::string> config_args(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config " + path);
    }
    std::vector<std::string> args;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty() || line.front() == '[') {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(lineno, "expected key=value in config");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        for (char& ch : key) {
            if (ch == '_') {
                ch = '-';
            }
        }
        args.push_back("--" + key + "=" + value);
    }
    return args;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--c", o.c, "budget per step, a/b or decimal");
    sub->add_option("--seed", o.seed, "RNG seed (drawn and printed when absent)");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--render", o.render, "frame export: none, ascii or svg");
    sub->add_option("--every", o.every, "render every k-th step");
    sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
    sub->add_option("--initial-budget", o.initial_budget, "extra whole cells of credit at the start");
    sub->add_option("--opening-budget", o.opening_budget,
                    "balance usable in step 1 in place of c (enclosure default: 2 when c < 2)");
    sub->add_option("--repair-orientation", o.repair, "cw or ccw rotation for the front end");
    sub->add_option("--config", o.config, "key=value file; command-line flags win");
}

void add_ea(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "population size");
    sub->add_option("--p", o.p, "mutation probability per locus");
    sub->add_option("--r", o.r, "share of the population kept as parents");
    sub->add_option("--generations", o.generations, "generation cap");
    sub->add_option("--start", o.start, "chain start x,y");
}

void add_highway(CLI::App* sub, Options& o) {
    sub->add_option("--d", o.d, "fire distance above the highway");
    sub->add_option("--highway-off-limits", o.highway_off_limits, "forbid protecting highway cells");
    sub->add_option("--preprotect", o.preprotect, "cell x,y protected before step 1 (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Evolve, replay and compare firefighter strategies on the grid"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    auto* enclose = app.add_subcommand("enclose", "evolve a barrier that encloses the fire");
    add_common(enclose, o);
    add_ea(enclose, o);
    enclose->add_option("--t,--tmax", o.t, "simulation steps (default 10)");
    enclose->add_option("--target", o.target, "stop once the best burned count is at most this");
    enclose->add_option("--baseline", o.baseline, "scripted instead of evolved: optimal-c2 or ring");

    auto* highway = app.add_subcommand("highway", "keep the fire away from a highway");
    add_common(highway, o);
    add_highway(highway, o);
    highway->add_option("--t,--tmax", o.t, "simulation steps (default 500)");
    highway->add_option("--p", o.p, "mutation probability per locus or cell");
    highway->add_option("--kind", o.kind, "genome: connected or coordinate");
    highway->add_option("--baseline", o.baseline, "scripted instead of evolved: symmetric or diagonal");
    highway->add_option("--restarts", o.restarts, "independent hill climbs");
    highway->add_option("--iterations", o.iterations, "mutations per climb");
    highway->add_option("--start", o.start, "connected chain start x,y");
    highway->add_option("--diag-n", o.diag_n, "diagonal start offset n (default: smallest allowed)");
    highway->add_option("--barrier-row", o.barrier_row, "symmetric barrier height above the highway");
    highway->add_flag("--recursive-tail", o.recursive_tail, "diagonal: spend spare budget next to the highway");

    auto* sweep = app.add_subcommand("sweep", "enclosure success across a range of c");
    add_common(sweep, o);
    add_ea(sweep, o);
    sweep->add_option("--t,--tmax", o.t, "simulation steps (default 80)");
    sweep->add_option("--c-from", o.c_from, "first c");
    sweep->add_option("--c-to", o.c_to, "last c");
    sweep->add_option("--c-step", o.c_step, "c increment");
    sweep->add_option("--seeds", o.seeds, "EA runs per c (best kept)");

    auto* replay = app.add_subcommand("replay", "re-simulate a saved genome");
    add_common(replay, o);
    add_highway(replay, o);
    replay->add_option("genome", o.genome_path, "genome file")->required();
    replay->add_option("--scenario", o.scenario, "enclosure or highway");
    replay->add_option("--t,--tmax", o.t, "simulation steps");

    auto* oracle = app.add_subcommand("oracle", "exhaustive search over short connected genomes");
    add_common(oracle, o);
    oracle->add_option("--t,--tmax", o.t, "simulation steps (default 3)");
    oracle->add_option("--len", o.len, "genes per genome");
    oracle->add_option("--start", o.starts, "start cell x,y (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    auto* baselines = app.add_subcommand("baselines", "scripted strategies side by side");
    add_common(baselines, o);
    add_highway(baselines, o);
    baselines->add_option("--t,--tmax", o.t, "simulation steps (default 500)");
    baselines->add_option("--values", o.cs, "c values to compare")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    baselines->add_option("--barrier-row", o.barrier_row, "symmetric barrier height above the highway");
    baselines->add_flag("--recursive-tail", o.recursive_tail, "diagonal: spend spare budget next to the highway");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::string path;
            if (args[i] == "--config" && i + 1 < args.size()) {
                path = args[i + 1];
            } else if (args[i].rfind("--config=", 0) == 0) {
                path = args[i].substr(9);
            }
            if (!path.empty()) {
                auto extra = config_args(path);
                auto at = args.begin() + (args.empty() || args[0].rfind("-", 0) == 0 ? 0 : 1);
                args.insert(at, extra.begin(), extra.end());
                break;
            }
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    for (const auto& a : args) {
        o.command_line += (o.command_line.empty() ? "" : " ") + a;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enclose) {
            return cmd_enclose(o);
        }
        if (*highway) {
            return cmd_highway(o);
        }
        if (*sweep) {
            return cmd_sweep(o);
        }
        if (*replay) {
            return cmd_replay(o);
        }
        if (*oracle) {
            return cmd_oracle(o);
        }
        if (*baselines) {
            return cmd_baselines(o);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
