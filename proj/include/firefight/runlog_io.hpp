#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "firefight/error.hpp"
#include "firefight/evolution.hpp"
#include "firefight/fitness.hpp"
#include "firefight/genome_io.hpp"

namespace firefight {

inline nlohmann::json fitness_json(const Fitness& f) {
    if (const auto* e = std::get_if<EnclosureFitness>(&f)) {
        nlohmann::json j{{"burned", e->burning_count}, {"enclosed", e->enclosed}, {"protected", e->protected_count}};
        j["enclose_time"] = e->enclosure_time ? nlohmann::json(*e->enclosure_time) : nlohmann::json(nullptr);
        return j;
    }
    const auto& h = std::get<HighwayProfile>(f);
    return {{"r", h.r}, {"survived", h.survived}, {"d", h.d}};
}

/// Headline number of a fitness: burning count or first contact time.
inline std::int64_t fitness_headline(const Fitness& f) {
    if (const auto* e = std::get_if<EnclosureFitness>(&f)) {
        return e->burning_count;
    }
    return std::get<HighwayProfile>(f).r;
}

inline std::string genome_text(const Genome& g, Cell fire_origin) {
    if (const auto* c = std::get_if<ConnectedGenome>(&g)) {
        return print_genome(*c);
    }
    return print_genome(std::get<CoordinateGenome>(g), fire_origin);
}

/// One JSON object per line: a params record, one record per generation (or
/// accepted mutation), and a closing record. Wall-clock time only appears in
/// the closing record.
inline std::string runlog_jsonl(const RunLog& log, Cell fire_origin = {0, 0}) {
    std::ostringstream os;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : log.params) {
        params[k] = v;
    }
    os << nlohmann::json{{"type", "params"}, {"seed", log.seed}, {"params", params}}.dump() << '\n';
    for (const auto& rec : log.records) {
        nlohmann::json j{{"type", "record"},
                         {"generation", rec.generation},
                         {"best", fitness_json(rec.best)},
                         {"fitness", render_fitness(rec.best)},
                         {"mean", rec.mean}};
        if (rec.best_genome) {
            j["best_genome"] = genome_text(*rec.best_genome, fire_origin);
        }
        os << j.dump() << '\n';
    }
    os << nlohmann::json{{"type", "end"}, {"terminal_reason", log.terminal_reason}, {"wall_seconds", log.wall_seconds}}
              .dump()
       << '\n';
    return os.str();
}

/// `generation,best,mean`
inline std::string summary_csv(const RunLog& log) {
    std::ostringstream os;
    os << "generation,best,mean\n";
    for (const auto& rec : log.records) {
        os << rec.generation << ',' << fitness_headline(rec.best) << ',' << std::setprecision(10) << rec.mean << '\n';
    }
    return os.str();
}

struct SweepRow {
    Rational c;
    bool enclosed = false;
    std::optional<int> enclose_time;
    std::int64_t burned = 0;
    int generations = 0;
    /// Last step that protected a cell; not part of the CSV.
    int last_protect_step = 0;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr std::string_view kSweepHeader = "c,enclosed,enclose_time,burned,generations";

/// Empty enclose_time when the fire was not enclosed.
inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << kSweepHeader << '\n';
    for (const auto& r : rows) {
        os << r.c.to_decimal_string() << ',' << (r.enclosed ? "true" : "false") << ','
           << (r.enclose_time ? std::to_string(*r.enclose_time) : "") << ',' << r.burned << ',' << r.generations
           << '\n';
    }
    return os.str();
}

inline std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
    std::vector<SweepRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
            if (line != kSweepHeader) {
                throw ParseError(lineno, "unexpected sweep header");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) {
            f.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            f.emplace_back();
        }
        if (f.size() != 5) {
            throw ParseError(lineno, "expected 5 fields");
        }
        try {
            SweepRow r;
            r.c = Rational::parse(f[0]);
            if (f[1] != "true" && f[1] != "false") {
                throw ParseError(lineno, "enclosed must be true or false");
            }
            r.enclosed = f[1] == "true";
            if (!f[2].empty()) {
                r.enclose_time = std::stoi(f[2]);
            }
            r.burned = std::stoll(f[3]);
            r.generations = std::stoi(f[4]);
            rows.push_back(r);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return rows;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw IoError("cannot write " + path.string());
    }
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace firefight
