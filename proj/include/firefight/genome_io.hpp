#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <variant>

#include "firefight/error.hpp"
#include "firefight/genome.hpp"
#include "firefight/simulate.hpp"

// Genome text format, one genome per file:
//
//   start <x> <y>
//   <DIR> F|B            (connected genome, one gene per line)
//   kind coordinate      (coordinate genome marker, line 2)
//   cell <x> <y>         (coordinate genome, one cell per line)
//   kind scripted        (fixed protection list, line 2)
//   cell <x> <y> <step>  (scripted: protected in file order, not before step)
//
// DIR is one of N NE E SE S SW W NW. Blank lines and lines starting with '#'
// are ignored. For coordinate genomes the start line holds the fire origin
// used to order the cells; for scripted lists it is the fire origin too, and
// step 0 cells are placed before the first step.

namespace firefight {

using GenomeText = std::variant<ConnectedGenome, CoordinateGenome, ProtectionSchedule>;

struct GenomeFile {
    Cell start;
    GenomeText genome;

    friend bool operator==(const GenomeFile&, const GenomeFile&) = default;
};

inline std::string print_genome(const ConnectedGenome& g) {
    std::ostringstream os;
    os << "start " << g.start.x << ' ' << g.start.y << '\n';
    for (const Gene& gene : g.sequence) {
        os << to_string(gene.dir) << ' ' << (gene.end == ChainEnd::Front ? 'F' : 'B') << '\n';
    }
    return os.str();
}

inline std::string print_genome(const CoordinateGenome& g, Cell fire_origin) {
    std::ostringstream os;
    os << "start " << fire_origin.x << ' ' << fire_origin.y << '\n';
    os << "kind coordinate\n";
    for (Cell c : g.cells) {
        os << "cell " << c.x << ' ' << c.y << '\n';
    }
    return os.str();
}

inline std::string print_genome(const ProtectionSchedule& s, Cell fire_origin) {
    std::ostringstream os;
    os << "start " << fire_origin.x << ' ' << fire_origin.y << '\n';
    os << "kind scripted\n";
    for (const auto& [c, t] : s.entries) {
        os << "cell " << c.x << ' ' << c.y << ' ' << t << '\n';
    }
    return os.str();
}

inline std::string print_genome(const GenomeFile& file) {
    if (const auto* connected = std::get_if<ConnectedGenome>(&file.genome)) {
        return print_genome(*connected);
    }
    if (const auto* coords = std::get_if<CoordinateGenome>(&file.genome)) {
        return print_genome(*coords, file.start);
    }
    return print_genome(std::get<ProtectionSchedule>(file.genome), file.start);
}

inline GenomeFile parse_genome(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_start = false;
    bool coordinate = false;
    bool scripted = false;
    bool have_body = false;
    Cell start;
    ConnectedGenome connected;
    CoordinateGenome coords;
    ProtectionSchedule schedule;

    auto read_int = [&](std::istringstream& ls, const char* what) {
        long long v = 0;
        if (!(ls >> v) || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
            throw ParseError(lineno, std::string("expected integer ") + what);
        }
        return static_cast<int>(v);
    };
    auto expect_end = [&](std::istringstream& ls) {
        std::string extra;
        if (ls >> extra) {
            throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head.front() == '#') {
            continue;
        }
        if (!have_start) {
            if (head != "start") {
                throw ParseError(lineno, "expected 'start x y'");
            }
            start.x = read_int(ls, "x");
            start.y = read_int(ls, "y");
            expect_end(ls);
            have_start = true;
            continue;
        }
        if (head == "kind") {
            std::string kind;
            ls >> kind;
            expect_end(ls);
            if (have_body || coordinate || scripted) {
                throw ParseError(lineno, "'kind' must directly follow the start line");
            }
            if (kind == "coordinate") {
                coordinate = true;
            } else if (kind == "scripted") {
                scripted = true;
            } else if (kind != "connected") {
                throw ParseError(lineno, "unknown genome kind '" + kind + "'");
            }
            continue;
        }
        if (head == "cell") {
            if (have_body && !coordinate && !scripted) {
                throw ParseError(lineno, "cell line inside a connected genome");
            }
            have_body = true;
            int x = read_int(ls, "x");
            int y = read_int(ls, "y");
            Cell c{x, y};
            if (scripted) {
                int step = read_int(ls, "step");
                expect_end(ls);
                if (step < 0) {
                    throw ParseError(lineno, "step must be non-negative");
                }
                if (!schedule.entries.empty() && step < schedule.entries.back().second) {
                    throw ParseError(lineno, "steps must not decrease");
                }
                for (const auto& e : schedule.entries) {
                    if (e.first == c) {
                        throw ParseError(lineno, "duplicate cell");
                    }
                }
                schedule.entries.emplace_back(c, step);
                continue;
            }
            coordinate = true;
            expect_end(ls);
            if (std::find(coords.cells.begin(), coords.cells.end(), c) != coords.cells.end()) {
                throw ParseError(lineno, "duplicate cell");
            }
            coords.cells.push_back(c);
            continue;
        }
        auto dir = parse_direction(head);
        if (!dir) {
            throw ParseError(lineno, "unknown direction '" + head + "'");
        }
        if (coordinate || scripted) {
            throw ParseError(lineno, "gene line inside a cell list");
        }
        std::string end;
        if (!(ls >> end) || (end != "F" && end != "B")) {
            throw ParseError(lineno, "expected F or B after direction");
        }
        expect_end(ls);
        have_body = true;
        connected.sequence.push_back({*dir, end == "F" ? ChainEnd::Front : ChainEnd::Back});
    }
    if (!have_start) {
        throw ParseError(lineno + 1, "missing 'start x y' line");
    }
    if (scripted) {
        return {start, schedule};
    }
    if (coordinate) {
        return {start, coords};
    }
    connected.start = start;
    return {start, connected};
}

inline GenomeFile parse_genome(const std::string& text) {
    std::istringstream in(text);
    return parse_genome(in);
}

inline GenomeFile load_genome(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open genome file " + path);
    }
    return parse_genome(in);
}

inline void save_genome(const std::string& path, const GenomeFile& file) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write genome file " + path);
    }
    out << print_genome(file);
}

}  // namespace firefight
