#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "firefight/firefight.hpp"

using namespace firefight;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("firefight_test_" + name);
    fs::remove_all(p);
    return p;
}

Outcome optimal_with_frames(int every) {
    SimConfig config;
    config.c = Rational(2);
    config.t_max = 10;
    config.frame_every = every;
    auto source = optimal_c2_enclosure();
    return simulate(source, config);
}

}  // namespace

TEST(RunLogText, JsonLinesShape) {
    EAParams p;
    p.t = 4;
    p.n = 6;
    p.seed = 17;
    p.max_generations = 3;
    p.jobs = 1;
    EAResult res = run_ea(p);
    std::istringstream in(runlog_jsonl(res.log));
    std::vector<nlohmann::json> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(nlohmann::json::parse(line));
    }
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines.front()["type"], "params");
    EXPECT_EQ(lines.front()["seed"], 17);
    EXPECT_EQ(lines.front()["params"]["n"], "6");
    EXPECT_EQ(lines[1]["type"], "record");
    EXPECT_TRUE(lines[1].contains("best_genome"));
    EXPECT_EQ(lines[1]["fitness"].get<std::string>().rfind("fitness=", 0), 0u);
    EXPECT_EQ(lines.back()["type"], "end");
    EXPECT_EQ(lines.back()["terminal_reason"], "max_generations");
    EXPECT_TRUE(lines.back().contains("wall_seconds"));
}

TEST(RunLogText, SummaryCsv) {
    RunLog log;
    log.records.push_back({0, EnclosureFitness{30, false, std::nullopt, 10}, 41.5, std::nullopt});
    log.records.push_back({1, EnclosureFitness{18, true, 8, 16}, 30.0, std::nullopt});
    EXPECT_EQ(summary_csv(log), "generation,best,mean\n0,30,41.5\n1,18,30\n");
}

TEST(SweepText, RoundTrip) {
    std::vector<SweepRow> rows{{Rational(8, 5), false, std::nullopt, 1842, 5000, 80},
                               {Rational(2), true, 8, 18, 5000, 8}};
    std::string text = sweep_csv(rows);
    EXPECT_EQ(text, "c,enclosed,enclose_time,burned,generations\n1.6,false,,1842,5000\n2,true,8,18,5000\n");
    std::istringstream in(text);
    auto back = parse_sweep_csv(in);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].c, rows[0].c);
    EXPECT_EQ(back[1].enclose_time, 8);
    EXPECT_EQ(back[0].burned, 1842);
}

TEST(SweepText, Malformed) {
    std::istringstream bad_header("c,burned\n");
    EXPECT_THROW(parse_sweep_csv(bad_header), ParseError);
    std::istringstream bad_row("c,enclosed,enclose_time,burned,generations\n2,maybe,,1,1\n");
    try {
        parse_sweep_csv(bad_row);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(Render, AsciiMarksCells) {
    Outcome o = optimal_with_frames(1);
    const Snapshot& last = o.frames.back();
    Box box = frame_bounds(o.frames);
    std::string art = render_ascii(last, box);
    EXPECT_EQ(std::count(art.begin(), art.end(), '#'), 18);
    EXPECT_EQ(std::count(art.begin(), art.end(), 'o'), 16);
}

TEST(Render, HighwayRow) {
    auto run = short_highway_example();
    run.config.frame_every = 1;
    ScriptedSource s(run.cells);
    Outcome o = simulate(s, run.config);
    std::string art = render_ascii(o.frames.back(), frame_bounds(o.frames, 1, 0), 0);
    EXPECT_NE(art.find('='), std::string::npos);
}

TEST(Render, SvgIsWellFormed) {
    Outcome o = optimal_with_frames(4);
    std::string svg = render_svg(o.frames.back(), frame_bounds(o.frames));
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Render, WritesFramesDeterministically) {
    Outcome o = optimal_with_frames(2);
    fs::path a = temp_dir("frames_a");
    fs::path b = temp_dir("frames_b");
    auto files = write_frames(o.frames, a, RenderFormat::Svg, std::nullopt);
    write_frames(o.frames, b, RenderFormat::Svg, std::nullopt);
    ASSERT_EQ(files.size(), o.frames.size());
    for (const auto& f : files) {
        EXPECT_EQ(read_text(f), read_text(b / f.filename()));
    }
    EXPECT_EQ(frame_filename(8, RenderFormat::Ascii), "frame_0008.txt");
    EXPECT_TRUE(write_frames(o.frames, a, RenderFormat::None, std::nullopt).empty());
}

TEST(Render, ParseFormat) {
    EXPECT_EQ(parse_render_format("svg"), RenderFormat::Svg);
    EXPECT_FALSE(parse_render_format("png"));
}

TEST(Files, WriteFailureIsIoError) {
    EXPECT_THROW(write_text("/proc/firefight/nope.txt", "x"), IoError);
    EXPECT_THROW(read_text("/nonexistent/file"), IoError);
}
