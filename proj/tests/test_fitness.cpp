#include <gtest/gtest.h>

#include "firefight/firefight.hpp"

using namespace firefight;

namespace {

HighwayProfile reached(int r, std::vector<int> d) { return {r, false, std::move(d)}; }

}  // namespace

TEST(EnclosureFitness, FewerBurningWins) {
    EnclosureFitness a{18, true, 8, 16};
    EnclosureFitness b{19, true, 7, 10};
    EXPECT_TRUE(compare_enclosure(a, b) > 0);
    EXPECT_TRUE(compare_enclosure(b, a) < 0);
}

TEST(EnclosureFitness, TieBreaks) {
    EnclosureFitness open{18, false, std::nullopt, 16};
    EnclosureFitness closed{18, true, 9, 16};
    EnclosureFitness faster{18, true, 8, 16};
    EnclosureFitness leaner{18, true, 8, 15};
    EXPECT_TRUE(compare_enclosure(closed, open) > 0);
    EXPECT_TRUE(compare_enclosure(faster, closed) > 0);
    EXPECT_TRUE(compare_enclosure(leaner, faster) > 0);
    EXPECT_TRUE(compare_enclosure(leaner, leaner) == 0);
}

TEST(EnclosureFitness, FromOutcomes) {
    SimConfig config;
    config.t_max = 3;
    IdleSource idle;
    EnclosureFitness f = enclosure_fitness(simulate(idle, config));
    EXPECT_EQ(f.burning_count, 25);
    EXPECT_FALSE(f.enclosed);

    config.t_max = 8;
    auto source = optimal_c2_enclosure();
    EnclosureFitness g = enclosure_fitness(simulate(source, config));
    EXPECT_EQ(g.burning_count, 18);
    EXPECT_TRUE(g.enclosed);
    EXPECT_EQ(g.enclosure_time, 8);
}

TEST(HighwayFitness, LaterContactWins) {
    EXPECT_TRUE(compare_highway(reached(8, {5}), reached(7, {1})) > 0);
}

TEST(HighwayFitness, ProfileBreaksTies) {
    EXPECT_TRUE(compare_highway(reached(7, {1, 9, 11, 13}), reached(7, {1, 9, 12, 13})) > 0);
    EXPECT_TRUE(compare_highway(reached(7, {1, 9, 12}), reached(7, {1, 9, 12})) == 0);
    EXPECT_TRUE(compare_highway(reached(7, {1, 9}), reached(7, {1, 9, 0})) == 0);
}

TEST(HighwayFitness, SurvivorBeatsEveryContact) {
    HighwayProfile survivor{11, true, {0, 0, 50}};
    EXPECT_TRUE(compare_highway(survivor, reached(1000, {0})) > 0);
    EXPECT_TRUE(compare_highway(reached(1000, {0}), survivor) < 0);
}

TEST(HighwayFitness, FromOutcomes) {
    auto run = short_highway_example();
    ScriptedSource source(run.cells);
    HighwayProfile p = highway_fitness(simulate(source, run.config));
    EXPECT_EQ(p.r, 7);
    EXPECT_FALSE(p.survived);
    ASSERT_GE(p.d.size(), 3u);
    EXPECT_EQ((std::vector<int>(p.d.begin(), p.d.begin() + 3)), (std::vector<int>{1, 9, 12}));

    SimConfig touch;
    touch.scenario = Scenario::Highway;
    touch.fire_origin = {0, 1};
    touch.c = Rational(1);
    IdleSource idle;
    EXPECT_EQ(highway_fitness(simulate(idle, touch)).r, 1);

    SimConfig far;
    far.scenario = Scenario::Highway;
    far.fire_origin = {0, 10};
    far.t_max = 4;
    HighwayProfile s = highway_fitness(simulate(idle, far));
    EXPECT_TRUE(s.survived);
    EXPECT_EQ(s.r, 5);
}

TEST(FitnessText, Rendering) {
    EXPECT_EQ(render_fitness(EnclosureFitness{18, true, 8, 16}), "fitness=18");
    EXPECT_EQ(render_fitness(reached(7, {1, 9, 12})), "r=7 d=[1,9,12]");
    EXPECT_TRUE(fitter(Fitness{reached(8, {})}, Fitness{reached(7, {})}));
}
