#include <gtest/gtest.h>

#include "firefight/firefight.hpp"

using namespace firefight;

namespace {

SimConfig highway(Rational c, int d, int t_max = 500) {
    SimConfig config;
    config.c = c;
    config.t_max = t_max;
    config.scenario = Scenario::Highway;
    config.fire_origin = {0, d};
    config.highway_row = 0;
    return config;
}

int symmetric_r(Rational c, int d, int row = 1) {
    SimConfig config = highway(c, d);
    SymmetricAlternating s(config.fire_origin, row);
    return highway_fitness(simulate(s, config)).r;
}

HighwayProfile diagonal(Rational c, int d, std::int64_t n, int t_max = 500) {
    SimConfig config = highway(c, d, t_max);
    AsymmetricDiagonal s(c, config.fire_origin, config.highway_row, n);
    return highway_fitness(simulate(s, config));
}

}  // namespace

TEST(MinDiagonalStart, Values) {
    EXPECT_EQ(min_diagonal_start(Rational(6, 5)), 5);
    EXPECT_EQ(min_diagonal_start(Rational(3, 2)), 2);
    EXPECT_EQ(min_diagonal_start(Rational(11, 10)), 10);
    EXPECT_EQ(min_diagonal_start(Rational(2)), 1);
    EXPECT_THROW(min_diagonal_start(Rational(1)), BudgetTooSmall);
    EXPECT_THROW(min_diagonal_start(Rational(9, 10)), BudgetTooSmall);
}

TEST(Symmetric, ContactTimes) {
    EXPECT_NEAR(symmetric_r(Rational(7, 5), 20), 61, 2);
    EXPECT_NEAR(symmetric_r(Rational(13, 10), 20), 54, 2);
    EXPECT_NEAR(symmetric_r(Rational(6, 5), 20), 48, 2);
    EXPECT_NEAR(symmetric_r(Rational(11, 10), 20), 43, 2);
}

TEST(Symmetric, FireNextToHighway) {
    SimConfig config = highway(Rational(1), 1);
    config.highway_protectable = false;
    SymmetricAlternating s(config.fire_origin, 0);
    EXPECT_EQ(highway_fitness(simulate(s, config)).r, 1);

    SimConfig open = highway(Rational(1), 1);
    SymmetricAlternating t(open.fire_origin, 0);
    EXPECT_EQ(highway_fitness(simulate(t, open)).r, 2);
}

TEST(Symmetric, BarrierStaysOnItsRowAndAlternates) {
    SimConfig config = highway(Rational(6, 5), 20, 30);
    SymmetricAlternating s(config.fire_origin, 1);
    Outcome o = simulate(s, config);
    auto cells = schedule_of(o.final_state).entries;
    ASSERT_GE(cells.size(), 5u);
    EXPECT_EQ(cells[0].first, (Cell{0, 1}));
    EXPECT_EQ(cells[1].first, (Cell{1, 1}));
    EXPECT_EQ(cells[2].first, (Cell{-1, 1}));
    for (const auto& [c, t] : cells) {
        EXPECT_EQ(c.y, 1);
    }
}

TEST(Diagonal, StartTooClose) {
    SimConfig config = highway(Rational(6, 5), 20);
    EXPECT_THROW(AsymmetricDiagonal(Rational(6, 5), config.fire_origin, 0, 4), StartTooClose);
    EXPECT_THROW(AsymmetricDiagonal(Rational(6, 5), {0, 5}, 0, 5), ConfigInvalid);
}

TEST(Diagonal, BeatsSymmetricAtOnePointTwo) {
    HighwayProfile p = diagonal(Rational(6, 5), 20, 5);
    EXPECT_FALSE(p.survived);
    EXPECT_GE(p.r, 85);
    EXPECT_GT(p.r, symmetric_r(Rational(6, 5), 20));
}

TEST(Diagonal, HoldsForeverAtOnePointFive) {
    HighwayProfile p = diagonal(Rational(3, 2), 20, 2, 500);
    EXPECT_TRUE(p.survived);
}

TEST(Diagonal, PhaseOneBuildsTheDiagonal) {
    SimConfig config = highway(Rational(6, 5), 20, 12);
    AsymmetricDiagonal s(config.c, config.fire_origin, 0, 5);
    Outcome o = simulate(s, config);
    EXPECT_TRUE(s.phase_one_done());
    for (int k = 0; k <= 5; ++k) {
        EXPECT_TRUE(o.final_state.is_protected({-k, 20 - 5 + k})) << k;
    }
}

TEST(OptimalScript, EnclosesAtTwoButNotBelow) {
    SimConfig config;
    config.c = Rational(2);
    config.t_max = 10;
    auto a = optimal_c2_enclosure();
    Outcome o = simulate(a, config);
    EXPECT_EQ(o.reason, EndReason::Enclosed);
    EXPECT_EQ(o.end_time, 8);
    EXPECT_EQ(o.burning_count, 18);
    EXPECT_EQ(o.protected_count, 16);

    config.c = Rational(19, 10);
    auto b = optimal_c2_enclosure();
    Outcome low = simulate(b, config);
    EXPECT_NE(low.reason, EndReason::Enclosed);
    EXPECT_GT(low.burning_count, 18);
}

TEST(Oracle, FullRingAtFour) {
    OracleResult r = brute_force_best(Rational(4), 1, 4, {{0, 1}}, 1);
    EXPECT_EQ(r.fitness.burning_count, 1);
    EXPECT_TRUE(r.fitness.enclosed);
    EXPECT_EQ(r.evaluated, 65536u);
}

TEST(Oracle, GuardRejectsLargeSpaces) {
    EXPECT_THROW(brute_force_best(Rational(2), 3, 7, {{0, 1}}, 1), SearchSpaceTooLarge);
    SimConfig config;
    EXPECT_THROW(brute_force_best(config, 3, {{0, 1}}, RepairOrientation::FrontCounterClockwise, 1, 100),
                 SearchSpaceTooLarge);
}

TEST(Oracle, NoEnumeratedGenomeBeatsTheOracle) {
    SimConfig config;
    config.c = Rational(2);
    config.t_max = 2;
    OracleResult r = brute_force_best(config, 3, {{0, 1}}, RepairOrientation::FrontCounterClockwise, 1);
    EXPECT_EQ(r.evaluated, 4096u);
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        ConnectedGenome g = random_connected(3, {0, 1}, rng);
        EXPECT_TRUE(compare_enclosure(enclosure_fitness(evaluate_connected(g, config)), r.fitness) <= 0);
    }
    EXPECT_EQ(enclosure_fitness(evaluate_connected(r.best, config)), r.fitness);
}

TEST(Oracle, ThreadCountDoesNotChangeResult) {
    SimConfig config;
    config.c = Rational(2);
    config.t_max = 3;
    auto a = brute_force_best(config, 3, {{0, 1}, {1, 0}}, RepairOrientation::FrontCounterClockwise, 1);
    auto b = brute_force_best(config, 3, {{0, 1}, {1, 0}}, RepairOrientation::FrontCounterClockwise, 3);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.enclosing, b.enclosing);
}

TEST(ScriptedExamples, ShortHighwayGameUsesPreprotection) {
    auto run = short_highway_example();
    ScriptedSource s(run.cells);
    Outcome o = simulate(s, run.config);
    EXPECT_EQ(o.final_state.protection_time({-4, 1}), 0);
    EXPECT_EQ(o.protections_per_step, (std::vector<int>{1, 1, 1, 1, 2, 1, 1}));
}
