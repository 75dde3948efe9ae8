#include <gtest/gtest.h>

#include "firefight/firefight.hpp"

using namespace firefight;

namespace {

FireState fresh(Rational c = Rational(2), std::int64_t initial = 0) {
    FireState s(BudgetAccount{c, initial, 0, std::nullopt});
    s.ignite({0, 0});
    return s;
}

std::vector<std::int64_t> capacities(const BudgetAccount& a, int steps) {
    std::vector<std::int64_t> out;
    for (int t = 1; t <= steps; ++t) {
        out.push_back(a.capacity(t) - a.capacity(t - 1));
    }
    return out;
}

}  // namespace

TEST(Rational, ParsesDecimalsAndFractions) {
    EXPECT_EQ(Rational::parse("2.7"), Rational(27, 10));
    EXPECT_EQ(Rational::parse("6/5"), Rational(6, 5));
    EXPECT_EQ(Rational::parse("2"), Rational(2));
    EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
    EXPECT_THROW(Rational::parse("1.2.3"), ConfigInvalid);
    EXPECT_THROW(Rational::parse("abc"), ConfigInvalid);
    EXPECT_THROW(Rational::parse("1/0"), ConfigInvalid);
}

TEST(Rational, FloorTimesIsExact) {
    EXPECT_EQ(Rational(27, 10).floor_times(2), 5);
    EXPECT_EQ(Rational(6, 5).floor_times(5), 6);
    EXPECT_EQ(Rational(17, 10).floor_times(10), 17);
    EXPECT_EQ(Rational(1, 3).floor_times(3), 1);
    EXPECT_EQ(Rational(7, 5).to_decimal_string(), "1.4");
    EXPECT_EQ(Rational(1, 3).to_string(), "1/3");
}

TEST(Budget, AvailableExamples) {
    EXPECT_EQ(budget_available({Rational(27, 10), 0, 2, std::nullopt}, 2), 3);
    EXPECT_EQ(budget_available({Rational(6, 5), 1, 5, std::nullopt}, 5), 2);
    EXPECT_EQ(budget_available({Rational(2), 0, 0, std::nullopt}, 1), 2);
}

TEST(Budget, PerStepCapacities) {
    EXPECT_EQ(capacities({Rational(27, 10), 0, 0, std::nullopt}, 4), (std::vector<std::int64_t>{2, 3, 3, 2}));
    EXPECT_EQ(capacities({Rational(6, 5), 1, 0, std::nullopt}, 5), (std::vector<std::int64_t>{1, 1, 1, 1, 2}));
}

TEST(Budget, OpeningBalanceReplacesFirstIncome) {
    BudgetAccount a{Rational(17, 10), 0, 0, Rational(2)};
    EXPECT_EQ(a.capacity(1), 2);
    EXPECT_EQ(a.capacity(2), 3);
    EXPECT_EQ(a.capacity(3), 5);
    EXPECT_EQ(a.capacity(11), 19);
}

TEST(FireState, ProtectExamples) {
    FireState s(BudgetAccount{Rational(2), 0, 0, std::nullopt});
    EXPECT_EQ(s.protect({0, 1}), ProtectStatus::Ok);
    EXPECT_TRUE(s.is_protected({0, 1}));
    EXPECT_EQ(s.budget().spent, 1);
    EXPECT_EQ(s.protect({0, 1}), ProtectStatus::CellAlreadyProtected);

    FireState b = fresh();
    EXPECT_EQ(b.protect({0, 0}), ProtectStatus::CellBurning);
}

TEST(FireState, ProtectStopsWhenBudgetRunsOut) {
    FireState s = fresh(Rational(3, 2));
    EXPECT_EQ(s.protect({5, 5}), ProtectStatus::Ok);
    EXPECT_EQ(s.protect({6, 5}), ProtectStatus::NoBudget);
    s.spread();
    EXPECT_EQ(s.protect({6, 5}), ProtectStatus::Ok);
    EXPECT_EQ(s.protect({7, 5}), ProtectStatus::Ok);
    EXPECT_EQ(s.protect({8, 5}), ProtectStatus::NoBudget);
}

TEST(FireState, FloorRowIsOffLimits) {
    FireState s(BudgetAccount{Rational(2), 0, 0, std::nullopt}, 0);
    EXPECT_EQ(s.protect({0, 0}), ProtectStatus::OffLimits);
    EXPECT_EQ(s.protect({0, 1}), ProtectStatus::Ok);
}

TEST(FireState, SpreadFromSingleCell) {
    FireState s = fresh();
    s.spread();
    EXPECT_EQ(s.burning_count(), 5);
    for (Cell c : {Cell{0, 0}, Cell{0, 1}, Cell{0, -1}, Cell{1, 0}, Cell{-1, 0}}) {
        EXPECT_TRUE(s.is_burning(c));
    }
    EXPECT_EQ(s.ignition_time({1, 0}), 1);
    EXPECT_EQ(s.ignition_time({0, 0}), 0);
}

TEST(FireState, RingedCellDoesNotSpread) {
    FireState s = fresh(Rational(4));
    for (Cell c : {Cell{0, 1}, Cell{0, -1}, Cell{1, 0}, Cell{-1, 0}}) {
        ASSERT_EQ(s.protect(c), ProtectStatus::Ok);
    }
    EXPECT_TRUE(s.is_enclosed());
    EXPECT_EQ(s.spread(), 0u);
    EXPECT_EQ(s.burning_count(), 1);
}

TEST(FireState, LoneCellIsNotEnclosed) { EXPECT_FALSE(fresh().is_enclosed()); }

TEST(FireState, HighwayReached) {
    FireState s(BudgetAccount{Rational(1), 0, 0, std::nullopt});
    s.ignite({0, 20});
    EXPECT_FALSE(s.highway_reached(0));
    FireState t(BudgetAccount{Rational(1), 0, 0, std::nullopt});
    t.ignite({3, 0});
    EXPECT_TRUE(t.highway_reached(0));
}

TEST(FireState, DistanceProfile) {
    EXPECT_EQ(fresh().distance_profile(0), std::vector<int>{1});
    FireState s(BudgetAccount{Rational(1), 0, 0, std::nullopt});
    s.ignite({0, 3});
    s.ignite({1, 3});
    EXPECT_EQ(s.distance_profile(0), (std::vector<int>{0, 0, 0, 2}));
}

TEST(Simulate, RingAtFourEnclosesImmediately) {
    SimConfig config;
    config.c = Rational(4);
    config.t_max = 5;
    ScriptedSource ring(std::vector<Cell>{{0, 1}, {1, 0}, {0, -1}, {-1, 0}});
    Outcome o = simulate(ring, config);
    EXPECT_EQ(o.reason, EndReason::Enclosed);
    EXPECT_EQ(o.end_time, 1);
    EXPECT_EQ(o.burning_count, 1);
}

TEST(Simulate, OptimalAtTwo) {
    SimConfig config;
    config.c = Rational(2);
    config.t_max = 10;
    auto source = optimal_c2_enclosure();
    Outcome o = simulate(source, config);
    EXPECT_EQ(o.reason, EndReason::Enclosed);
    EXPECT_EQ(o.end_time, 8);
    EXPECT_EQ(o.burning_count, 18);
    EXPECT_TRUE(o.final_state.is_enclosed());
}

TEST(Simulate, SmallWalkthroughAtTwoPointSeven) {
    auto run = small_enclosure_example();
    ScriptedSource source(run.cells);
    Outcome o = simulate(source, run.config);
    EXPECT_EQ(o.reason, EndReason::Enclosed);
    EXPECT_EQ(o.end_time, 4);
    EXPECT_EQ(o.protections_per_step, (std::vector<int>{2, 3, 3, 2}));
    FireState after = o.final_state;
    auto before = after.burning_count();
    after.spread();
    EXPECT_EQ(after.burning_count(), before);
}

TEST(Simulate, SmallWalkthroughFitnessAfterTwoSpreads) {
    auto run = small_enclosure_example();
    run.config.t_max = 2;
    ScriptedSource source(run.cells);
    EXPECT_EQ(enclosure_fitness(simulate(source, run.config)).burning_count, 5);
}

TEST(Simulate, NoProtectionDiamond) {
    SimConfig config;
    config.t_max = 3;
    IdleSource idle;
    Outcome o = simulate(idle, config);
    EXPECT_EQ(o.burning_count, 25);
    EXPECT_EQ(o.end_time, 3);
    EXPECT_NE(o.reason, EndReason::Enclosed);
}

TEST(Simulate, ShortHighwayGame) {
    auto run = short_highway_example();
    ScriptedSource source(run.cells);
    Outcome o = simulate(source, run.config);
    EXPECT_EQ(o.reason, EndReason::HighwayReached);
    EXPECT_EQ(o.end_time, 7);
    EXPECT_TRUE(o.final_state.highway_reached(0));
    ASSERT_GE(o.distance_profile.size(), 3u);
    EXPECT_EQ(o.distance_profile[0], 1);
    EXPECT_EQ(o.distance_profile[1], 9);
    EXPECT_EQ(o.distance_profile[2], 12);
}

TEST(Simulate, InvalidConfigsThrow) {
    SimConfig config;
    config.t_max = 0;
    IdleSource idle;
    EXPECT_THROW(simulate(idle, config), ConfigInvalid);
    config.t_max = 3;
    config.scenario = Scenario::Highway;
    config.fire_origin = {0, 0};
    EXPECT_THROW(simulate(idle, config), ConfigInvalid);
    SimConfig pre;
    pre.initial_protected = {{1, 1}};
    EXPECT_THROW(simulate(idle, pre), ConfigInvalid);
}

TEST(Simulate, PreprotectedCellsUseInitialCredit) {
    SimConfig config;
    config.c = Rational(1);
    config.initial_budget = 1;
    config.initial_protected = {{0, 1}};
    config.t_max = 1;
    IdleSource idle;
    Outcome o = simulate(idle, config);
    EXPECT_EQ(o.final_state.protection_time({0, 1}), 0);
    EXPECT_EQ(o.burning_count, 4);
}

TEST(Simulate, ScheduleReplayMatches) {
    SimConfig config;
    config.c = Rational(2);
    config.t_max = 10;
    auto source = optimal_c2_enclosure();
    Outcome first = simulate(source, config);
    ScriptedSource again(schedule_of(first.final_state));
    Outcome second = simulate(again, config);
    EXPECT_EQ(schedule_of(second.final_state), schedule_of(first.final_state));
    EXPECT_EQ(second.burning_count, 18);
}

TEST(Simulate, FramesFollowInterval) {
    SimConfig config;
    config.c = Rational(2);
    config.t_max = 10;
    config.frame_every = 3;
    auto source = optimal_c2_enclosure();
    Outcome o = simulate(source, config);
    ASSERT_FALSE(o.frames.empty());
    EXPECT_EQ(o.frames.front().step, 0);
    EXPECT_EQ(o.frames.back().step, 8);
    for (std::size_t i = 1; i + 1 < o.frames.size(); ++i) {
        EXPECT_EQ(o.frames[i].step % 3, 0);
    }
}
