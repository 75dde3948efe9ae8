// Library tour: scripted enclosure, a short EA run, and a highway baseline.

#include <iostream>

#include "firefight/firefight.hpp"

using namespace firefight;

int main() {
    SimConfig config;
    config.c = Rational::parse("2");
    config.t_max = 10;
    config.frame_every = 4;
    auto optimal = optimal_c2_enclosure();
    Outcome o = simulate(optimal, config);
    std::cout << "scripted: " << render_fitness(enclosure_fitness(o)) << " at step " << o.end_time << "\n";
    std::cout << render_ascii(o.frames.back(), frame_bounds(o.frames)) << "\n";

    EAParams ea;
    ea.c = Rational(2);
    ea.t = 10;
    ea.seed = 3;
    ea.max_generations = 500;
    ea.target_fitness = 18;
    EAResult r = run_ea(ea);
    std::cout << "evolved after " << r.generations << " generations: " << render_fitness(r.best_fitness) << "\n"
              << print_genome(r.best);

    SimConfig hw;
    hw.c = Rational(6, 5);
    hw.t_max = 500;
    hw.scenario = Scenario::Highway;
    hw.fire_origin = {0, 20};
    AsymmetricDiagonal diagonal(hw.c, hw.fire_origin, hw.highway_row, min_diagonal_start(hw.c));
    std::cout << "diagonal at c=1.2: " << render_fitness(highway_fitness(simulate(diagonal, hw))).substr(0, 60)
              << "...\n";
    return 0;
}
