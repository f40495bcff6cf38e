// Seeded search for simple irreducible curves that violate the tropical
// Harnack condition: integer coefficients on d * Delta_2 are drawn until the
// loop oracle finds a loop whose Gamma set has a nonzero weighted sum mod 2.
// Prints the first hit as polynomial JSON together with the offending loop.

#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "tropicurve/curve.hpp"
#include "tropicurve/harnack.hpp"
#include "tropicurve/json_io.hpp"

using namespace tropicurve;

int main(int argc, char** argv) {
  CLI::App app{"search for a non-Harnack simple curve"};
  int degree = 4;
  int range = 20;
  int trials = 100000;
  std::uint64_t seed = 0;
  app.add_option("-d,--degree", degree, "support d * Delta_2");
  app.add_option("--range", range, "coefficients drawn from [-range, 0]");
  app.add_option("--trials", trials, "give up after this many draws");
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coefficient(-range, 0);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Term> terms;
    for (int x = 0; x <= degree; ++x) {
      for (int y = 0; x + y <= degree; ++y) terms.push_back({{x, y}, Rational(coefficient(rng))});
    }
    const TropicalPolynomial f(terms);
    const auto curve = build_curve(f);
    if (!is_simple(curve) || !is_irreducible(curve)) continue;
    const auto graph = normalize(curve);
    for (const auto& loop : enumerate_loops(graph)) {
      if (loop_condition(graph, loop)) continue;
      Json arcs = Json::array();
      for (const auto& oa : loop.arcs) arcs.push_back({{"arc", oa.arc}, {"forward", oa.forward}});
      Json out = to_json(f);
      out["search"] = {{"seed", seed}, {"trial", trial}, {"degree", degree}, {"range", range}};
      out["violating_loop"] = arcs;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  }
  std::cerr << "no violation found\n";
  return 1;
}
