// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rewire/correlation.hpp"
#include "rewire/strategies.hpp"

namespace rewire {
namespace {

using testing::edge;
using testing::g8;

constexpr Method kAllMethods[] = {Method::ga, Method::eda, Method::ta, Method::pea, Method::ra, Method::pa};

StrategyConfig budget(std::size_t k, std::uint64_t seed = 1) {
  StrategyConfig cfg;
  cfg.budget = Budget::count(k);
  cfg.seed = seed;
  return cfg;
}

RewireCandidate hub_join(const Graph& g) {
  RewireCandidate c;
  c.source_a = edge(g, "h1", "l2");
  c.source_b = edge(g, "h2", "l5");
  c.created_a = edge(g, "h1", "h2");
  c.created_b = edge(g, "l2", "l5");
  c.value = 4;
  return c;
}

// Replays a plan step by step from g, checking applicability and the degree
// sequence after each step; returns the final graph.
Graph replay(const Graph& g, const RewirePlan& plan) {
  Graph h = g;
  const auto degrees = degree_sequence(g);
  for (const auto& step : plan.steps) {
    EXPECT_TRUE(can_rewire(h, step));
    apply_rewiring_in_place(h, step);
    EXPECT_EQ(degree_sequence(h), degrees);
  }
  return h;
}

bool joins_high_and_low(const Graph& g, const RewireCandidate& c) {
  using Pair = std::pair<std::size_t, std::size_t>;
  std::vector<std::size_t> d{g.degree(c.source_a.u), g.degree(c.source_a.v), g.degree(c.source_b.u),
                             g.degree(c.source_b.v)};
  std::sort(d.rbegin(), d.rend());
  auto pair_degrees = [&](const EdgeRef& e) {
    const std::size_t a = g.degree(e.u), b = g.degree(e.v);
    return Pair{std::min(a, b), std::max(a, b)};
  };
  const Pair x = pair_degrees(c.created_a), y = pair_degrees(c.created_b);
  return std::max(x, y) == Pair{d[1], d[0]} && std::min(x, y) == Pair{d[3], d[2]};
}

TEST(Ga, G8SingleStep) {
  const Graph g = g8();
  const auto plan = run_ga(g, budget(1));
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0], hub_join(g));
  EXPECT_EQ(plan.delta_s, 4);
  EXPECT_NEAR(assortativity(plan.final_graph), -1.0 / 34.0, 1e-12);
  EXPECT_NEAR(assortativity(g) + plan.delta_r, -1.0 / 34.0, 1e-12);
}

TEST(Ga, G8TwoSteps) {
  const Graph g = g8();
  const auto plan = run_ga(g, budget(2));
  ASSERT_EQ(plan.steps.size(), 2u);
  EXPECT_EQ(plan.delta_s, 5);
  EXPECT_EQ(plan.steps[1].value, 1);
  EXPECT_EQ(plan.steps[1].source_b, edge(g, "l1", "l4"));
  EXPECT_EQ(run_ga(g, budget(10)).steps.size(), 2u);  // EP exhausts before budget
}

TEST(Ga, DeltaSMonotoneInBudget) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = testing::random_graph(seed, 30);
    std::int64_t prev = 0;
    for (std::size_t k = 0; k <= 12; ++k) {
      const auto plan = run_ga(g, budget(k));
      EXPECT_GE(plan.delta_s, prev);
      EXPECT_TRUE(admissible(plan.steps));
      prev = plan.delta_s;
    }
  }
}

TEST(Eda, G8SingleStep) {
  const Graph g = g8();
  const auto plan = run_eda(g, budget(1));
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0], hub_join(g));
  EXPECT_EQ(plan.delta_s, 4);
}

TEST(Eda, StarHasNoDisjointPair) { EXPECT_TRUE(run_eda(testing::star(3), budget(3)).steps.empty()); }

TEST(Ta, G8SingleStep) {
  const Graph g = g8();
  const auto plan = run_ta(g, budget(1));
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0], hub_join(g));
}

TEST(Ta, StarIsEmpty) { EXPECT_TRUE(run_ta(testing::star(3), budget(3)).steps.empty()); }

TEST(Ta, EveryStepJoinsHubToLargerNode) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = testing::random_graph(seed, 40);
    const auto plan = run_ta(g, budget(20));
    for (const auto& s : plan.steps) EXPECT_GT(s.value, 0);
  }
}

TEST(Pea, G8StepsPairHighWithHigh) {
  const Graph g = g8();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto plan = run_pea(g, budget(1, seed));
    Graph h = g;
    for (const auto& s : plan.steps) {
      EXPECT_TRUE(joins_high_and_low(h, s));
      apply_rewiring_in_place(h, s);
    }
  }
}

TEST(Pea, RegularGraphHasDegenerateWeights) {
  EXPECT_THROW(run_pea(testing::cycle(6), budget(1)), degenerate_weights);
}

TEST(Ra, G8StepsPairHighWithHigh) {
  const Graph g = g8();
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (const auto& s : run_ra(g, budget(2, seed)).steps) EXPECT_TRUE(joins_high_and_low(g, s));
}

TEST(Ra, TriangleIsEmptyAndTruncated) {
  const auto plan = run_ra(parse_edge_list("1 2\n2 3\n3 1\n"), budget(1));
  EXPECT_TRUE(plan.steps.empty());
  EXPECT_TRUE(plan.truncated);
}

TEST(Pa, G8StepsApplicable) {
  const Graph g = g8();
  for (std::uint64_t seed = 0; seed < 20; ++seed) replay(g, run_pa(g, budget(2, seed)));
}

TEST(Pa, SingleEdgeIsEmpty) { EXPECT_TRUE(run_pa(parse_edge_list("a b\n"), budget(1)).steps.empty()); }

TEST(AllStrategies, CoincideOnG8) {
  const Graph g = g8();
  for (Method m : {Method::ga, Method::eda, Method::ta}) EXPECT_EQ(run_strategy(m, g, budget(1)).delta_s, 4);
}

TEST(AllStrategies, PreserveDegreesAndDeltaRIdentity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = testing::random_graph(seed, 30);
    const double r0 = assortativity(g);
    const double denom = assortativity_denominator(g);
    const auto m = static_cast<double>(g.edge_count());
    for (Method method : kAllMethods) {
      const auto plan = run_strategy(method, g, budget(6, seed));
      const Graph h = replay(g, plan);
      EXPECT_EQ(h, plan.final_graph);
      EXPECT_LE(plan.steps.size(), 6u);
      std::int64_t sum = 0;
      for (const auto& s : plan.steps) sum += s.value;
      EXPECT_EQ(plan.delta_s, sum);
      EXPECT_EQ(s_metric(h) - s_metric(g), plan.delta_s);
      EXPECT_NEAR(assortativity(h) - r0, static_cast<double>(plan.delta_s) / (m * denom), 1e-12);
      EXPECT_NEAR(plan.delta_r, assortativity(h) - r0, 1e-12);
      if (method == Method::ga) {
        EXPECT_TRUE(admissible(plan.steps));
      }
    }
  }
}

TEST(AllStrategies, SeededRunsAreDeterministic) {
  const Graph g = testing::random_graph(4, 60);
  for (Method m : kAllMethods) {
    const auto a = run_strategy(m, g, budget(8, 99));
    const auto b = run_strategy(m, g, budget(8, 99));
    EXPECT_EQ(a.steps, b.steps) << method_name(m);
    EXPECT_EQ(a.final_graph, b.final_graph);
  }
}

TEST(Budget, FractionResolvesByFloor) {
  EXPECT_EQ(Budget::fraction(0.05).resolve(5156), 257u);
  EXPECT_EQ(Budget::fraction(0.05).resolve(6594), 329u);
  EXPECT_EQ(Budget::fraction(0.1).resolve(100), 10u);
  EXPECT_EQ(Budget::fraction(0.001).resolve(10), 1u);
  EXPECT_EQ(Budget::count(7).resolve(3), 7u);
  EXPECT_THROW(Budget::fraction(0.0), error);
  EXPECT_THROW(Budget::fraction(1.5), error);
}

TEST(Method, NamesRoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_FALSE(parse_method("exact"));
}

}  // namespace
}  // namespace rewire
