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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rewire/correlation.hpp"
#include "rewire/random.hpp"

namespace rewire {
namespace {

using testing::edge;
using testing::g8;

TEST(Assortativity, HandComputedValues) {
  EXPECT_NEAR(assortativity(testing::star(3)), -1.0, 1e-12);
  EXPECT_NEAR(assortativity(testing::path(4)), -0.5, 1e-12);
  EXPECT_NEAR(assortativity(g8()), -29.0 / 34.0, 1e-12);
}

TEST(Assortativity, RegularGraphIsUndefined) {
  EXPECT_THROW(assortativity(testing::cycle(6)), undefined_metric);
  EXPECT_THROW(assortativity(testing::complete(4)), undefined_metric);
  EXPECT_THROW(assortativity(Graph(3)), undefined_metric);
}

TEST(Assortativity, MatchesFloatingPointOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::random_graph(seed, 40);
    EXPECT_NEAR(assortativity(g), testing::assortativity_oracle(g), 1e-12) << seed;
  }
}

TEST(Assortativity, DenominatorOfG8) {
  EXPECT_NEAR(assortativity_denominator(g8()), 34.0 / 49.0, 1e-15);
}

TEST(SMetric, Values) {
  EXPECT_EQ(s_metric(parse_edge_list("1 2\n2 3\n3 1\n")), 12);
  EXPECT_EQ(s_metric(g8()), 28);
}

TEST(CandidateValue, FigureDegrees) {
  EXPECT_EQ(swap_gain(4, 1, 3, 2, Orientation::cross), 4);
  EXPECT_EQ(swap_gain(4, 1, 3, 2, Orientation::parallel), 1);
  EXPECT_EQ(swap_gain(3, 3, 3, 3, Orientation::cross), 0);
  EXPECT_EQ(swap_gain(3, 3, 3, 3, Orientation::parallel), 0);
}

TEST(CandidateValue, OnGraph) {
  const Graph g = g8();
  EXPECT_EQ(candidate_value(g, edge(g, "h1", "l2"), edge(g, "h2", "l5"), Orientation::cross), 4);
  EXPECT_THROW(candidate_value(g, edge(g, "h1", "l2"), edge(g, "h1", "l3"), Orientation::cross), invalid_pair);
}

TEST(Spearman, Examples) {
  EXPECT_DOUBLE_EQ(spearman_rank_corr(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 2, 3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(spearman_rank_corr(std::vector<double>{1, 2, 3, 4}, std::vector<double>{4, 3, 2, 1}), -1.0);
  EXPECT_NEAR(spearman_rank_corr(std::vector<double>{2, 1, 3}, std::vector<double>{1, 2, 3}), 0.5, 1e-15);
  EXPECT_THROW(spearman_rank_corr(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}), undefined_metric);
}

TEST(Spearman, AverageRanksForTies) {
  const auto r = average_ranks(std::vector<double>{10, 20, 10, 30, 20});
  EXPECT_EQ(r, (std::vector<double>{1.5, 3.5, 1.5, 5, 3.5}));
}

TEST(Spearman, PropertyAgainstCountingOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 30);
    std::vector<double> xs(n), ys(n);
    for (auto& x : xs) x = static_cast<double>(uniform_below(rng, 6));
    for (auto& y : ys) y = static_cast<double>(uniform_below(rng, 6));
    if (std::all_of(xs.begin(), xs.end(), [&](double v) { return v == xs[0]; })) continue;
    if (std::all_of(ys.begin(), ys.end(), [&](double v) { return v == ys[0]; })) continue;
    EXPECT_NEAR(spearman_rank_corr(xs, ys), testing::spearman_oracle(xs, ys), 1e-12);
    EXPECT_NEAR(spearman_rank_corr(xs, xs), 1.0, 1e-12);
    std::vector<double> neg(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) neg[i] = -ys[i];
    EXPECT_NEAR(spearman_rank_corr(xs, neg), -spearman_rank_corr(xs, ys), 1e-12);
  }
}

std::vector<double> endpoint_degrees(const Graph& g, bool first) {
  std::vector<double> out;
  for (const auto& e : g.edges()) {
    const double a = static_cast<double>(g.degree(e.u)), b = static_cast<double>(g.degree(e.v));
    out.push_back(first ? a : b);
    out.push_back(first ? b : a);
  }
  return out;
}

TEST(SpearmanDegree, StarAndOracle) {
  EXPECT_NEAR(spearman_degree_correlation(testing::star(3)), -1.0, 1e-12);
  const Graph g = g8();
  const double expected = testing::spearman_oracle(endpoint_degrees(g, true), endpoint_degrees(g, false));
  EXPECT_NEAR(spearman_degree_correlation(g), expected, 1e-12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph r = testing::random_graph(seed, 40);
    EXPECT_NEAR(spearman_degree_correlation(r),
                testing::spearman_oracle(endpoint_degrees(r, true), endpoint_degrees(r, false)), 1e-12);
  }
  EXPECT_THROW(spearman_degree_correlation(testing::cycle(5)), undefined_metric);
}

TEST(CorrelationReport, G8) {
  const auto rep = correlation_report(g8());
  ASSERT_TRUE(rep.assortativity);
  EXPECT_NEAR(*rep.assortativity, -29.0 / 34.0, 1e-12);
  EXPECT_EQ(rep.s_metric, 28);
  EXPECT_NEAR(rep.denom, 34.0 / 49.0, 1e-15);
  const auto regular = correlation_report(testing::cycle(4));
  EXPECT_FALSE(regular.assortativity);
  EXPECT_EQ(regular.s_metric, 16);
}

}  // namespace
}  // namespace rewire
