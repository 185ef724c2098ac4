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
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rewire/generators.hpp"
#include "rewire/random.hpp"
#include "rewire/robustness.hpp"
#include "rewire/strategies.hpp"

namespace rewire {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;
using testing::star;

TEST(SpectralRadius, ClosedForms) {
  EXPECT_NEAR(spectral_radius(complete(4)), 3.0, 1e-12);
  EXPECT_NEAR(spectral_radius(star(4)), 2.0, 1e-12);
  EXPECT_NEAR(spectral_radius(cycle(4)), 2.0, 1e-12);
}

TEST(NaturalConnectivity, ClosedForms) {
  EXPECT_NEAR(natural_connectivity(Graph(5)), 0.0, 1e-15);
  EXPECT_NEAR(natural_connectivity(complete(2)), std::log(std::cosh(1.0)), 1e-12);
  const double e = std::exp(1.0);
  EXPECT_NEAR(natural_connectivity(complete(3)), std::log((e * e + 2 / e) / 3), 1e-12);
}

TEST(Spectrum, EmptyGraphIsUndefined) {
  EXPECT_THROW(spectral_radius(Graph()), undefined_metric);
  EXPECT_THROW(natural_connectivity(Graph()), undefined_metric);
}

TEST(Spectrum, MatchesJacobiOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const std::size_t n = 5 + uniform_below(rng, 196);
    const std::size_t m = std::min(n * (n - 1) / 2, n + uniform_below(rng, 3 * n));
    const Graph g = erdos_renyi(n, m, seed);
    const auto eig = testing::adjacency_eigenvalues_oracle(g);
    const double lambda = *std::max_element(eig.begin(), eig.end());
    const auto rep = spectrum_report(g);
    EXPECT_NEAR(rep.spectral_radius, lambda, 1e-8) << "n=" << n;
    EXPECT_NEAR(*rep.natural_connectivity, testing::natural_connectivity_oracle(eig), 1e-9) << "n=" << n;
    EXPECT_NEAR(spectral_radius(g), lambda, 1e-8);
  }
}

TEST(Spectrum, LogMeanExpSandwich) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::random_graph(seed, 40);
    const auto rep = spectrum_report(g);
    const double n = static_cast<double>(g.node_count());
    EXPECT_GE(*rep.natural_connectivity, rep.spectral_radius - std::log(n) - 1e-12);
    EXPECT_LE(*rep.natural_connectivity, rep.spectral_radius + 1e-12);
  }
}

TEST(Spectrum, IterativeAgreesWithDense) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = testing::random_graph(seed, 120);
    const auto dense = spectral_radius_report(g, 1e-12, SpectrumMethod::dense);
    const auto iter = spectral_radius_report(g, 1e-12, SpectrumMethod::iterative);
    EXPECT_EQ(iter.method, SpectrumMethod::iterative);
    EXPECT_NEAR(iter.spectral_radius, dense.spectral_radius, 1e-8);
    EXPECT_LE(iter.residual, 1e-12 * std::max(1.0, iter.spectral_radius));
  }
  // Bipartite: the shift keeps the iteration from oscillating.
  const auto bip = spectral_radius_report(path(50), 1e-12, SpectrumMethod::iterative);
  EXPECT_NEAR(bip.spectral_radius, 2 * std::cos(M_PI / 51), 1e-8);
}

TEST(Centrality, PathOfThree) {
  const Graph g = path(3);
  const auto bc = betweenness_centrality(g);
  EXPECT_NEAR(bc[1], 1.0, 1e-12);
  EXPECT_NEAR(bc[0], 0.0, 1e-12);
  EXPECT_NEAR(bc[2], 0.0, 1e-12);
  const auto cc = closeness_centrality(g);
  EXPECT_NEAR(cc[1], 1.0, 1e-12);
  EXPECT_NEAR(cc[0], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(cc[2], 2.0 / 3.0, 1e-12);
}

TEST(Centrality, StarEigenvector) {
  const auto ev = eigenvector_centrality(star(3));
  EXPECT_FALSE(ev.largest_component_only);
  EXPECT_NEAR(ev.scores[0], std::sqrt(3.0 / 6.0), 1e-10);
  for (int i = 1; i <= 3; ++i) EXPECT_NEAR(ev.scores[i], std::sqrt(1.0 / 6.0), 1e-10);
}

TEST(Centrality, EigenvectorUnitNonnegative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ev = eigenvector_centrality(testing::random_graph(seed));
    double norm = 0;
    for (double x : ev.scores) {
      EXPECT_GE(x, 0.0);
      norm += x * x;
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
}

TEST(Centrality, EigenvectorDisconnected) {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 4);
  const auto ev = eigenvector_centrality(g);
  EXPECT_TRUE(ev.largest_component_only);
  EXPECT_EQ(ev.scores[0], 0.0);
  EXPECT_EQ(ev.scores[5], 0.0);
  EXPECT_NEAR(ev.scores[3], 1 / std::sqrt(3.0), 1e-10);
  EXPECT_THROW(eigenvector_centrality(Graph(3)), undefined_metric);
}

TEST(Centrality, ClosenessDisconnected) {
  Graph g(4);
  g.add_edge(0, 1);
  const auto cc = closeness_centrality(g);
  EXPECT_NEAR(cc[0], 1.0 / 3.0, 1e-12);
  EXPECT_EQ(cc[2], 0.0);
}

TEST(Centrality, TrianglePlusPendantKshell) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  EXPECT_EQ(kshell_centrality(g), (std::vector<double>{2, 2, 2, 1}));
}

TEST(Centrality, KshellMatchesNaivePeeling) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = testing::random_graph(seed, 40);
    // Naive: the k-core is what survives repeatedly deleting degree < k nodes.
    std::vector<double> core(g.node_count(), 0);
    for (std::size_t k = 1;; ++k) {
      std::vector<bool> alive(g.node_count(), true);
      for (bool changed = true; changed;) {
        changed = false;
        for (node_id v = 0; v < g.node_count(); ++v) {
          if (!alive[v]) continue;
          std::size_t d = 0;
          for (node_id w : g.neighbors(v)) d += alive[w];
          if (d < k) alive[v] = false, changed = true;
        }
      }
      if (std::none_of(alive.begin(), alive.end(), [](bool a) { return a; })) break;
      for (node_id v = 0; v < g.node_count(); ++v)
        if (alive[v]) core[v] = static_cast<double>(k);
    }
    EXPECT_EQ(kshell_centrality(g), core) << seed;
  }
}

TEST(Centrality, KshellInvariantOnRegularRewiring) {
  const Graph ring = watts_strogatz(40, 4, 0.0, 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    StrategyConfig cfg;
    cfg.budget = Budget::count(15);
    cfg.seed = seed;
    const auto plan = run_pa(ring, cfg);
    ASSERT_FALSE(plan.steps.empty());
    EXPECT_EQ(kshell_centrality(plan.final_graph), std::vector<double>(40, 4.0));
  }
}

TEST(Centrality, PermutationEquivariant) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = testing::random_graph(seed, 35);
    std::vector<node_id> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), node_id{0});
    Rng rng(seed + 100);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    Graph h(g.node_count());
    for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    for (CentralityKind kind :
         {CentralityKind::betweenness, CentralityKind::closeness, CentralityKind::eigenvector, CentralityKind::kshell}) {
      const auto a = centrality(g, kind), b = centrality(h, kind);
      for (node_id v = 0; v < g.node_count(); ++v)
        EXPECT_NEAR(a.scores[v], b.scores[perm[v]], 1e-9) << centrality_name(kind);
    }
  }
}

TEST(Centrality, ThreadCountDoesNotChangeScores) {
  const Graph g = barabasi_albert(300, 3, 5);
  EXPECT_EQ(betweenness_centrality(g, 1), betweenness_centrality(g, 4));
  EXPECT_EQ(closeness_centrality(g, 1), closeness_centrality(g, 3));
}

CentralityVector scores(std::vector<double> v) { return {CentralityKind::betweenness, std::move(v), false}; }

TEST(CentralitySc, HandExamples) {
  EXPECT_DOUBLE_EQ(centrality_sc(scores({4, 3, 2, 1}), scores({4, 3, 2, 1}), 1.0), 1.0);
  EXPECT_DOUBLE_EQ(centrality_sc(scores({4, 3, 2, 1}), scores({4, 3, 2, 1}), 0.5), 1.0);
  EXPECT_DOUBLE_EQ(centrality_sc(scores({4, 3, 2, 1}), scores({1, 2, 3, 4}), 1.0), -1.0);
  EXPECT_DOUBLE_EQ(centrality_sc(scores({4, 3, 2, 1}), scores({3, 4, 2, 1}), 0.5), -1.0);
}

TEST(CentralitySc, Errors) {
  EXPECT_THROW(centrality_sc(scores({1, 1, 1}), scores({1, 2, 3})), undefined_metric);
  EXPECT_THROW(centrality_sc(scores({1, 2}), scores({1, 2, 3})), error);
  EXPECT_THROW(centrality_sc(scores({1, 2}), scores({1, 2}), 0.0), error);
  EXPECT_THROW(centrality_sc(scores({1, 2}), CentralityVector{CentralityKind::kshell, {1, 2}, false}), error);
}

TEST(CentralitySc, IdenticalGraphsAndDeterminism) {
  const Graph g = erdos_renyi(80, 240, 3);
  StrategyConfig cfg;
  cfg.budget = Budget::count(8);
  const auto rewired = run_ga(g, cfg).final_graph;
  for (CentralityKind kind :
       {CentralityKind::betweenness, CentralityKind::closeness, CentralityKind::eigenvector, CentralityKind::kshell}) {
    const auto a = centrality(g, kind);
    EXPECT_DOUBLE_EQ(centrality_sc(a, centrality(g, kind)), 1.0) << centrality_name(kind);
    // Core numbers are coarse; the top half is often a single shell.
    const double f = kind == CentralityKind::kshell ? 1.0 : 0.5;
    const double sc = centrality_sc(a, centrality(rewired, kind), f);
    EXPECT_EQ(sc, centrality_sc(centrality(g, kind, 3), centrality(rewired, kind, 2), f));
  }
}

}  // namespace
}  // namespace rewire
