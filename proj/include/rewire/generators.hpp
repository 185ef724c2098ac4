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

#ifndef REWIRE_GENERATORS_HPP_
#define REWIRE_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rewire/error.hpp"
#include "rewire/graph.hpp"
#include "rewire/random.hpp"

namespace rewire {

// G(n, m): m distinct edges drawn uniformly.
inline Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m > n * (n - 1) / 2) throw error("erdos_renyi: edge count exceeds n choose 2");
  Graph g(n);
  Rng rng(seed);
  while (g.edge_count() < m) {
    const auto a = static_cast<node_id>(uniform_below(rng, n));
    const auto b = static_cast<node_id>(uniform_below(rng, n));
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

// Ring lattice where every node links to ring_degree/2 neighbors on each
// side, then each lattice edge (u, u+j) is rewired with probability p to
// (u, w) for uniform w avoiding self-loops and duplicates.
inline Graph watts_strogatz(std::size_t n, std::size_t ring_degree, double p, std::uint64_t seed) {
  if (ring_degree % 2 != 0 || ring_degree >= n) throw error("watts_strogatz: ring degree must be even and < n");
  Graph g(n);
  const std::size_t half = ring_degree / 2;
  for (std::size_t j = 1; j <= half; ++j)
    for (std::size_t u = 0; u < n; ++u) g.add_edge(static_cast<node_id>(u), static_cast<node_id>((u + j) % n));
  Rng rng(seed);
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      if (uniform_unit(rng) >= p) continue;
      const auto src = static_cast<node_id>(u);
      if (g.degree(src) >= n - 1) continue;
      node_id w;
      do {
        w = static_cast<node_id>(uniform_below(rng, n));
      } while (w == src || g.has_edge(src, w));
      const auto v = static_cast<node_id>((u + j) % n);
      if (!g.has_edge(src, v)) continue;
      g.remove_edge(src, v);
      g.add_edge(src, w);
    }
  }
  return g;
}

// Preferential attachment: node s >= m links to m distinct earlier nodes
// drawn from the endpoint multiset. Yields (n - m) * m edges.
inline Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw error("barabasi_albert: attachment must satisfy 1 <= m < n");
  Graph g(n);
  Rng rng(seed);
  std::vector<node_id> targets(m), repeated;
  for (std::size_t i = 0; i < m; ++i) targets[i] = static_cast<node_id>(i);
  for (auto source = static_cast<node_id>(m); source < n; ++source) {
    for (node_id t : targets) g.add_edge(source, t);
    repeated.insert(repeated.end(), targets.begin(), targets.end());
    repeated.insert(repeated.end(), m, source);
    targets.clear();
    while (targets.size() < m) {
      const node_id t = repeated[uniform_below(rng, repeated.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
  }
  return g;
}

}  // namespace rewire

#endif  // REWIRE_GENERATORS_HPP_
