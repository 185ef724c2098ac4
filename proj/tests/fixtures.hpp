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

#ifndef REWIRE_TESTS_FIXTURES_HPP_
#define REWIRE_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <string>

#include "rewire/generators.hpp"
#include "rewire/graph.hpp"

namespace rewire::testing {

// Two hubs h1, h2 with three leaves each and one extra leaf-leaf edge l1-l4.
inline constexpr const char* kG8 = "h1 l1\nh1 l2\nh1 l3\nh2 l4\nh2 l5\nh2 l6\nl1 l4\n";

inline Graph g8() { return parse_edge_list(kG8); }

inline node_id id(const Graph& g, const std::string& label) { return g.find(label).value(); }

inline EdgeRef edge(const Graph& g, const std::string& a, const std::string& b) {
  return EdgeRef::of(id(g, a), id(g, b));
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<node_id>(i), static_cast<node_id>(i + 1));
  return g;
}

inline Graph cycle(std::size_t n) {
  Graph g = path(n);
  g.add_edge(0, static_cast<node_id>(n - 1));
  return g;
}

inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, static_cast<node_id>(i));
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(static_cast<node_id>(i), static_cast<node_id>(j));
  return g;
}

// Mixed family of small random graphs: ER, BA and WS by seed.
inline Graph random_graph(std::uint64_t seed, std::size_t n = 30) {
  switch (seed % 3) {
    case 0: return erdos_renyi(n, 2 * n, seed);
    case 1: return barabasi_albert(n, 2, seed);
    default: return watts_strogatz(n, 4, 0.2, seed);
  }
}

}  // namespace rewire::testing

#endif  // REWIRE_TESTS_FIXTURES_HPP_
