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

#ifndef REWIRE_EXACT_HPP_
#define REWIRE_EXACT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "rewire/candidates.hpp"
#include "rewire/correlation.hpp"
#include "rewire/error.hpp"
#include "rewire/graph.hpp"
#include "rewire/strategies.hpp"

namespace rewire {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct ExactSolution {
  RewirePlan plan;
  std::int64_t optimal_delta_s = 0;
  std::uint64_t explored_nodes = 0;
  bool proven_optimal = false;
};

// Maximum-value admissible plan of at most k candidates from EP.
//
// Branch and bound over EP in its descending (value, key) order. Each search
// node extends the current selection with a later candidate compatible with
// it: no shared source edge, no shared created edge. Members of a feasible
// plan have pairwise distinct created_a edges, so the bound at position j is
// the current value plus the r largest per-created_a maxima among compatible
// candidates from j on (r = remaining budget). EP is sorted, so those are the
// first r compatible candidates with unseen created_a; the bound shrinks as j
// advances, which lets the loop break rather than skip. The first leaf
// reached is the greedy plan.
inline ExactSolution solve_exact(const Graph& g, std::size_t k, std::uint64_t node_budget = kDefaultNodeBudget,
                                 unsigned threads = 1) {
  const CandidateSet ep = enumerate_ep(g, threads);
  const std::size_t n = ep.size();

  struct Item {
    std::int64_t value;
    std::uint32_t src[2];
    std::uint32_t made[2];
  };
  std::vector<Item> items(n);
  std::map<EdgeRef, std::uint32_t> created_ids;
  auto created_id = [&](const EdgeRef& e) {
    auto [it, fresh] = created_ids.try_emplace(e, static_cast<std::uint32_t>(created_ids.size()));
    return it->second;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = ep[i];
    items[i] = {c.value, {ep.source_index_a(i), ep.source_index_b(i)}, {created_id(c.created_a), created_id(c.created_b)}};
  }
  std::vector<char> source_used(ep.edges().size(), 0), created_used(created_ids.size(), 0);
  auto compatible = [&](const Item& it) {
    return !source_used[it.src[0]] && !source_used[it.src[1]] && !created_used[it.made[0]] && !created_used[it.made[1]];
  };
  auto mark = [&](const Item& it, char on) {
    source_used[it.src[0]] = source_used[it.src[1]] = on;
    created_used[it.made[0]] = created_used[it.made[1]] = on;
  };

  std::vector<std::uint32_t> chosen, best_chosen;
  std::int64_t best = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;

  std::vector<std::uint64_t> seen_created(created_ids.size(), 0);
  std::uint64_t epoch = 0;
  auto keyed_bound = [&](std::size_t j, std::size_t r, std::vector<std::uint64_t>& seen, auto key) {
    ++epoch;
    std::int64_t sum = 0;
    for (; j < n && r > 0; ++j) {
      const Item& it = items[j];
      if (seen[key(it)] == epoch || !compatible(it)) continue;
      seen[key(it)] = epoch;
      sum += it.value;
      --r;
    }
    return sum;
  };
  auto bound_from = [&](std::size_t j, std::size_t r) {
    return keyed_bound(j, r, seen_created, [](const Item& it) { return it.made[0]; });
  };

  auto search = [&](auto&& self, std::size_t start, std::size_t remaining, std::int64_t current) -> void {
    if (++nodes > node_budget) {
      aborted = true;
      return;
    }
    if (current > best) {
      best = current;
      best_chosen = chosen;
    }
    if (remaining == 0) return;
    for (std::size_t j = start; j < n && !aborted; ++j) {
      if (current + bound_from(j, remaining) <= best) break;
      if (!compatible(items[j])) continue;
      mark(items[j], 1);
      chosen.push_back(static_cast<std::uint32_t>(j));
      self(self, j + 1, remaining - 1, current + items[j].value);
      chosen.pop_back();
      mark(items[j], 0);
    }
  };
  if (k > 0) search(search, 0, k, 0);

  ExactSolution sol;
  detail::PlanBuilder builder(g, k);
  for (auto idx : best_chosen) builder.apply(ep[idx]);
  sol.plan = std::move(builder).finish();
  sol.optimal_delta_s = best;
  sol.explored_nodes = nodes;
  sol.proven_optimal = !aborted;
  return sol;
}

inline double approximation_ratio(const ExactSolution& opt, const RewirePlan& plan) {
  if (!opt.proven_optimal) throw undefined_ratio("optimum not proven");
  if (opt.optimal_delta_s == 0) throw undefined_ratio("optimal delta s is zero");
  return static_cast<double>(plan.delta_s) / static_cast<double>(opt.optimal_delta_s);
}

inline double approximation_ratio(const Graph& g, std::size_t k, const RewirePlan& plan,
                                  std::uint64_t node_budget = kDefaultNodeBudget) {
  return approximation_ratio(solve_exact(g, k, node_budget), plan);
}

}  // namespace rewire

#endif  // REWIRE_EXACT_HPP_
