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

#ifndef REWIRE_STRATEGIES_HPP_
#define REWIRE_STRATEGIES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rewire/candidates.hpp"
#include "rewire/correlation.hpp"
#include "rewire/error.hpp"
#include "rewire/graph.hpp"
#include "rewire/random.hpp"

namespace rewire {

// Rewiring budget: an absolute step count, or a fraction of M that resolves
// by floor (at least one step).
class Budget {
 public:
  static Budget count(std::size_t k) { return Budget(k, std::nullopt); }
  static Budget fraction(double f) {
    if (!(f > 0.0 && f <= 1.0)) throw error("budget fraction must lie in (0, 1]");
    return Budget(0, f);
  }

  std::size_t resolve(std::size_t edge_count) const {
    if (!fraction_) return count_;
    const auto k = static_cast<std::size_t>(std::floor(*fraction_ * static_cast<double>(edge_count) + 1e-9));
    return std::max<std::size_t>(k, 1);
  }
  std::optional<double> fraction() const noexcept { return fraction_; }

 private:
  Budget(std::size_t k, std::optional<double> f) : count_(k), fraction_(f) {}
  std::size_t count_;
  std::optional<double> fraction_;
};

struct StrategyConfig {
  Budget budget = Budget::count(1);
  std::uint64_t seed = 0;
  std::optional<std::size_t> retry_limit;  // default: 50 * k consecutive failures
  unsigned threads = 1;                    // EP enumeration only

  std::size_t retries_for(std::size_t k) const { return retry_limit.value_or(50 * std::max<std::size_t>(k, 1)); }
};

struct RewirePlan {
  std::vector<RewireCandidate> steps;
  std::int64_t delta_s = 0;
  double delta_r = 0.0;
  Graph final_graph;
  std::size_t budget = 0;
  bool truncated = false;  // a stochastic strategy hit its retry limit
};

enum class Method { ga, eda, ta, pea, ra, pa };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::ga: return "ga";
    case Method::eda: return "eda";
    case Method::ta: return "ta";
    case Method::pea: return "pea";
    case Method::ra: return "ra";
    case Method::pa: return "pa";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::ga, Method::eda, Method::ta, Method::pea, Method::ra, Method::pa})
    if (method_name(m) == s) return m;
  return std::nullopt;
}

namespace detail {

// Candidate whose sources are removed and whose created edges are added,
// valued against the (fixed) degree sequence of g.
inline RewireCandidate swap_candidate(const Graph& g, EdgeRef s1, EdgeRef s2, EdgeRef c1, EdgeRef c2) {
  auto d = [&](node_id v) { return static_cast<std::int64_t>(g.degree(v)); };
  RewireCandidate c;
  c.source_a = std::min(s1, s2);
  c.source_b = std::max(s1, s2);
  c.created_a = std::min(c1, c2);
  c.created_b = std::max(c1, c2);
  c.value = d(c1.u) * d(c1.v) + d(c2.u) * d(c2.v) - d(s1.u) * d(s1.v) - d(s2.u) * d(s2.v);
  return c;
}

// Re-pairs the endpoints of two disjoint edges so the two highest-degree
// nodes join and the two lowest join. Equal degrees order by node id.
inline RewireCandidate assortative_pairing(const Graph& g, EdgeRef e1, EdgeRef e2) {
  std::array<node_id, 4> n{e1.u, e1.v, e2.u, e2.v};
  std::sort(n.begin(), n.end(), [&](node_id x, node_id y) {
    return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y;
  });
  return swap_candidate(g, e1, e2, EdgeRef::of(n[0], n[1]), EdgeRef::of(n[2], n[3]));
}

class PlanBuilder {
 public:
  PlanBuilder(const Graph& g, std::size_t budget) : moments_(degree_moments(g)) {
    plan_.final_graph = g;
    plan_.budget = budget;
  }

  const Graph& graph() const noexcept { return plan_.final_graph; }
  bool full() const noexcept { return plan_.steps.size() >= plan_.budget; }

  bool try_apply(const RewireCandidate& c) {
    if (!can_rewire(plan_.final_graph, c)) return false;
    apply(c);
    return true;
  }
  void apply(const RewireCandidate& c) {
    apply_rewiring_in_place(plan_.final_graph, c);
    plan_.steps.push_back(c);
    plan_.delta_s += c.value;
  }
  void mark_truncated() noexcept { plan_.truncated = true; }

  RewirePlan finish() && {
    plan_.delta_r = plan_.delta_s == 0 ? 0.0 : delta_r_from_delta_s(moments_, plan_.delta_s);
    return std::move(plan_);
  }

 private:
  DegreeMoments moments_;
  RewirePlan plan_;
};

inline std::int64_t degree_gap(const Graph& g, const EdgeRef& e) {
  const auto a = static_cast<std::int64_t>(g.degree(e.u)), b = static_cast<std::int64_t>(g.degree(e.v));
  return a > b ? a - b : b - a;
}

// Prefix-sum tree over nonnegative integer weights with weighted sampling.
class FenwickSampler {
 public:
  explicit FenwickSampler(std::size_t n) : tree_(n + 1, 0), weight_(n, 0) {}

  void set(std::size_t i, std::int64_t w) {
    const std::int64_t delta = w - weight_[i];
    weight_[i] = w;
    total_ += delta;
    for (std::size_t x = i + 1; x < tree_.size(); x += x & (~x + 1)) tree_[x] += delta;
  }
  std::int64_t total() const noexcept { return total_; }

  std::size_t sample(Rng& rng) const {
    auto target = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(total_)));
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= target) {
        pos += step;
        target -= tree_[pos];
      }
    }
    return pos;  // 0-based slot index
  }

 private:
  std::vector<std::int64_t> tree_;
  std::vector<std::int64_t> weight_;
  std::int64_t total_ = 0;
};

}  // namespace detail

// Greedy over the frozen EP: take candidates in descending value order,
// keeping each one that still applies to the evolving graph.
inline RewirePlan run_ga(const Graph& g, const StrategyConfig& cfg) {
  const std::size_t k = cfg.budget.resolve(g.edge_count());
  detail::PlanBuilder b(g, k);
  if (k == 0) return std::move(b).finish();
  const CandidateSet ep = enumerate_ep(g, cfg.threads);
  for (std::size_t i = 0; i < ep.size() && !b.full(); ++i) b.try_apply(ep[i]);
  return std::move(b).finish();
}

// Edge-difference heuristic: repeatedly pair the live edge with the largest
// endpoint-degree gap with the next edge (in gap order) that it can be
// assortatively re-paired with. An edge that pairs with nothing leaves the
// live list for good.
inline RewirePlan run_eda(const Graph& g, const StrategyConfig& cfg) {
  const std::size_t k = cfg.budget.resolve(g.edge_count());
  detail::PlanBuilder b(g, k);
  struct Live {
    std::int64_t gap;
    EdgeRef e;
    bool operator<(const Live& o) const { return gap != o.gap ? gap > o.gap : e < o.e; }
  };
  std::set<Live> live;
  for (const auto& e : g.edges()) live.insert({detail::degree_gap(g, e), e});

  while (!b.full() && !live.empty()) {
    const Live top = *live.begin();
    bool paired = false;
    for (auto it = std::next(live.begin()); it != live.end(); ++it) {
      if (top.e.shares_endpoint(it->e)) continue;
      const auto c = detail::assortative_pairing(b.graph(), top.e, it->e);
      if (c.value <= 0 || !b.try_apply(c)) continue;
      live.erase(it);
      live.erase(live.begin());
      live.insert({detail::degree_gap(g, c.created_a), c.created_a});
      live.insert({detail::degree_gap(g, c.created_b), c.created_b});
      paired = true;
      break;
    }
    if (!paired) live.erase(live.begin());
  }
  return std::move(b).finish();
}

// Targeted heuristic over nodes in descending degree order (ties by id). For
// hub a and each later node z not adjacent to a: y is z's lowest-degree
// neighbor, b is a's lowest-degree neighbor not adjacent to y; rewire
// (a,b),(z,y) -> (a,z),(b,y) when d_z exceeds both d_y and d_b.
inline RewirePlan run_ta(const Graph& g, const StrategyConfig& cfg) {
  const std::size_t k = cfg.budget.resolve(g.edge_count());
  detail::PlanBuilder b(g, k);
  const std::size_t n = g.node_count();
  std::vector<node_id> order(n);
  for (node_id v = 0; v < n; ++v) order[v] = v;
  auto by_degree = [&](node_id x, node_id y) { return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y; };
  std::stable_sort(order.begin(), order.end(), by_degree);

  // Lowest degree, then lowest id.
  auto lowest = [&](auto&& range, auto&& keep) -> std::optional<node_id> {
    std::optional<node_id> best;
    for (node_id x : range) {
      if (!keep(x)) continue;
      if (!best || g.degree(x) < g.degree(*best) || (g.degree(x) == g.degree(*best) && x < *best)) best = x;
    }
    return best;
  };

  std::size_t p = 0, q = 1;
  while (!b.full() && n >= 2 && p < n - 1) {
    if (q >= n) {
      ++p;
      q = p + 1;
      continue;
    }
    const node_id a = order[p];
    const node_id z = order[q];
    ++q;
    const Graph& cur = b.graph();
    if (cur.has_edge(a, z)) continue;
    const auto y = lowest(cur.neighbors(z), [](node_id) { return true; });
    if (!y) continue;
    const auto bb = lowest(cur.neighbors(a), [&](node_id x) { return x != *y && !cur.has_edge(x, *y); });
    if (!bb) continue;
    const std::size_t dz = g.degree(z);
    if (dz > g.degree(*y) && dz > g.degree(*bb))
      b.apply(detail::swap_candidate(g, EdgeRef::of(a, *bb), EdgeRef::of(z, *y), EdgeRef::of(a, z),
                                     EdgeRef::of(*bb, *y)));
  }
  return std::move(b).finish();
}

// Probabilistic edge heuristic: draw two live edges with probability
// proportional to endpoint-degree gap and re-pair them assortatively.
inline RewirePlan run_pea(const Graph& g, const StrategyConfig& cfg) {
  const std::size_t k = cfg.budget.resolve(g.edge_count());
  detail::PlanBuilder b(g, k);
  std::vector<EdgeRef> slots = g.edges();
  detail::FenwickSampler weights(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) weights.set(i, detail::degree_gap(g, slots[i]));
  if (weights.total() == 0) throw degenerate_weights("every edge joins equal-degree nodes");

  Rng rng(cfg.seed);
  const std::size_t retries = cfg.retries_for(k);
  std::size_t failures = 0;
  while (!b.full() && weights.total() > 0) {
    if (failures >= retries) {
      b.mark_truncated();
      break;
    }
    const std::size_t i = weights.sample(rng);
    const std::size_t j = weights.sample(rng);
    if (i == j || slots[i].shares_endpoint(slots[j])) {
      ++failures;
      continue;
    }
    const auto c = detail::assortative_pairing(b.graph(), slots[i], slots[j]);
    if (c.value <= 0 || !b.try_apply(c)) {
      ++failures;
      continue;
    }
    failures = 0;
    slots[i] = c.created_a;
    slots[j] = c.created_b;
    weights.set(i, detail::degree_gap(g, slots[i]));
    weights.set(j, detail::degree_gap(g, slots[j]));
  }
  return std::move(b).finish();
}

// Random assortative baseline: uniform node-disjoint edge pairs, re-paired
// high-with-high and low-with-low.
inline RewirePlan run_ra(const Graph& g, const StrategyConfig& cfg) {
  const std::size_t k = cfg.budget.resolve(g.edge_count());
  detail::PlanBuilder b(g, k);
  std::vector<EdgeRef> slots = g.edges();
  if (slots.size() < 2) return std::move(b).finish();
  Rng rng(cfg.seed);
  const std::size_t retries = cfg.retries_for(k);
  std::size_t failures = 0;
  while (!b.full()) {
    if (failures >= retries) {
      b.mark_truncated();
      break;
    }
    const auto i = static_cast<std::size_t>(uniform_below(rng, slots.size()));
    const auto j = static_cast<std::size_t>(uniform_below(rng, slots.size()));
    if (i == j || slots[i].shares_endpoint(slots[j])) {
      ++failures;
      continue;
    }
    const auto c = detail::assortative_pairing(b.graph(), slots[i], slots[j]);
    if (c.value <= 0 || !b.try_apply(c)) {
      ++failures;
      continue;
    }
    failures = 0;
    slots[i] = c.created_a;
    slots[j] = c.created_b;
  }
  return std::move(b).finish();
}

// Preferential baseline: pick i and k with probability proportional to
// degree, random neighbors j of i and l of k, then rewire (i,j),(k,l) ->
// (i,k),(j,l) whenever that is a valid swap.
inline RewirePlan run_pa(const Graph& g, const StrategyConfig& cfg) {
  const std::size_t k = cfg.budget.resolve(g.edge_count());
  detail::PlanBuilder b(g, k);
  if (g.edge_count() < 2) return std::move(b).finish();
  std::vector<std::uint64_t> cumulative(g.node_count());
  std::uint64_t acc = 0;
  for (node_id v = 0; v < g.node_count(); ++v) cumulative[v] = acc += g.degree(v);
  auto pick_node = [&](Rng& rng) {
    const auto r = uniform_below(rng, acc);
    return static_cast<node_id>(std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
  };

  Rng rng(cfg.seed);
  const std::size_t retries = cfg.retries_for(k);
  std::size_t failures = 0;
  while (!b.full()) {
    if (failures >= retries) {
      b.mark_truncated();
      break;
    }
    const node_id i = pick_node(rng);
    const node_id kk = pick_node(rng);
    const auto ni = b.graph().neighbors(i);
    const auto nk = b.graph().neighbors(kk);
    const node_id j = ni[uniform_below(rng, ni.size())];
    const node_id l = nk[uniform_below(rng, nk.size())];
    const auto c = detail::swap_candidate(g, EdgeRef::of(i, j), EdgeRef::of(kk, l), EdgeRef::of(i, kk),
                                          EdgeRef::of(j, l));
    if (i == kk || !b.try_apply(c)) {
      ++failures;
      continue;
    }
    failures = 0;
  }
  return std::move(b).finish();
}

inline RewirePlan run_strategy(Method m, const Graph& g, const StrategyConfig& cfg) {
  switch (m) {
    case Method::ga: return run_ga(g, cfg);
    case Method::eda: return run_eda(g, cfg);
    case Method::ta: return run_ta(g, cfg);
    case Method::pea: return run_pea(g, cfg);
    case Method::ra: return run_ra(g, cfg);
    case Method::pa: return run_pa(g, cfg);
  }
  throw error("unknown method");
}

}  // namespace rewire

#endif  // REWIRE_STRATEGIES_HPP_
