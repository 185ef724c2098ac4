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

#ifndef REWIRE_CANDIDATES_HPP_
#define REWIRE_CANDIDATES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <thread>
#include <tuple>
#include <vector>

#include "rewire/correlation.hpp"
#include "rewire/graph.hpp"

namespace rewire {

// One rewiring option: remove the two source edges, add the two created
// edges. value is the exact change in s-metric. Sources and created edges are
// each stored in ascending order, which makes the tuple below a total key.
struct RewireCandidate : EdgeSwap {
  std::int64_t value = 0;

  auto key() const noexcept { return std::tie(source_a, source_b, created_a, created_b); }
  friend bool operator==(const RewireCandidate& a, const RewireCandidate& b) noexcept {
    return a.key() == b.key() && a.value == b.value;
  }
};

// Descending value, then ascending canonical key.
inline bool candidate_before(const RewireCandidate& a, const RewireCandidate& b) noexcept {
  if (a.value != b.value) return a.value > b.value;
  return a.key() < b.key();
}

inline RewireCandidate make_candidate(const Graph& g, const EdgeRef& e1, const EdgeRef& e2, Orientation o) {
  RewireCandidate c;
  c.source_a = std::min(e1, e2);
  c.source_b = std::max(e1, e2);
  const auto& [i, j] = std::pair{e1.u, e1.v};
  const auto& [k, l] = std::pair{e2.u, e2.v};
  EdgeRef x = o == Orientation::cross ? EdgeRef::of(i, k) : EdgeRef::of(i, l);
  EdgeRef y = o == Orientation::cross ? EdgeRef::of(j, l) : EdgeRef::of(j, k);
  c.created_a = std::min(x, y);
  c.created_b = std::max(x, y);
  c.value = candidate_value(g, e1, e2, o);
  return c;
}

// The frozen set EP of positive-value candidates applicable to the graph it
// was enumerated from, in descending value order. Stored compactly as edge
// index pairs; operator[] materializes a RewireCandidate.
class CandidateSet {
 public:
  CandidateSet() = default;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  RewireCandidate operator[](std::size_t idx) const { return materialize(entries_[idx]); }
  std::int64_t value(std::size_t idx) const { return entries_[idx].value; }

  // Source edge indices into edges(), and orientation.
  std::uint32_t source_index_a(std::size_t idx) const { return entries_[idx].edge_a; }
  std::uint32_t source_index_b(std::size_t idx) const { return entries_[idx].edge_b & kEdgeMask; }

  std::span<const EdgeRef> edges() const noexcept { return edges_; }

  std::vector<RewireCandidate> to_vector() const {
    std::vector<RewireCandidate> out;
    out.reserve(size());
    for (const auto& e : entries_) out.push_back(materialize(e));
    return out;
  }

 private:
  friend CandidateSet enumerate_ep(const Graph& g, unsigned threads);

  static constexpr std::uint32_t kOrientBit = 0x80000000u;
  static constexpr std::uint32_t kEdgeMask = 0x7fffffffu;

  struct Entry {
    std::int64_t value;
    std::uint32_t edge_a;
    std::uint32_t edge_b;  // high bit set for Orientation::parallel
  };

  std::pair<EdgeRef, EdgeRef> created(const Entry& e) const {
    const EdgeRef& a = edges_[e.edge_a];
    const EdgeRef& b = edges_[e.edge_b & kEdgeMask];
    EdgeRef x, y;
    if (e.edge_b & kOrientBit) {
      x = EdgeRef::of(a.u, b.v);
      y = EdgeRef::of(a.v, b.u);
    } else {
      x = EdgeRef::of(a.u, b.u);
      y = EdgeRef::of(a.v, b.v);
    }
    return {std::min(x, y), std::max(x, y)};
  }

  RewireCandidate materialize(const Entry& e) const {
    RewireCandidate c;
    c.source_a = edges_[e.edge_a];
    c.source_b = edges_[e.edge_b & kEdgeMask];
    std::tie(c.created_a, c.created_b) = created(e);
    c.value = e.value;
    return c;
  }

  // edges_ is sorted, so index order equals canonical edge order.
  bool before(const Entry& x, const Entry& y) const {
    if (x.value != y.value) return x.value > y.value;
    if (x.edge_a != y.edge_a) return x.edge_a < y.edge_a;
    const auto xb = x.edge_b & kEdgeMask, yb = y.edge_b & kEdgeMask;
    if (xb != yb) return xb < yb;
    return created(x) < created(y);
  }

  std::vector<EdgeRef> edges_;
  std::vector<Entry> entries_;
};

// Every node-disjoint edge pair, in each orientation, whose value is positive
// and whose created edges are absent from g. The result order does not depend
// on `threads`.
inline CandidateSet enumerate_ep(const Graph& g, unsigned threads = 1) {
  CandidateSet set;
  set.edges_ = g.edges();
  const auto& edges = set.edges_;
  const std::size_t m = edges.size();
  std::vector<std::int64_t> deg(g.node_count());
  for (node_id v = 0; v < g.node_count(); ++v) deg[v] = static_cast<std::int64_t>(g.degree(v));

  auto scan = [&](std::size_t first, std::size_t stride, std::vector<CandidateSet::Entry>& out) {
    for (std::size_t a = first; a < m; a += stride) {
      const EdgeRef& ea = edges[a];
      const std::int64_t di = deg[ea.u], dj = deg[ea.v], base_a = di * dj;
      for (std::size_t b = a + 1; b < m; ++b) {
        const EdgeRef& eb = edges[b];
        if (ea.shares_endpoint(eb)) continue;
        const std::int64_t dk = deg[eb.u], dl = deg[eb.v];
        const std::int64_t before = base_a + dk * dl;
        const std::int64_t cross = di * dk + dj * dl - before;
        if (cross > 0 && !g.has_edge(ea.u, eb.u) && !g.has_edge(ea.v, eb.v))
          out.push_back({cross, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
        const std::int64_t par = di * dl + dj * dk - before;
        if (par > 0 && !g.has_edge(ea.u, eb.v) && !g.has_edge(ea.v, eb.u))
          out.push_back({par, static_cast<std::uint32_t>(a),
                         static_cast<std::uint32_t>(b) | CandidateSet::kOrientBit});
      }
    }
  };

  if (threads <= 1 || m < 1024) {
    scan(0, 1, set.entries_);
  } else {
    std::vector<std::vector<CandidateSet::Entry>> parts(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { scan(t, threads, parts[t]); });
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    set.entries_.reserve(total);
    for (auto& p : parts) {
      set.entries_.insert(set.entries_.end(), p.begin(), p.end());
      std::vector<CandidateSet::Entry>().swap(p);
    }
  }
  std::sort(set.entries_.begin(), set.entries_.end(),
            [&set](const auto& x, const auto& y) { return set.before(x, y); });
  return set;
}

// Constraint 1: a source edge is rewired at most once.
// Constraint 2: a created edge is produced at most once.
inline bool conflicts(const RewireCandidate& a, const RewireCandidate& b) noexcept {
  auto shares = [](const EdgeRef& x1, const EdgeRef& x2, const EdgeRef& y1, const EdgeRef& y2) {
    return x1 == y1 || x1 == y2 || x2 == y1 || x2 == y2;
  };
  return shares(a.source_a, a.source_b, b.source_a, b.source_b) ||
         shares(a.created_a, a.created_b, b.created_a, b.created_b);
}

inline bool admissible(std::span<const RewireCandidate> plan) noexcept {
  for (std::size_t i = 0; i < plan.size(); ++i)
    for (std::size_t j = i + 1; j < plan.size(); ++j)
      if (conflicts(plan[i], plan[j])) return false;
  return true;
}

// Candidates as vertices, conflicts as edges. neighbors[i] is sorted.
struct ConflictGraph {
  std::vector<RewireCandidate> candidates;
  std::vector<std::vector<std::uint32_t>> neighbors;

  bool conflict(std::size_t i, std::size_t j) const {
    return std::binary_search(neighbors[i].begin(), neighbors[i].end(), static_cast<std::uint32_t>(j));
  }
};

inline ConflictGraph build_conflict_graph(std::vector<RewireCandidate> candidates) {
  ConflictGraph cg;
  cg.candidates = std::move(candidates);
  const auto n = cg.candidates.size();
  std::map<EdgeRef, std::vector<std::uint32_t>> by_source, by_created;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& c = cg.candidates[i];
    by_source[c.source_a].push_back(i);
    by_source[c.source_b].push_back(i);
    by_created[c.created_a].push_back(i);
    by_created[c.created_b].push_back(i);
  }
  cg.neighbors.assign(n, {});
  auto link = [&](const std::map<EdgeRef, std::vector<std::uint32_t>>& buckets) {
    for (const auto& [edge, members] : buckets)
      for (auto a : members)
        for (auto b : members)
          if (a != b) cg.neighbors[a].push_back(b);
  };
  link(by_source);
  link(by_created);
  for (auto& nb : cg.neighbors) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return cg;
}

inline void write_candidates_csv(std::ostream& out, const Graph& g, const CandidateSet& ep) {
  out << "source_a_u,source_a_v,source_b_u,source_b_v,created_a_u,created_a_v,created_b_u,created_b_v,value\n";
  for (std::size_t i = 0; i < ep.size(); ++i) {
    const auto c = ep[i];
    for (const EdgeRef& e : {c.source_a, c.source_b, c.created_a, c.created_b})
      out << g.label(e.u) << ',' << g.label(e.v) << ',';
    out << c.value << '\n';
  }
}

}  // namespace rewire

#endif  // REWIRE_CANDIDATES_HPP_
