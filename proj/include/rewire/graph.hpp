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

#ifndef REWIRE_GRAPH_HPP_
#define REWIRE_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rewire/error.hpp"

namespace rewire {

using node_id = std::uint32_t;

// Undirected edge with canonical orientation u < v.
struct EdgeRef {
  node_id u = 0;
  node_id v = 0;

  static constexpr EdgeRef of(node_id a, node_id b) noexcept {
    return a < b ? EdgeRef{a, b} : EdgeRef{b, a};
  }
  constexpr bool touches(node_id x) const noexcept { return u == x || v == x; }
  constexpr bool shares_endpoint(const EdgeRef& o) const noexcept {
    return touches(o.u) || touches(o.v);
  }
  friend constexpr auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// A degree-preserving double edge swap: both sources are removed, both
// created edges are added. The four endpoints are the same on both sides.
struct EdgeSwap {
  EdgeRef source_a;
  EdgeRef source_b;
  EdgeRef created_a;
  EdgeRef created_b;

  EdgeSwap reversed() const noexcept { return {created_a, created_b, source_a, source_b}; }
  friend constexpr bool operator==(const EdgeSwap&, const EdgeSwap&) = default;
};

// Simple undirected graph over dense ids 0..n-1. Each node carries an
// external label (the token it was parsed from, or its decimal id).
// Neighbor lists are kept sorted, so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels_.push_back(std::to_string(i));
      index_.emplace(labels_.back(), static_cast<node_id>(i));
    }
  }

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(node_id v) const { return adjacency_.at(v).size(); }
  std::span<const node_id> neighbors(node_id v) const { return adjacency_.at(v); }

  bool has_edge(node_id a, node_id b) const {
    if (a >= node_count() || b >= node_count() || a == b) return false;
    const auto& small = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const node_id other = (&small == &adjacency_[a]) ? b : a;
    return std::binary_search(small.begin(), small.end(), other);
  }
  bool has_edge(const EdgeRef& e) const { return has_edge(e.u, e.v); }

  const std::string& label(node_id v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  std::optional<node_id> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  node_id add_node(std::string label) {
    const auto id = static_cast<node_id>(adjacency_.size());
    adjacency_.emplace_back();
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    return id;
  }

  // Returns false if the edge already exists. Self-loops are rejected.
  bool add_edge(node_id a, node_id b) {
    if (a == b) throw validation_error("self-loop on node '" + label(a) + "'");
    if (a >= node_count() || b >= node_count()) throw validation_error("node id out of range");
    auto& na = adjacency_[a];
    auto pos = std::lower_bound(na.begin(), na.end(), b);
    if (pos != na.end() && *pos == b) return false;
    na.insert(pos, b);
    auto& nb = adjacency_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
    return true;
  }
  bool add_edge(const EdgeRef& e) { return add_edge(e.u, e.v); }

  // Returns false if the edge was absent.
  bool remove_edge(node_id a, node_id b) {
    if (!has_edge(a, b)) return false;
    auto& na = adjacency_[a];
    na.erase(std::lower_bound(na.begin(), na.end(), b));
    auto& nb = adjacency_[b];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
    --edge_count_;
    return true;
  }
  bool remove_edge(const EdgeRef& e) { return remove_edge(e.u, e.v); }

  // All edges in canonical order (sorted by (u, v), u < v).
  std::vector<EdgeRef> edges() const {
    std::vector<EdgeRef> out;
    out.reserve(edge_count_);
    for (node_id u = 0; u < node_count(); ++u)
      for (node_id v : adjacency_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<node_id>> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, node_id> index_;
  std::size_t edge_count_ = 0;
};

struct ParseReport {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t duplicate_edges = 0;
};

// Reads a whitespace-separated edge list. '#' and '%' lines are comments.
// Tokens past the second on a line (weights, timestamps) are ignored.
inline Graph parse_edge_list(std::istream& in, ParseReport* report = nullptr) {
  Graph g;
  ParseReport rep;
  std::string line;
  auto intern = [&](const std::string& tok) {
    if (auto id = g.find(tok)) return *id;
    return g.add_node(tok);
  };
  while (std::getline(in, line)) {
    ++rep.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') {
      ++rep.comment_lines;
      continue;
    }
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a >> b)) throw parse_error(rep.lines, "expected two node labels, got '" + line + "'");
    if (a == b) throw validation_error("line " + std::to_string(rep.lines) + ": self-loop on node '" + a + "'");
    const node_id ia = intern(a);
    const node_id ib = intern(b);
    if (!g.add_edge(ia, ib)) ++rep.duplicate_edges;
  }
  if (report) *report = rep;
  return g;
}

inline Graph parse_edge_list(std::string_view text, ParseReport* report = nullptr) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, report);
}

// Canonical writer: one "label_u label_v" line per edge, sorted by internal id.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> deg(g.node_count());
  for (node_id v = 0; v < g.node_count(); ++v) deg[v] = g.degree(v);
  return deg;
}

// First violated precondition of `s` on `g`, or nullptr if it applies.
inline const char* rewiring_violation(const Graph& g, const EdgeSwap& s) {
  const node_id ends[4] = {s.source_a.u, s.source_a.v, s.source_b.u, s.source_b.v};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ends[i] == ends[j]) return "source edges share an endpoint";
  auto covered = [&](const EdgeRef& e) {
    return std::find(std::begin(ends), std::end(ends), e.u) != std::end(ends) &&
           std::find(std::begin(ends), std::end(ends), e.v) != std::end(ends);
  };
  if (!covered(s.created_a) || !covered(s.created_b) || s.created_a.shares_endpoint(s.created_b) ||
      s.created_a.u == s.created_a.v || s.created_b.u == s.created_b.v)
    return "created edges do not re-pair the four source endpoints";
  if (!g.has_edge(s.source_a) || !g.has_edge(s.source_b)) return "source edge missing from graph";
  if (g.has_edge(s.created_a) || g.has_edge(s.created_b)) return "created edge already present in graph";
  return nullptr;
}

inline bool can_rewire(const Graph& g, const EdgeSwap& s) { return rewiring_violation(g, s) == nullptr; }

inline void check_rewiring(const Graph& g, const EdgeSwap& s) {
  if (const char* why = rewiring_violation(g, s)) throw rewiring_inapplicable(why);
}

inline void apply_rewiring_in_place(Graph& g, const EdgeSwap& s) {
  check_rewiring(g, s);
  g.remove_edge(s.source_a);
  g.remove_edge(s.source_b);
  g.add_edge(s.created_a);
  g.add_edge(s.created_b);
}

inline Graph apply_rewiring(Graph g, const EdgeSwap& s) {
  apply_rewiring_in_place(g, s);
  return g;
}

// Component id per node (ids assigned in order of smallest member) and count.
struct Components {
  std::vector<std::uint32_t> id;
  std::size_t count = 0;
};

inline Components connected_components(const Graph& g) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  Components c;
  c.id.assign(g.node_count(), unset);
  std::vector<node_id> stack;
  for (node_id s = 0; s < g.node_count(); ++s) {
    if (c.id[s] != unset) continue;
    const auto cid = static_cast<std::uint32_t>(c.count++);
    c.id[s] = cid;
    stack.push_back(s);
    while (!stack.empty()) {
      node_id x = stack.back();
      stack.pop_back();
      for (node_id y : g.neighbors(x))
        if (c.id[y] == unset) {
          c.id[y] = cid;
          stack.push_back(y);
        }
    }
  }
  return c;
}

}  // namespace rewire

#endif  // REWIRE_GRAPH_HPP_
