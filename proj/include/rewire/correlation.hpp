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

#ifndef REWIRE_CORRELATION_HPP_
#define REWIRE_CORRELATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "rewire/error.hpp"
#include "rewire/graph.hpp"

namespace rewire {

__extension__ using int128 = __int128;

// Integer edge-degree moments. Each edge contributes both endpoint orderings,
// so sum_deg_sq == sum over edges of (j + k) and sum_deg_cube == sum of
// (j^2 + k^2). Only sum_jk (the s-metric) changes under degree-preserving
// rewiring.
struct DegreeMoments {
  std::int64_t edges = 0;
  std::int64_t sum_jk = 0;
  std::int64_t sum_deg_sq = 0;
  std::int64_t sum_deg_cube = 0;

  // 4 M^2 times the assortativity numerator and denominator.
  int128 scaled_numerator() const {
    return int128{4} * edges * sum_jk - int128{sum_deg_sq} * sum_deg_sq;
  }
  int128 scaled_denominator() const {
    return int128{2} * edges * sum_deg_cube - int128{sum_deg_sq} * sum_deg_sq;
  }
};

inline DegreeMoments degree_moments(const Graph& g) {
  DegreeMoments m;
  m.edges = static_cast<std::int64_t>(g.edge_count());
  for (node_id v = 0; v < g.node_count(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    m.sum_deg_sq += d * d;
    m.sum_deg_cube += d * d * d;
    for (node_id w : g.neighbors(v))
      if (v < w) m.sum_jk += d * static_cast<std::int64_t>(g.degree(w));
  }
  return m;
}

inline std::int64_t s_metric(const Graph& g) { return degree_moments(g).sum_jk; }

// Denominator of the degree-correlation coefficient, in its M^-1 form.
inline double assortativity_denominator(const Graph& g) {
  const auto m = degree_moments(g);
  if (m.edges == 0) return 0.0;
  return static_cast<double>(m.scaled_denominator()) /
         (4.0 * static_cast<double>(m.edges) * static_cast<double>(m.edges));
}

inline double assortativity(const DegreeMoments& m) {
  if (m.edges == 0) throw undefined_metric("assortativity of an edgeless graph");
  const int128 den = m.scaled_denominator();
  if (den == 0) throw undefined_metric("assortativity undefined: all endpoint degrees are equal");
  return static_cast<double>(m.scaled_numerator()) / static_cast<double>(den);
}

inline double assortativity(const Graph& g) { return assortativity(degree_moments(g)); }

// Change in assortativity produced by an s-metric change of delta_s on any
// graph sharing g's degree sequence.
inline double delta_r_from_delta_s(const DegreeMoments& m, std::int64_t delta_s) {
  const int128 den = m.scaled_denominator();
  if (den == 0) throw undefined_metric("assortativity undefined: all endpoint degrees are equal");
  return static_cast<double>(int128{4} * m.edges * delta_s) / static_cast<double>(den);
}

enum class Orientation : std::uint8_t {
  cross,     // (i,j),(k,l) -> (i,k),(j,l)
  parallel,  // (i,j),(k,l) -> (i,l),(j,k)
};

inline constexpr std::int64_t swap_gain(std::int64_t di, std::int64_t dj, std::int64_t dk, std::int64_t dl,
                                        Orientation o) noexcept {
  const std::int64_t before = di * dj + dk * dl;
  return o == Orientation::cross ? (di * dk + dj * dl) - before : (di * dl + dj * dk) - before;
}

inline std::int64_t candidate_value(const Graph& g, const EdgeRef& e1, const EdgeRef& e2, Orientation o) {
  if (e1.shares_endpoint(e2)) throw invalid_pair("edges share an endpoint");
  auto d = [&](node_id v) { return static_cast<std::int64_t>(g.degree(v)); };
  return swap_gain(d(e1.u), d(e1.v), d(e2.u), d(e2.v), o);
}

// Fractional (average) ranks, 1-based.
inline std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && xs[order[j]] == xs[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = r;
    i = j;
  }
  return ranks;
}

inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw error("pearson: length mismatch");
  if (xs.empty()) throw undefined_metric("pearson: empty input");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw undefined_metric("correlation undefined: constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline double spearman_rank_corr(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw error("spearman: length mismatch");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

// Rank analogue of assortativity over the 2M ordered endpoint pairs. Both
// coordinates range over the same degree multiset, so one rank table serves.
inline double spearman_degree_correlation(const Graph& g) {
  std::map<std::size_t, std::size_t> count;  // degree -> endpoint occurrences
  for (node_id v = 0; v < g.node_count(); ++v)
    if (g.degree(v) > 0) count[g.degree(v)] += g.degree(v);
  std::map<std::size_t, double> rank;
  std::size_t below = 0;
  for (auto [d, c] : count) {
    rank[d] = static_cast<double>(below) + 0.5 * static_cast<double>(c + 1);
    below += c;
  }
  std::vector<double> xs, ys;
  xs.reserve(2 * g.edge_count());
  ys.reserve(2 * g.edge_count());
  for (const auto& e : g.edges()) {
    const double a = rank[g.degree(e.u)], b = rank[g.degree(e.v)];
    xs.push_back(a);
    ys.push_back(b);
    xs.push_back(b);
    ys.push_back(a);
  }
  if (xs.empty()) throw undefined_metric("spearman degree correlation of an edgeless graph");
  return pearson(xs, ys);
}

struct CorrelationReport {
  std::optional<double> assortativity;
  std::int64_t s_metric = 0;
  std::optional<double> spearman_degree;
  double denom = 0.0;
};

inline CorrelationReport correlation_report(const Graph& g) {
  CorrelationReport rep;
  const auto m = degree_moments(g);
  rep.s_metric = m.sum_jk;
  if (m.edges > 0) {
    rep.denom = static_cast<double>(m.scaled_denominator()) /
                (4.0 * static_cast<double>(m.edges) * static_cast<double>(m.edges));
    if (m.scaled_denominator() != 0) {
      rep.assortativity = assortativity(m);
      rep.spearman_degree = spearman_degree_correlation(g);
    }
  }
  return rep;
}

}  // namespace rewire

#endif  // REWIRE_CORRELATION_HPP_
