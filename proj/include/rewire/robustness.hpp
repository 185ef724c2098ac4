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

#ifndef REWIRE_ROBUSTNESS_HPP_
#define REWIRE_ROBUSTNESS_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "rewire/correlation.hpp"
#include "rewire/error.hpp"
#include "rewire/graph.hpp"

namespace rewire {

enum class SpectrumMethod { automatic, dense, iterative };

// Graphs up to this many nodes get a full dense eigendecomposition.
inline constexpr std::size_t kDenseSpectrumLimit = 2000;

struct SpectrumReport {
  double spectral_radius = 0.0;
  std::optional<double> natural_connectivity;
  SpectrumMethod method = SpectrumMethod::dense;
  double residual = 0.0;
};

namespace detail {

inline Eigen::MatrixXd adjacency_matrix(const Graph& g, std::span<const node_id> nodes) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  std::vector<std::int64_t> local(g.node_count(), -1);
  for (Eigen::Index i = 0; i < n; ++i) local[nodes[i]] = i;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (node_id w : g.neighbors(nodes[i]))
      if (local[w] >= 0) a(i, local[w]) = 1.0;
  return a;
}

inline std::vector<node_id> all_nodes(const Graph& g) {
  std::vector<node_id> v(g.node_count());
  std::iota(v.begin(), v.end(), node_id{0});
  return v;
}

inline Eigen::VectorXd adjacency_eigenvalues(const Graph& g) {
  const auto nodes = all_nodes(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g, nodes), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw error("adjacency eigendecomposition failed");
  return solver.eigenvalues();
}

struct PowerResult {
  double value;
  std::vector<double> vector;
  double residual;
};

// Dominant eigenpair of the adjacency restricted to `nodes`, by power
// iteration on A + I (the shift keeps bipartite graphs from oscillating).
inline PowerResult power_iteration(const Graph& g, std::span<const node_id> nodes, double tol,
                                   std::size_t max_iter = 200'000) {
  const std::size_t n = nodes.size();
  std::vector<std::int64_t> local(g.node_count(), -1);
  for (std::size_t i = 0; i < n; ++i) local[nodes[i]] = static_cast<std::int64_t>(i);
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), ax(n);
  auto multiply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (node_id w : g.neighbors(nodes[i]))
        if (local[w] >= 0) s += in[static_cast<std::size_t>(local[w])];
      out[i] = s;
    }
  };
  double lambda = 0, residual = 0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    multiply(x, ax);
    lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    residual = 0;
    for (std::size_t i = 0; i < n; ++i) residual += (ax[i] - lambda * x[i]) * (ax[i] - lambda * x[i]);
    residual = std::sqrt(residual);
    if (residual <= tol * std::max(1.0, lambda)) return {lambda, x, residual};
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ax[i] += x[i];
      norm += ax[i] * ax[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / norm;
  }
  throw convergence_error("power iteration did not converge", residual);
}

}  // namespace detail

inline double natural_connectivity_from(const Eigen::VectorXd& eig) {
  const double top = eig.maxCoeff();
  double acc = 0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) acc += std::exp(eig[i] - top);
  return top + std::log(acc / static_cast<double>(eig.size()));
}

// Largest adjacency eigenvalue.
inline SpectrumReport spectral_radius_report(const Graph& g, double tol = 1e-12,
                                             SpectrumMethod method = SpectrumMethod::automatic) {
  if (g.node_count() == 0) throw undefined_metric("spectral radius of an empty graph");
  SpectrumReport rep;
  if (g.edge_count() == 0) return rep;
  if (method == SpectrumMethod::automatic)
    method = g.node_count() <= kDenseSpectrumLimit ? SpectrumMethod::dense : SpectrumMethod::iterative;
  rep.method = method;
  if (method == SpectrumMethod::dense) {
    rep.spectral_radius = detail::adjacency_eigenvalues(g).maxCoeff();
  } else {
    const auto nodes = detail::all_nodes(g);
    auto pr = detail::power_iteration(g, nodes, tol);
    rep.spectral_radius = pr.value;
    rep.residual = pr.residual;
  }
  return rep;
}

inline double spectral_radius(const Graph& g, double tol = 1e-12) { return spectral_radius_report(g, tol).spectral_radius; }

// ln of the mean of exp(lambda_i) over all adjacency eigenvalues, shifted by
// the largest eigenvalue to stay finite.
inline double natural_connectivity(const Graph& g) {
  if (g.node_count() == 0) throw undefined_metric("natural connectivity of an empty graph");
  return natural_connectivity_from(detail::adjacency_eigenvalues(g));
}

inline SpectrumReport spectrum_report(const Graph& g) {
  if (g.node_count() == 0) throw undefined_metric("spectrum of an empty graph");
  const auto eig = detail::adjacency_eigenvalues(g);
  SpectrumReport rep;
  rep.spectral_radius = eig.maxCoeff();
  rep.natural_connectivity = natural_connectivity_from(eig);
  return rep;
}

enum class CentralityKind { betweenness, closeness, eigenvector, kshell };

inline std::string_view centrality_name(CentralityKind k) {
  switch (k) {
    case CentralityKind::betweenness: return "betweenness";
    case CentralityKind::closeness: return "closeness";
    case CentralityKind::eigenvector: return "eigenvector";
    case CentralityKind::kshell: return "kshell";
  }
  return "?";
}

struct CentralityVector {
  CentralityKind kind = CentralityKind::kshell;
  std::vector<double> scores;
  bool largest_component_only = false;  // eigenvector on a disconnected graph
};

namespace detail {

// Runs fn(source, accumulator) over all sources in fixed-size chunks and sums
// the chunk accumulators in chunk order, so the result does not depend on
// the thread count.
template <typename Fn>
std::vector<double> per_source_sum(std::size_t n, unsigned threads, Fn fn) {
  constexpr std::size_t chunk = 64;
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<std::vector<double>> partial(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      partial[c].assign(n, 0.0);
      for (std::size_t s = c * chunk; s < std::min(n, (c + 1) * chunk); ++s) fn(static_cast<node_id>(s), partial[c]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<double> total(n, 0.0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < n; ++i) total[i] += p[i];
  return total;
}

}  // namespace detail

// Shortest-path betweenness (Brandes), normalized by 2 / ((n-1)(n-2)).
inline std::vector<double> betweenness_centrality(const Graph& g, unsigned threads = 1) {
  const std::size_t n = g.node_count();
  auto scores = detail::per_source_sum(n, threads, [&g, n](node_id s, std::vector<double>& acc) {
    std::vector<std::int64_t> dist(n, -1);
    std::vector<double> sigma(n, 0.0), delta(n, 0.0);
    std::vector<node_id> order;
    order.reserve(n);
    std::queue<node_id> frontier;
    dist[s] = 0;
    sigma[s] = 1;
    frontier.push(s);
    while (!frontier.empty()) {
      node_id v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (node_id w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const node_id w = *it;
      for (node_id v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) acc[w] += delta[w];
    }
  });
  // Each unordered pair was counted from both ends.
  const double scale = n > 2 ? 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2)) : 0.0;
  for (auto& x : scores) x *= scale;
  return scores;
}

// (r-1)/sum(d) over the r nodes reachable from v (v included), scaled by
// (r-1)/(n-1).
inline std::vector<double> closeness_centrality(const Graph& g, unsigned threads = 1) {
  const std::size_t n = g.node_count();
  return detail::per_source_sum(n, threads, [&g, n](node_id s, std::vector<double>& acc) {
    std::vector<std::int64_t> dist(n, -1);
    std::queue<node_id> frontier;
    dist[s] = 0;
    frontier.push(s);
    std::int64_t total = 0, reached = 1;
    while (!frontier.empty()) {
      node_id v = frontier.front();
      frontier.pop();
      for (node_id w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          total += dist[w];
          ++reached;
          frontier.push(w);
        }
    }
    if (total > 0 && n > 1)
      acc[s] = static_cast<double>(reached - 1) / static_cast<double>(total) * static_cast<double>(reached - 1) /
               static_cast<double>(n - 1);
  });
}

// Dominant adjacency eigenvector, nonnegative with unit norm. On a
// disconnected graph only the largest component (lowest id on ties) is
// scored; everything else is zero.
inline CentralityVector eigenvector_centrality(const Graph& g, double tol = 1e-12) {
  if (g.edge_count() == 0) throw undefined_metric("eigenvector centrality of an edgeless graph");
  CentralityVector out{CentralityKind::eigenvector, std::vector<double>(g.node_count(), 0.0), false};
  const auto comps = connected_components(g);
  std::vector<std::size_t> sizes(comps.count, 0);
  for (auto c : comps.id) ++sizes[c];
  const auto biggest = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<node_id> nodes;
  for (node_id v = 0; v < g.node_count(); ++v)
    if (comps.id[v] == biggest) nodes.push_back(v);
  out.largest_component_only = comps.count > 1;

  std::vector<double> vec(nodes.size());
  if (nodes.size() <= kDenseSpectrumLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(detail::adjacency_matrix(g, nodes));
    if (solver.info() != Eigen::Success) throw error("adjacency eigendecomposition failed");
    const Eigen::VectorXd top = solver.eigenvectors().col(solver.eigenvalues().size() - 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) vec[i] = top[static_cast<Eigen::Index>(i)];
  } else {
    vec = detail::power_iteration(g, nodes, tol).vector;
  }
  const double sign = std::accumulate(vec.begin(), vec.end(), 0.0) < 0 ? -1.0 : 1.0;
  double norm = 0;
  for (auto& x : vec) {
    x = std::max(0.0, sign * x);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  for (std::size_t i = 0; i < nodes.size(); ++i) out.scores[nodes[i]] = vec[i] / norm;
  return out;
}

// Core numbers by bucket peeling (Batagelj-Zaversnik).
inline std::vector<double> kshell_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n), pos(n), vert(n);
  std::size_t max_deg = 0;
  for (node_id v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (auto d : deg) ++bin[d];
  for (std::size_t d = 0, start = 0; d <= max_deg; ++d) {
    const auto count = bin[d];
    bin[d] = start;
    start += count;
  }
  for (node_id v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = vert[i];
    for (node_id u : g.neighbors(static_cast<node_id>(v))) {
      if (deg[u] > deg[v]) {
        const auto du = deg[u], pu = pos[u], pw = bin[du];
        const auto w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return {deg.begin(), deg.end()};
}

inline CentralityVector centrality(const Graph& g, CentralityKind kind, unsigned threads = 1) {
  switch (kind) {
    case CentralityKind::betweenness: return {kind, betweenness_centrality(g, threads), false};
    case CentralityKind::closeness: return {kind, closeness_centrality(g, threads), false};
    case CentralityKind::eigenvector: return eigenvector_centrality(g);
    case CentralityKind::kshell: return {kind, kshell_centrality(g), false};
  }
  throw error("unknown centrality");
}

// Rank stability of a centrality under rewiring: Spearman correlation of the
// two score vectors over the ceil(fraction * n) nodes ranked highest by the
// original scores (ties by node id).
inline double centrality_sc(const CentralityVector& original, const CentralityVector& rewired,
                            double top_fraction = 1.0) {
  if (original.kind != rewired.kind || original.scores.size() != rewired.scores.size())
    throw error("centrality vectors are not comparable");
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) throw error("top fraction must lie in (0, 1]");
  const std::size_t n = original.scores.size();
  auto take = static_cast<std::size_t>(std::ceil(top_fraction * static_cast<double>(n) - 1e-9));
  take = std::clamp<std::size_t>(take, 1, n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return original.scores[a] > original.scores[b]; });
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < take; ++i) {
    xs.push_back(original.scores[order[i]]);
    ys.push_back(rewired.scores[order[i]]);
  }
  return spearman_rank_corr(xs, ys);
}

}  // namespace rewire

#endif  // REWIRE_ROBUSTNESS_HPP_
