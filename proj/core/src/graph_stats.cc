// Copyright 2026 The causalkg Authors.
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

#include "causalkg/graph_stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace causalkg {

std::vector<std::vector<int>> UndirectedProjection(const CausalGraph &graph) {
  std::vector<std::vector<int>> adj(graph.node_count());
  for (const KgEdge &e : graph.edges()) {
    const int u = graph.NodeIndex(e.source);
    const int v = graph.NodeIndex(e.target);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto &list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

EigenvectorResult EigenvectorCentrality(const std::vector<std::vector<int>> &adjacency,
                                        const EigenvectorOptions &options) {
  const std::size_t n = adjacency.size();
  EigenvectorResult result;
  if (n == 0) {
    result.converged = true;
    return result;
  }
  std::vector<double> x(n, 1.0 / std::sqrt(double(n)));
  std::vector<double> y(n);
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    for (std::size_t u = 0; u < n; ++u) {
      double sum = x[u];
      for (int v : adjacency[u]) sum += x[v];
      y[u] = sum;
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      y[u] /= norm;
      change = std::max(change, std::abs(y[u] - x[u]));
    }
    x.swap(y);
    result.iterations = iter;
    if (change < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.centrality = std::move(x);
  return result;
}

GraphStats ComputeStats(const CausalGraph &graph, const EigenvectorOptions &options) {
  GraphStats s;
  s.node_count = graph.node_count();
  s.edge_count = graph.edge_count();
  s.total_weight = graph.total_weight();
  const int n = s.node_count;
  if (n == 0) return s;

  const auto adj = UndirectedProjection(graph);

  // Components by union-find.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int u) {
    while (parent[u] != u) u = parent[u] = parent[parent[u]];
    return u;
  };
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) parent[find(u)] = find(v);
  }
  for (int u = 0; u < n; ++u) s.subgraph_count += find(u) == u;

  // Triangles through each node; each triangle is seen from all 3 corners.
  std::vector<std::int64_t> corner(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      if (v <= u) continue;
      // Common neighbours w > v close a triangle u < v < w.
      auto a = std::upper_bound(adj[u].begin(), adj[u].end(), v);
      auto b = std::upper_bound(adj[v].begin(), adj[v].end(), v);
      while (a != adj[u].end() && b != adj[v].end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++corner[u];
          ++corner[v];
          ++corner[*a];
          ++s.triangles;
          ++a;
          ++b;
        }
      }
    }
  }

  double clustering = 0.0;
  double degree = 0.0;
  for (int u = 0; u < n; ++u) {
    const std::int64_t d = static_cast<std::int64_t>(adj[u].size());
    const std::int64_t pairs = d * (d - 1) / 2;
    s.connected_triads += pairs;
    if (pairs > 0) clustering += double(corner[u]) / double(pairs);
    if (n > 1) degree += double(d) / double(n - 1);
  }
  s.avg_clustering_coefficient = clustering / n;
  s.avg_degree_centrality = degree / n;
  s.transitivity =
      s.connected_triads == 0 ? 0.0 : 3.0 * double(s.triangles) / double(s.connected_triads);

  EigenvectorResult eig = EigenvectorCentrality(adj, options);
  if (eig.converged) {
    s.avg_eigenvector_centrality =
        std::accumulate(eig.centrality.begin(), eig.centrality.end(), 0.0) / n;
  }
  return s;
}

}  // namespace causalkg
