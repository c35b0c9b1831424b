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

#ifndef CAUSALKG_GRAPH_STATS_H_
#define CAUSALKG_GRAPH_STATS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "causalkg/graph.h"

namespace causalkg {

// Undirected simple projection: adjacency lists (sorted, no self-loops, no
// duplicates) over node positions 0..n-1.
std::vector<std::vector<int>> UndirectedProjection(const CausalGraph &graph);

struct EigenvectorOptions {
  double tolerance = 1e-8;
  int max_iterations = 1000;
};

struct EigenvectorResult {
  std::vector<double> centrality;  // L2-normalized, parallel to nodes()
  int iterations = 0;
  bool converged = false;
};

// Power iteration x <- (A + I) x on the undirected projection, starting from
// the all-ones vector; stops once the max-abs change drops below tolerance.
// The identity shift keeps bipartite components from oscillating without
// changing the eigenvectors.
EigenvectorResult EigenvectorCentrality(const std::vector<std::vector<int>> &adjacency,
                                        const EigenvectorOptions &options = {});

struct GraphStats {
  int node_count = 0;
  int edge_count = 0;
  std::int64_t total_weight = 0;
  int subgraph_count = 0;  // weakly connected components
  double avg_clustering_coefficient = 0.0;
  double avg_degree_centrality = 0.0;
  // Unset when power iteration did not converge.
  std::optional<double> avg_eigenvector_centrality;
  double transitivity = 0.0;
  std::int64_t triangles = 0;
  std::int64_t connected_triads = 0;
};

GraphStats ComputeStats(const CausalGraph &graph,
                        const EigenvectorOptions &options = {});

}  // namespace causalkg

#endif  // CAUSALKG_GRAPH_STATS_H_
