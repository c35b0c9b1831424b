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

#ifndef CAUSALKG_GRAPH_QUERY_H_
#define CAUSALKG_GRAPH_QUERY_H_

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/graph.h"

namespace causalkg {

using EdgeKey = std::pair<int, int>;  // (source, target) topic ids

struct SubgraphView {
  std::set<int> target_nodes;
  std::set<int> included_nodes;
  std::set<EdgeKey> included_edges;
  std::set<EdgeKey> highlight_edges;

  bool operator==(const SubgraphView &) const = default;
};

// Nodes whose label contains every term (case-insensitive), in any order.
std::set<int> FindTargets(const CausalGraph &graph,
                          const std::vector<std::string> &terms);

// Targets plus their direct predecessors and successors, with every edge
// running between included nodes. Unknown targets are ignored.
SubgraphView OneHopSubgraph(const CausalGraph &graph, const std::set<int> &targets);

struct Successor {
  int topic_id = 0;
  int support = 0;
  std::string label;
};

// Out-neighbours by descending support, ties by label.
std::vector<Successor> SuccessorsBySupport(const CausalGraph &graph, int topic_id);

struct Chain {
  std::vector<int> nodes;
  int confidence = 0;  // minimum edge support along the chain

  bool operator==(const Chain &) const = default;
};

// Every simple directed path leaving `source` with 1..max_len edges, in
// depth-first order (out-edges visited by ascending target id).
std::vector<Chain> TransitiveChains(const CausalGraph &graph, int source,
                                    int max_len);

struct TrendBucket {
  std::string label;
  std::vector<std::string> sampled_docs;  // sorted
  SubgraphView view;
  int highlight_count = 0;
};

struct TrendReport {
  std::vector<TrendBucket> buckets;
  int sample_size = 0;
  std::vector<std::string> rejected_docs;
};

// Buckets documents by date, down-samples every bucket (seeded, uniform,
// without replacement) to the size of the smallest non-empty bucket, and
// highlights the one-hop edges around the search targets that have evidence
// from a sampled document of that bucket.
TrendReport TrendAnalysis(const CausalGraph &graph, const Corpus &corpus,
                          const std::vector<Date> &boundaries,
                          const std::vector<std::string> &terms,
                          std::uint64_t seed);

}  // namespace causalkg

#endif  // CAUSALKG_GRAPH_QUERY_H_
