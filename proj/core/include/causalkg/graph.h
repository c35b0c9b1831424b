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

#ifndef CAUSALKG_GRAPH_H_
#define CAUSALKG_GRAPH_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "causalkg/clustering.h"
#include "causalkg/relation.h"

namespace causalkg {

struct KgNode {
  int topic_id = 0;
  std::string display_label;
  std::vector<std::string> member_args;

  bool operator==(const KgNode &) const = default;
};

// One supporting relation occurrence of an edge.
struct Evidence {
  std::string relation_id;
  std::string sentence_id;
  Provenance provenance = Provenance::kPattern;

  bool operator==(const Evidence &) const = default;
};

// Directed cause -> effect edge between two topics.
struct KgEdge {
  int source = 0;
  int target = 0;
  int support = 0;  // number of supporting relation occurrences
  std::vector<Evidence> evidence;

  bool operator==(const KgEdge &) const = default;
};

// Directed weighted graph over topic nodes. Immutable once built; nodes are
// sorted by topic id and edges by (source, target).
class CausalGraph {
 public:
  CausalGraph() = default;
  // Throws InputError on self-loops, duplicate node ids or edges whose
  // endpoints are not nodes.
  CausalGraph(std::vector<KgNode> nodes, std::vector<KgEdge> edges);

  const std::vector<KgNode> &nodes() const { return nodes_; }
  const std::vector<KgEdge> &edges() const { return edges_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::int64_t total_weight() const;

  bool HasNode(int topic_id) const { return node_index_.contains(topic_id); }
  const KgNode &node(int topic_id) const;
  int NodeIndex(int topic_id) const;  // -1 when absent

  const KgEdge *FindEdge(int source, int target) const;
  // Indices into edges().
  const std::vector<int> &OutEdges(int topic_id) const;
  const std::vector<int> &InEdges(int topic_id) const;

  bool operator==(const CausalGraph &other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  std::vector<KgNode> nodes_;
  std::vector<KgEdge> edges_;
  std::map<int, int> node_index_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// One node per topic with at least one member and one edge per ordered topic
// pair, supported by every relation occurrence mapping onto it. Relations
// whose endpoints share a topic are rejected (drop them first). Labels come
// from `topics` when present, otherwise "topic_<id>".
CausalGraph BuildGraph(std::span<const CausalRelation> relations,
                       const TopicAssignment &assignment,
                       std::span<const TopicCluster> topics);

}  // namespace causalkg

#endif  // CAUSALKG_GRAPH_H_
