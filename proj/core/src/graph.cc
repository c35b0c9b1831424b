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

#include "causalkg/graph.h"

#include <algorithm>
#include <tuple>

#include "causalkg/error.h"

namespace causalkg {

CausalGraph::CausalGraph(std::vector<KgNode> nodes, std::vector<KgEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const KgNode &a, const KgNode &b) { return a.topic_id < b.topic_id; });
  std::sort(edges_.begin(), edges_.end(), [](const KgEdge &a, const KgEdge &b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!node_index_.emplace(nodes_[i].topic_id, static_cast<int>(i)).second) {
      throw InputError("duplicate node " + std::to_string(nodes_[i].topic_id));
    }
  }
  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const KgEdge &e = edges_[i];
    const std::string name = std::to_string(e.source) + "->" + std::to_string(e.target);
    if (e.source == e.target) throw InputError("self-loop edge " + name);
    if (!HasNode(e.source) || !HasNode(e.target)) {
      throw InputError("edge " + name + " has an unknown endpoint");
    }
    if (e.support < 1) throw InputError("edge " + name + " has no support");
    if (!edge_index_.emplace(std::pair(e.source, e.target), static_cast<int>(i)).second) {
      throw InputError("duplicate edge " + name);
    }
    out_[NodeIndex(e.source)].push_back(static_cast<int>(i));
    in_[NodeIndex(e.target)].push_back(static_cast<int>(i));
  }
}

std::int64_t CausalGraph::total_weight() const {
  std::int64_t total = 0;
  for (const KgEdge &e : edges_) total += e.support;
  return total;
}

const KgNode &CausalGraph::node(int topic_id) const {
  int i = NodeIndex(topic_id);
  if (i < 0) throw InputError("no node " + std::to_string(topic_id));
  return nodes_[i];
}

int CausalGraph::NodeIndex(int topic_id) const {
  auto it = node_index_.find(topic_id);
  return it == node_index_.end() ? -1 : it->second;
}

const KgEdge *CausalGraph::FindEdge(int source, int target) const {
  auto it = edge_index_.find({source, target});
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const std::vector<int> &CausalGraph::OutEdges(int topic_id) const {
  int i = NodeIndex(topic_id);
  if (i < 0) throw InputError("no node " + std::to_string(topic_id));
  return out_[i];
}

const std::vector<int> &CausalGraph::InEdges(int topic_id) const {
  int i = NodeIndex(topic_id);
  if (i < 0) throw InputError("no node " + std::to_string(topic_id));
  return in_[i];
}

CausalGraph BuildGraph(std::span<const CausalRelation> relations,
                       const TopicAssignment &assignment,
                       std::span<const TopicCluster> topics) {
  std::map<int, KgNode> nodes;
  for (const auto &[arg, topic] : assignment) {
    KgNode &n = nodes[topic];
    n.topic_id = topic;
    n.member_args.push_back(arg);  // map order keeps these sorted
  }
  for (const TopicCluster &t : topics) {
    auto it = nodes.find(t.topic_id);
    if (it != nodes.end()) it->second.display_label = t.display_label;
  }
  for (auto &[id, n] : nodes) {
    if (n.display_label.empty()) n.display_label = "topic_" + std::to_string(id);
  }

  auto topic_of = [&](const std::string &arg) {
    auto it = assignment.find(arg);
    if (it == assignment.end()) throw InputError("argument '" + arg + "' has no topic");
    return it->second;
  };
  std::map<std::pair<int, int>, KgEdge> edges;
  for (const CausalRelation &r : relations) {
    const int s = topic_of(r.cause_arg_id());
    const int t = topic_of(r.effect_arg_id());
    if (s == t) {
      throw InputError("relation '" + r.relation_id + "' is a self-loop on topic " +
                       std::to_string(s));
    }
    KgEdge &e = edges[{s, t}];
    e.source = s;
    e.target = t;
    ++e.support;
    e.evidence.push_back({r.relation_id, r.sentence_id, r.provenance});
  }

  std::vector<KgNode> node_list;
  for (auto &[id, n] : nodes) node_list.push_back(std::move(n));
  std::vector<KgEdge> edge_list;
  for (auto &[key, e] : edges) edge_list.push_back(std::move(e));
  return CausalGraph(std::move(node_list), std::move(edge_list));
}

}  // namespace causalkg
