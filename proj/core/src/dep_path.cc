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

#include "causalkg/dep_path.h"

#include <algorithm>
#include <deque>

#include "causalkg/error.h"

namespace causalkg {

DependencyGraph::DependencyGraph(const SentenceAnalysis &sentence)
    : sentence_(&sentence), adjacency_(sentence.tokens.size()) {
  for (const DepEdge &e : sentence.dep_edges) {
    adjacency_[e.head].push_back({e.dependent, StepDirection::kDown, &e.relation});
    adjacency_[e.dependent].push_back({e.head, StepDirection::kUp, &e.relation});
  }
}

std::vector<int> DependencyGraph::Distances(int source) const {
  std::vector<int> dist(adjacency_.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Arc &arc : adjacency_[u]) {
      if (dist[arc.to] >= 0) continue;
      dist[arc.to] = dist[u] + 1;
      queue.push_back(arc.to);
    }
  }
  return dist;
}

DepPath DepPath::Reversed() const {
  DepPath r;
  r.tokens.assign(tokens.rbegin(), tokens.rend());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    r.steps.push_back({Reverse(it->direction), it->relation});
  }
  return r;
}

DependencyPattern PathToPattern(const SentenceAnalysis &sentence, const DepPath &path,
                                SlotStyle style) {
  std::vector<PatternElement> elements;
  const Token &start = sentence.tokens[path.tokens.front()];
  std::string cause_tag = style == SlotStyle::kGeneralized || IsNounTag(start.pos)
                              ? std::string("N")
                              : start.pos;
  elements.push_back(PatternElement::CauseSlot(std::move(cause_tag)));
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    elements.push_back(
        PatternElement::Step(path.steps[i].direction, path.steps[i].relation));
    if (i + 1 < path.steps.size()) {
      const Token &t = sentence.tokens[path.tokens[i + 1]];
      elements.push_back(PatternElement::Anchor(t.text, t.pos));
    }
  }
  elements.push_back(PatternElement::EffectSlot());
  return DependencyPattern::FromElements(std::move(elements), PatternSource::kMined);
}

namespace {

struct PathSearch {
  const DependencyGraph &graph;
  const std::vector<int> &dist_to_target;
  SlotStyle style;
  DepPath current;
  std::optional<DepPath> best;
  std::string best_string;

  void Walk(int u) {
    if (dist_to_target[u] == 0) {
      std::string s = PathToPattern(graph.sentence(), current, style).ToString();
      if (!best || s < best_string) {
        best = current;
        best_string = std::move(s);
      }
      return;
    }
    for (const DependencyGraph::Arc &arc : graph.arcs(u)) {
      if (dist_to_target[arc.to] != dist_to_target[u] - 1) continue;
      current.tokens.push_back(arc.to);
      current.steps.push_back({arc.direction, *arc.relation});
      Walk(arc.to);
      current.tokens.pop_back();
      current.steps.pop_back();
    }
  }
};

}  // namespace

std::optional<DepPath> ShortestDepPath(const DependencyGraph &graph, int from, int to,
                                       SlotStyle style) {
  const int n = graph.size();
  if (from < 0 || from >= n || to < 0 || to >= n || from == to) {
    throw InputError("shortest path needs two distinct valid tokens, got " +
                     std::to_string(from) + " and " + std::to_string(to));
  }
  std::vector<int> dist = graph.Distances(to);
  if (dist[from] < 0) return std::nullopt;
  PathSearch search{graph, dist, style, {}, std::nullopt, {}};
  search.current.tokens.push_back(from);
  search.Walk(from);
  return search.best;
}

std::optional<DepPath> ShortestDepPath(const SentenceAnalysis &sentence, int from,
                                       int to, SlotStyle style) {
  DependencyGraph graph(sentence);
  return ShortestDepPath(graph, from, to, style);
}

std::optional<std::string> ShortestDepPathString(const SentenceAnalysis &sentence,
                                                 int from, int to, SlotStyle style) {
  auto path = ShortestDepPath(sentence, from, to, style);
  if (!path) return std::nullopt;
  return PathToPattern(sentence, *path, style).ToString();
}

}  // namespace causalkg
