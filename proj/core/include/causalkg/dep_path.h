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

#ifndef CAUSALKG_DEP_PATH_H_
#define CAUSALKG_DEP_PATH_H_

#include <optional>
#include <string>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/pattern.h"

namespace causalkg {

// Undirected view of a sentence's dependency arcs; every arc can be walked in
// both directions and remembers which way is "up".
class DependencyGraph {
 public:
  struct Arc {
    int to = 0;
    StepDirection direction = StepDirection::kUp;
    const std::string *relation = nullptr;
  };

  explicit DependencyGraph(const SentenceAnalysis &sentence);

  const SentenceAnalysis &sentence() const { return *sentence_; }
  const std::vector<Arc> &arcs(int token) const { return adjacency_[token]; }
  int size() const { return static_cast<int>(adjacency_.size()); }

  // BFS hop distances from `source`; -1 for unreachable tokens.
  std::vector<int> Distances(int source) const;

 private:
  const SentenceAnalysis *sentence_;
  std::vector<std::vector<Arc>> adjacency_;
};

struct PathStep {
  StepDirection direction = StepDirection::kUp;
  std::string relation;

  bool operator==(const PathStep &) const = default;
};

// tokens[i] -> tokens[i + 1] is walked through steps[i].
struct DepPath {
  std::vector<int> tokens;
  std::vector<PathStep> steps;

  int length() const { return static_cast<int>(steps.size()); }
  std::vector<int> interior() const {
    return tokens.size() < 2
               ? std::vector<int>{}
               : std::vector<int>(tokens.begin() + 1, tokens.end() - 1);
  }
  DepPath Reversed() const;

  bool operator==(const DepPath &) const = default;
};

// How endpoint slots are written when a path becomes a pattern.
enum class SlotStyle {
  // Cause slot carries the start token's tag, collapsed to "N" for nouns;
  // effect slot is bare. Used for matching.
  kObserved,
  // Cause slot is always "/N"; effect slot is bare. Used for mining.
  kGeneralized,
};

DependencyPattern PathToPattern(const SentenceAnalysis &sentence,
                                const DepPath &path,
                                SlotStyle style = SlotStyle::kObserved);

// Shortest path between two distinct tokens. Among equally short paths the
// one whose pattern string is lexicographically smallest wins. Returns
// nullopt when the tokens are disconnected.
std::optional<DepPath> ShortestDepPath(const DependencyGraph &graph, int from,
                                       int to,
                                       SlotStyle style = SlotStyle::kObserved);
std::optional<DepPath> ShortestDepPath(const SentenceAnalysis &sentence,
                                       int from, int to,
                                       SlotStyle style = SlotStyle::kObserved);

// Pattern string of the shortest path, or nullopt.
std::optional<std::string> ShortestDepPathString(
    const SentenceAnalysis &sentence, int from, int to,
    SlotStyle style = SlotStyle::kObserved);

}  // namespace causalkg

#endif  // CAUSALKG_DEP_PATH_H_
