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

#ifndef CAUSALKG_CLUSTERING_H_
#define CAUSALKG_CLUSTERING_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/embedding_store.h"
#include "causalkg/kmeans.h"
#include "causalkg/relation.h"
#include "causalkg/span.h"

namespace causalkg {

enum class ArgRole { kCause, kEffect };

struct ArgumentInstance {
  std::string arg_id;
  std::string sentence_id;
  TokenSpan span;
  ArgRole role = ArgRole::kCause;
  std::string surface_text;
  std::string neutralized_text;

  // Every token of the span belongs to a named entity.
  bool all_entities() const { return neutralized_text.empty(); }

  bool operator==(const ArgumentInstance &) const = default;
};

// Span tokens outside every entity span, joined by single spaces in order.
std::string Neutralize(const SentenceAnalysis &sentence, const TokenSpan &span);

// Two instances (cause, effect) per relation. Throws InputError when a
// relation cites an unknown sentence.
std::vector<ArgumentInstance> BuildArguments(
    const Corpus &corpus, std::span<const CausalRelation> relations);

std::vector<ArgumentInstance> ReadArguments(std::istream &in);
std::vector<ArgumentInstance> LoadArguments(const std::filesystem::path &path);
void WriteArguments(const std::vector<ArgumentInstance> &arguments,
                    std::ostream &out);

using TopicAssignment = std::map<std::string, int>;  // arg_id -> topic_id

// Clusters argument embeddings. Arguments with empty neutralized text use the
// zero vector; any other argument missing from the store is an InputError.
// A k larger than the number of arguments is an InputError.
TopicAssignment ClusterArguments(std::span<const ArgumentInstance> arguments,
                                 const EmbeddingStore &store,
                                 const KMeansOptions &options);

// Removes relations whose cause and effect share a topic. Throws InputError
// for an unassigned argument.
std::vector<CausalRelation> DropSelfLoops(std::span<const CausalRelation> relations,
                                          const TopicAssignment &assignment,
                                          std::size_t *dropped = nullptr);

// Lowercase, whitespace split, leading/trailing punctuation stripped; empty
// pieces discarded.
std::vector<std::string> KeywordTokens(const std::string &text);

struct ScoredWord {
  std::string word;
  double score = 0.0;

  bool operator==(const ScoredWord &) const = default;
};

// Scores every word of every cluster document as
//   (n_w / sum n) * ln(|D| / df_D(w)) * ln(|K| / df_K(w))
// where each cluster is one document, so |D| = |K| is the number of clusters.
// Each list is sorted by descending score then word. Clusters are parallel
// to `documents`; a document is the list of its members' texts.
std::vector<std::vector<ScoredWord>> ScoreTopicWords(
    const std::vector<std::vector<std::string>> &documents);

struct TopicCluster {
  int topic_id = 0;
  std::vector<std::string> members;  // arg ids, sorted
  std::vector<double> centroid;
  std::vector<std::string> keywords;
  std::string display_label;
};

// The member's surface text for singletons, otherwise the keywords joined by
// "_"; "topic_<id>" when a multi-member cluster has no words at all.
std::string DisplayLabel(const TopicCluster &cluster,
                         const std::map<std::string, const ArgumentInstance *> &by_id);

// Groups arguments by topic, scores keywords (top `keyword_count`), and
// computes centroids from the store (zero vectors for empty texts).
std::vector<TopicCluster> BuildTopics(std::span<const ArgumentInstance> arguments,
                                      const TopicAssignment &assignment,
                                      const EmbeddingStore *store,
                                      int keyword_count = 5);

// Every argument in its own topic; the graph before clustering.
TopicAssignment IdentityAssignment(std::span<const ArgumentInstance> arguments);

struct ClusterFile {
  TopicAssignment assignment;
  std::vector<TopicCluster> topics;
};

void WriteClusterFile(const ClusterFile &file, std::ostream &out);
ClusterFile ReadClusterFile(std::istream &in);
ClusterFile LoadClusterFile(const std::filesystem::path &path);

}  // namespace causalkg

#endif  // CAUSALKG_CLUSTERING_H_
