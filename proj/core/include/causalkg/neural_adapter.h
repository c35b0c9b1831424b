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

#ifndef CAUSALKG_NEURAL_ADAPTER_H_
#define CAUSALKG_NEURAL_ADAPTER_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/cpc_client.h"
#include "causalkg/relation.h"
#include "causalkg/span.h"

namespace causalkg {

// Per-token span-detection label: ARG0 marks causes, ARG1 effects.
enum class ArgLabel { kO, kArg0, kArg1 };

const char *ArgLabelName(ArgLabel label);
std::optional<ArgLabel> ParseArgLabel(std::string_view name);

// Span-detection labels plus the sentence-level causal verdict.
struct TokenLabelSeq {
  std::string sentence_id;
  std::vector<ArgLabel> labels;
  bool csc = false;

  bool operator==(const TokenLabelSeq &) const = default;
};

std::vector<TokenLabelSeq> ReadPredictions(std::istream &in);
std::vector<TokenLabelSeq> LoadPredictions(const std::filesystem::path &path);
void WritePredictions(const std::vector<TokenLabelSeq> &predictions,
                      std::ostream &out);

enum class ArgKind { kCause, kEffect };

struct ArgSpan {
  ArgKind kind = ArgKind::kCause;
  TokenSpan span;
  bool bridged = false;  // built from two same-kind fragments around one other

  bool operator==(const ArgSpan &) const = default;
};

struct NeuralRelation {
  std::string sentence_id;
  TokenSpan cause_span;
  TokenSpan effect_span;
  Provenance provenance = Provenance::kSingle;

  bool operator==(const NeuralRelation &) const = default;
};

struct MergedSpans {
  std::vector<ArgSpan> spans;  // in text order, kinds alternate
  bool merged = false;         // at least two fragments were joined
};

// Maximal runs of one label become spans; consecutive same-kind spans with
// only O tokens between them are joined across the gap.
MergedSpans MergeSequential(std::span<const ArgLabel> labels);

// Character count used to compare arguments: the span's tokens joined by
// single spaces.
int SpanCharCount(const SentenceAnalysis &sentence, const TokenSpan &span);

// For a 2+1 layout keeps the longer of the duplicated kind. Returns nullopt
// when the layout is not 2+1 or when the two lengths tie.
std::optional<std::pair<ArgSpan, ArgSpan>> ResolveThree(
    std::span<const ArgSpan> spans, const SentenceAnalysis &sentence);

struct CandidatePair {
  ArgSpan cause;
  ArgSpan effect;

  bool operator==(const CandidatePair &) const = default;
};

// Candidate causes are every cause span plus every bridge of two cause spans
// with exactly one effect span strictly between; effects symmetrically.
// Returns the cross product minus overlapping pairs, ordered by
// (cause start, effect start, cause end, effect end).
std::vector<CandidatePair> EnumerateCandidates(std::span<const ArgSpan> spans);

// Keeps the candidates the client calls causal. Missing verdicts propagate
// as errors.
std::vector<NeuralRelation> CpcFilter(const SentenceAnalysis &sentence,
                                      std::span<const CandidatePair> candidates,
                                      const CpcClient &client);

// Second chance for sentences classified non-causal: a lone cause/effect pair
// is kept when the pair classifier accepts it.
std::optional<NeuralRelation> RecoverNegatives(const TokenLabelSeq &seq,
                                               const SentenceAnalysis &sentence,
                                               const CpcClient &client);

// Full dispatch for one sentence's predictions.
std::vector<NeuralRelation> ProcessSentence(const TokenLabelSeq &seq,
                                            const SentenceAnalysis &sentence,
                                            const CpcClient &client);

}  // namespace causalkg

#endif  // CAUSALKG_NEURAL_ADAPTER_H_
