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

#ifndef CAUSALKG_TESTS_FIXTURES_H_
#define CAUSALKG_TESTS_FIXTURES_H_

#include <filesystem>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/cpc_client.h"
#include "causalkg/evaluation.h"
#include "causalkg/neural_adapter.h"
#include "causalkg/relation.h"

namespace causalkg::testing {

// "word/TAG word/TAG ..." split at the last '/'. A token without a tag gets
// "XX". Text is the words joined by single spaces.
SentenceAnalysis MakeSentence(const std::string &sentence_id, const std::string &tagged,
                              const std::vector<std::tuple<int, int, std::string>> &edges = {},
                              const std::vector<NerSpan> &ner = {},
                              const std::string &doc_id = "d0");

// Labels from (kind, start, end) runs; everything else O.
std::vector<ArgLabel> Labels(int n, const std::vector<std::tuple<ArgLabel, int, int>> &runs);

// The furlough scheme / chip shortage sentence with its fixture parse.
SentenceAnalysis FurloughSentence();
inline constexpr const char *kFurloughPattern =
    "[[cause]]/N -nmod:by brought/VBN +nmod:of [[effect]]";

// "The rising number of vehicles led to demand for automotive smart display
// systems ." with six noun pairs on one "led" pattern.
SentenceAnalysis DisplaySystemsSentence();
inline constexpr const char *kDisplaySystemsPattern =
    "[[cause]]/N -nsubj led/VBD +nmod:to [[effect]]";

// One neural post-processing example: sentence, predictions, scripted
// verdicts and the expected output.
struct NeuralExample {
  std::string name;
  Provenance heuristic;
  SentenceAnalysis sentence;
  TokenLabelSeq prediction;
  std::vector<CpcVerdict> verdicts;   // every candidate the client may see
  std::vector<NeuralRelation> expected;
};
std::vector<NeuralExample> PostProcessingExamples();

// Stellantis furlough sentence: 2 gold relations, 3 predictions.
struct ScoringExample {
  SentenceAnalysis sentence;
  std::vector<SpanPair> golds;
  std::vector<SpanPair> predictions;
};
ScoringExample FurloughScoringExample();

// CPC client answering from a fixed list and counting calls.
class ScriptedCpcClient : public CpcClient {
 public:
  explicit ScriptedCpcClient(std::vector<CpcVerdict> verdicts) : inner_(verdicts) {}
  bool IsCausal(const SentenceAnalysis &sentence, const TokenSpan &cause,
                const TokenSpan &effect) const override {
    ++calls_;
    return inner_.IsCausal(sentence, cause, effect);
  }
  int calls() const { return calls_; }

 private:
  VerdictFileClient inner_;
  mutable int calls_ = 0;
};

// Random connected parse over n tokens: a random tree plus `extra_edges`
// additional arcs. Roughly half the tokens are nouns.
SentenceAnalysis RandomSentence(std::mt19937 &rng, int n, int extra_edges,
                                const std::string &sentence_id = "rand");

// Source-tree directory holding committed test data.
std::filesystem::path DataDir();

// Fresh empty directory under the build tree.
std::filesystem::path ScratchDir(const std::string &name);

std::string ReadFile(const std::filesystem::path &path);

}  // namespace causalkg::testing

#endif  // CAUSALKG_TESTS_FIXTURES_H_
