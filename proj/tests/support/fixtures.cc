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

#include "fixtures.h"

#include <fstream>
#include <set>
#include <sstream>

namespace causalkg::testing {

SentenceAnalysis MakeSentence(const std::string &sentence_id, const std::string &tagged,
                              const std::vector<std::tuple<int, int, std::string>> &edges,
                              const std::vector<NerSpan> &ner, const std::string &doc_id) {
  SentenceAnalysis s;
  s.sentence_id = sentence_id;
  s.doc_id = doc_id;
  std::istringstream in(tagged);
  std::string piece;
  while (in >> piece) {
    Token t;
    t.index = s.size();
    const std::size_t slash = piece.rfind('/');
    if (slash == std::string::npos || slash == 0) {
      t.text = piece;
      t.pos = "XX";
    } else {
      t.text = piece.substr(0, slash);
      t.pos = piece.substr(slash + 1);
    }
    if (!s.text.empty()) s.text += ' ';
    s.text += t.text;
    s.tokens.push_back(std::move(t));
  }
  for (const auto &[head, dep, rel] : edges) s.dep_edges.push_back({head, dep, rel});
  s.ner_spans = ner;
  ValidateSentence(s);
  return s;
}

std::vector<ArgLabel> Labels(int n, const std::vector<std::tuple<ArgLabel, int, int>> &runs) {
  std::vector<ArgLabel> labels(n, ArgLabel::kO);
  for (const auto &[label, start, end] : runs) {
    for (int i = start; i < end; ++i) labels[i] = label;
  }
  return labels;
}

SentenceAnalysis FurloughSentence() {
  return MakeSentence(
      "furlough",
      "…/: implementing/VBG a/DT furlough/NN scheme/NN aimed/VBN at/IN mitigating/VBG "
      "the/DT impact/NN of/IN a/DT fall/NN in/IN output/NN brought/VBN on/RP by/IN a/DT "
      "global/JJ chip/NN shortage/NN ./.",
      {{1, 4, "dobj"},       {4, 2, "det"},        {4, 3, "compound"},
       {4, 5, "acl"},        {5, 7, "advcl:at"},   {7, 6, "mark"},
       {7, 9, "dobj"},       {9, 8, "det"},        {9, 12, "nmod:of"},
       {12, 10, "case"},     {12, 11, "det"},      {12, 14, "nmod:in"},
       {14, 13, "case"},     {15, 16, "compound:prt"}, {15, 21, "nmod:by"},
       {21, 17, "case"},     {21, 18, "det"},      {21, 19, "amod"},
       {21, 20, "compound"}, {15, 9, "nmod:of"},   {15, 12, "nmod:of"},
       {15, 14, "nmod:of"},  {1, 0, "punct"},      {1, 22, "punct"}});
}

SentenceAnalysis DisplaySystemsSentence() {
  return MakeSentence(
      "display_systems",
      "The/DT rising/VBG number/NN of/IN vehicles/NNS led/VBD to/TO demand/NN for/IN "
      "automotive/JJ smart/JJ display/NN systems/NNS ./.",
      {{5, 2, "nsubj"}, {5, 4, "nsubj"}, {5, 7, "nmod:to"}, {5, 11, "nmod:to"},
       {5, 12, "nmod:to"}, {2, 0, "det"}, {2, 1, "amod"}, {4, 3, "case"},
       {7, 6, "case"}, {12, 8, "case"}, {12, 9, "amod"}, {12, 10, "amod"},
       {5, 13, "punct"}});
}

namespace {

constexpr ArgLabel C = ArgLabel::kArg0;
constexpr ArgLabel E = ArgLabel::kArg1;

NeuralExample Example(std::string name, Provenance heuristic, const std::string &words,
                      int csc, const std::vector<std::tuple<ArgLabel, int, int>> &runs) {
  NeuralExample ex;
  ex.name = std::move(name);
  ex.heuristic = heuristic;
  ex.sentence = MakeSentence(ex.name, words);
  ex.prediction.sentence_id = ex.name;
  ex.prediction.csc = csc;
  ex.prediction.labels = Labels(ex.sentence.size(), runs);
  return ex;
}

// Scripts every candidate pair: `accepted` true, the rest false.
void Script(NeuralExample &ex, const std::vector<std::pair<TokenSpan, TokenSpan>> &accepted) {
  std::vector<ArgSpan> spans = MergeSequential(ex.prediction.labels).spans;
  for (const CandidatePair &c : EnumerateCandidates(spans)) {
    bool ok = false;
    for (const auto &[cause, effect] : accepted) {
      ok = ok || (c.cause.span == cause && c.effect.span == effect);
    }
    ex.verdicts.push_back({ex.name, c.cause.span, c.effect.span, ok});
  }
}

}  // namespace

std::vector<NeuralExample> PostProcessingExamples() {
  std::vector<NeuralExample> out;

  NeuralExample ex1 = Example(
      "postproc_ex1", Provenance::kMerged,
      "Still , car companies and dealers may have to eventually adopt some of the changes "
      "Tesla has introduced to win over buyers who have grown used to buying cars online .",
      1, {{E, 0, 1}, {E, 9, 18}, {C, 18, 31}});
  ex1.expected = {{ex1.name, {18, 31}, {0, 18}, Provenance::kMerged}};
  out.push_back(ex1);

  NeuralExample ex2 = Example(
      "postproc_ex2", Provenance::kLongest3,
      "`` Due to the current situation in this region , there may be disruptions in the "
      "supply chain . ''",
      1, {{E, 0, 1}, {C, 3, 9}, {E, 9, 20}});
  ex2.expected = {{ex2.name, {3, 9}, {9, 20}, Provenance::kLongest3}};
  out.push_back(ex2);

  NeuralExample ex3 = Example(
      "postproc_ex3", Provenance::kCpcMulti,
      "Hence we expect global supply chains switching to EVs to have a positive impact on "
      "the Indian EV industry .",
      1, {{C, 3, 4}, {E, 4, 5}, {C, 5, 10}, {E, 10, 12}, {C, 12, 15}, {E, 15, 19}, {C, 19, 20}});
  Script(ex3, {{{3, 10}, {15, 19}}});
  ex3.expected = {{ex3.name, {3, 10}, {15, 19}, Provenance::kCpcMulti}};
  out.push_back(ex3);

  NeuralExample ex4 = Example(
      "postproc_ex4", Provenance::kCpcMulti,
      "China stocks rose on Monday after the governor of the country ’ s central bank "
      "vowed to increase the implementation of prudent monetary policy to support the real "
      "economy .",
      1, {{E, 0, 1}, {C, 6, 7}, {C, 10, 11}, {E, 16, 24}, {C, 24, 30}});
  Script(ex4, {{{6, 11}, {16, 24}}, {{24, 30}, {16, 24}}, {{24, 30}, {0, 24}}});
  ex4.expected = {{ex4.name, {6, 11}, {16, 24}, Provenance::kCpcMulti},
                  {ex4.name, {24, 30}, {0, 24}, Provenance::kCpcMulti},
                  {ex4.name, {24, 30}, {16, 24}, Provenance::kCpcMulti}};
  out.push_back(ex4);

  NeuralExample ex5 = Example("postproc_ex5", Provenance::kCpcRecovered,
                              "That break was extended as the virus spread .", 0,
                              {{E, 0, 4}, {C, 5, 9}});
  ex5.verdicts = {{ex5.name, {5, 9}, {0, 4}, true}};
  ex5.expected = {{ex5.name, {5, 9}, {0, 4}, Provenance::kCpcRecovered}};
  out.push_back(ex5);

  NeuralExample ex6 = Example(
      "postproc_ex6", Provenance::kCpcRecovered,
      "Ford is shutting its car factories in India after Ford India racked up more than $ "
      "2bn in losses over the past decade .",
      0, {{E, 0, 8}, {C, 9, 24}});
  ex6.verdicts = {{ex6.name, {9, 24}, {0, 8}, true}};
  ex6.expected = {{ex6.name, {9, 24}, {0, 8}, Provenance::kCpcRecovered}};
  out.push_back(ex6);

  return out;
}

ScoringExample FurloughScoringExample() {
  ScoringExample ex;
  ex.sentence = MakeSentence(
      "furlough_deal",
      "The French furlough deal , agreed by four unions at Stellantis , enables the company "
      "to reduce the number of hours worked by staff affected by the chip shortage .");
  const std::string id = ex.sentence.sentence_id;
  ex.golds = {{id, {0, 11}, {12, 29}}, {id, {24, 29}, {17, 24}}};
  ex.predictions = {{id, {0, 5}, {13, 30}}, {id, {27, 29}, {13, 27}}, {id, {0, 5}, {13, 27}}};
  return ex;
}

SentenceAnalysis RandomSentence(std::mt19937 &rng, int n, int extra_edges,
                                const std::string &sentence_id) {
  static const char *kTags[] = {"NN", "NNS", "NNP", "VBD", "IN", "DT", "JJ", "VBN"};
  static const char *kRels[] = {"nsubj", "dobj", "nmod:of", "amod", "case", "acl"};
  static const char *kWords[] = {"alpha", "beta", "gamma", "delta"};
  SentenceAnalysis s;
  s.sentence_id = sentence_id;
  s.doc_id = "d0";
  for (int i = 0; i < n; ++i) {
    Token t;
    t.index = i;
    t.pos = rng() % 2 ? kTags[rng() % 3] : kTags[3 + rng() % 5];
    t.text = kWords[rng() % 4];
    if (!s.text.empty()) s.text += ' ';
    s.text += t.text;
    s.tokens.push_back(std::move(t));
  }
  std::set<std::pair<int, int>> used;
  auto add = [&](int head, int dep) {
    if (head == dep || used.contains({head, dep}) || used.contains({dep, head})) return;
    used.insert({head, dep});
    s.dep_edges.push_back({head, dep, kRels[rng() % 6]});
  };
  for (int i = 1; i < n; ++i) {
    const int other = static_cast<int>(rng() % i);
    if (rng() % 2) {
      add(other, i);
    } else {
      add(i, other);
    }
  }
  for (int e = 0; e < extra_edges && n > 2; ++e) {
    add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
  }
  ValidateSentence(s);
  return s;
}

std::filesystem::path DataDir() { return CAUSALKG_TEST_DATA_DIR; }

std::filesystem::path ScratchDir(const std::string &name) {
  std::filesystem::path p = std::filesystem::path(CAUSALKG_TEST_SCRATCH_DIR) / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace causalkg::testing
