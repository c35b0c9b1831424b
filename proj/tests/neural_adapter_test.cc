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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "causalkg/error.h"
#include "causalkg/neural_adapter.h"
#include "support/fixtures.h"

namespace causalkg {
namespace {

using testing::Labels;
using testing::MakeSentence;
using testing::ScriptedCpcClient;
using testing::PostProcessingExamples;

constexpr ArgLabel O = ArgLabel::kO;
constexpr ArgLabel C = ArgLabel::kArg0;
constexpr ArgLabel E = ArgLabel::kArg1;

ArgKind KindOf(ArgLabel l) { return l == C ? ArgKind::kCause : ArgKind::kEffect; }

// All label sequences of length n, as base-3 counters.
std::vector<std::vector<ArgLabel>> AllSequences(int n) {
  std::vector<std::vector<ArgLabel>> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<ArgLabel> seq(n);
    int c = code;
    for (int i = 0; i < n; ++i, c /= 3) seq[i] = static_cast<ArgLabel>(c % 3);
    out.push_back(std::move(seq));
  }
  return out;
}

TEST(MergeSequential, PropertiesOverAllShortSequences) {
  for (int n = 0; n <= 9; ++n) {
    for (const std::vector<ArgLabel> &labels : AllSequences(n)) {
      MergedSpans merged = MergeSequential(labels);
      const auto &spans = merged.spans;

      int runs = 0, kind_changes = 0;
      std::optional<ArgLabel> last_kind;
      for (int i = 0; i < n; ++i) {
        if (labels[i] == O) continue;
        if (i == 0 || labels[i - 1] != labels[i]) ++runs;
        if (last_kind && *last_kind != labels[i]) ++kind_changes;
        last_kind = labels[i];
      }
      const int expected_spans = last_kind ? kind_changes + 1 : 0;
      ASSERT_EQ(static_cast<int>(spans.size()), expected_spans);
      EXPECT_EQ(merged.merged, runs > expected_spans);

      for (std::size_t k = 0; k < spans.size(); ++k) {
        const ArgSpan &s = spans[k];
        EXPECT_FALSE(s.bridged);
        if (k > 0) {
          EXPECT_NE(s.kind, spans[k - 1].kind);
          EXPECT_LE(spans[k - 1].span.end, s.span.start);
        }
        // Ends are real tokens of the span's kind; no opposite label inside.
        EXPECT_EQ(KindOf(labels[s.span.start]), s.kind);
        EXPECT_EQ(KindOf(labels[s.span.end - 1]), s.kind);
        EXPECT_NE(labels[s.span.start], O);
        for (int i = s.span.start; i < s.span.end; ++i) {
          if (labels[i] != O) {
            EXPECT_EQ(KindOf(labels[i]), s.kind);
          }
        }
      }
      // Every labelled token is covered.
      for (int i = 0; i < n; ++i) {
        if (labels[i] == O) continue;
        bool covered = false;
        for (const ArgSpan &s : spans) covered = covered || s.span.Contains(i);
        EXPECT_TRUE(covered);
      }
    }
  }
}

TEST(MergeSequential, Example1JoinsEffects) {
  MergedSpans m = MergeSequential(Labels(31, {{E, 0, 1}, {E, 9, 18}, {C, 18, 31}}));
  ASSERT_EQ(m.spans.size(), 2u);
  EXPECT_TRUE(m.merged);
  EXPECT_EQ(m.spans[0].span, (TokenSpan{0, 18}));
  EXPECT_EQ(m.spans[1].span, (TokenSpan{18, 31}));
}

TEST(SpanCharCount, JoinedWithSpaces) {
  SentenceAnalysis s = MakeSentence("s", "impact of a fall");
  EXPECT_EQ(SpanCharCount(s, {0, 2}), 9);
  EXPECT_EQ(SpanCharCount(s, {0, 4}), 16);
}

TEST(ResolveThree, KeepsLongerAndRejectsTies) {
  SentenceAnalysis s = MakeSentence("s", "aa b cc d ee");
  std::vector<ArgSpan> spans = {{ArgKind::kCause, {0, 1}},
                                {ArgKind::kEffect, {1, 2}},
                                {ArgKind::kCause, {2, 4}}};
  auto r = ResolveThree(spans, s);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first.span, (TokenSpan{2, 4}));
  EXPECT_EQ(r->second.span, (TokenSpan{1, 2}));

  spans[2].span = {2, 3};  // "aa" vs "cc"
  EXPECT_FALSE(ResolveThree(spans, s));
  spans.pop_back();
  EXPECT_FALSE(ResolveThree(spans, s));
}

// Independent enumeration: every cause, every two causes with exactly one
// effect strictly between, same for effects; all non-overlapping pairs.
std::vector<CandidatePair> OracleCandidates(const std::vector<ArgSpan> &spans) {
  auto side = [&](ArgKind kind) {
    std::vector<ArgSpan> out;
    for (const ArgSpan &s : spans) {
      if (s.kind == kind) out.push_back(s);
    }
    const std::size_t singles = out.size();
    for (std::size_t i = 0; i < singles; ++i) {
      for (std::size_t j = i + 1; j < singles; ++j) {
        int between = 0;
        for (const ArgSpan &o : spans) {
          between += o.kind != kind && o.span.start >= out[i].span.end &&
                     o.span.end <= out[j].span.start;
        }
        if (between == 1) {
          out.push_back({kind, out[i].span.Cover(out[j].span), true});
        }
      }
    }
    return out;
  };
  std::vector<CandidatePair> out;
  for (const ArgSpan &c : side(ArgKind::kCause)) {
    for (const ArgSpan &e : side(ArgKind::kEffect)) {
      if (!c.span.Overlaps(e.span)) out.push_back({c, e});
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidatePair &a, const CandidatePair &b) {
    return std::tuple(a.cause.span.start, a.effect.span.start, a.cause.span.end,
                      a.effect.span.end) < std::tuple(b.cause.span.start, b.effect.span.start,
                                                      b.cause.span.end, b.effect.span.end);
  });
  return out;
}

TEST(EnumerateCandidates, MatchesOracleOnRandomLayouts) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 14);
    std::vector<ArgLabel> labels(n);
    for (ArgLabel &l : labels) l = static_cast<ArgLabel>(rng() % 3);
    std::vector<ArgSpan> spans = MergeSequential(labels).spans;
    EXPECT_EQ(EnumerateCandidates(spans), OracleCandidates(spans));
  }
}

TEST(EnumerateCandidates, Example3Bridges) {
  auto ex = PostProcessingExamples()[2];
  std::vector<ArgSpan> spans = MergeSequential(ex.prediction.labels).spans;
  ASSERT_EQ(spans.size(), 7u);
  std::vector<CandidatePair> cands = EnumerateCandidates(spans);
  // 4 + 3 bridged causes, 3 + 2 bridged effects, minus overlaps.
  auto has = [&](TokenSpan c, TokenSpan e) {
    return std::any_of(cands.begin(), cands.end(), [&](const CandidatePair &p) {
      return p.cause.span == c && p.effect.span == e;
    });
  };
  EXPECT_TRUE(has({3, 10}, {15, 19}));
  EXPECT_TRUE(has({12, 20}, {4, 12}));
  EXPECT_FALSE(has({3, 10}, {4, 12}));  // overlapping
}

TEST(EnumerateCandidates, GrowsWhenAlternationIsPreserved) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<ArgLabel> labels(4 + rng() % 10);
    for (ArgLabel &l : labels) l = static_cast<ArgLabel>(rng() % 3);
    std::vector<ArgSpan> spans = MergeSequential(labels).spans;
    if (spans.empty()) continue;
    std::vector<CandidatePair> before = EnumerateCandidates(spans);
    // Append an opposite-kind span after the last one.
    const ArgSpan &last = spans.back();
    spans.push_back({last.kind == ArgKind::kCause ? ArgKind::kEffect : ArgKind::kCause,
                     {last.span.end + 1, last.span.end + 3}});
    std::vector<CandidatePair> after = EnumerateCandidates(spans);
    for (const CandidatePair &p : before) {
      EXPECT_NE(std::find(after.begin(), after.end(), p), after.end());
    }
  }
}

TEST(CpcFilter, AllFalseAndScripted) {
  auto ex = PostProcessingExamples()[3];
  std::vector<ArgSpan> spans = MergeSequential(ex.prediction.labels).spans;
  std::vector<CandidatePair> cands = EnumerateCandidates(spans);

  std::vector<CpcVerdict> no;
  for (const CandidatePair &c : cands) no.push_back({ex.name, c.cause.span, c.effect.span, false});
  EXPECT_TRUE(CpcFilter(ex.sentence, cands, ScriptedCpcClient(no)).empty());

  ScriptedCpcClient scripted(ex.verdicts);
  std::vector<NeuralRelation> kept = CpcFilter(ex.sentence, cands, scripted);
  EXPECT_EQ(kept, ex.expected);
  EXPECT_EQ(scripted.calls(), static_cast<int>(cands.size()));
}

TEST(CpcFilter, MissingVerdictIsAnError) {
  auto ex = PostProcessingExamples()[2];
  std::vector<CandidatePair> cands =
      EnumerateCandidates(MergeSequential(ex.prediction.labels).spans);
  ScriptedCpcClient empty({});
  try {
    CpcFilter(ex.sentence, cands, empty);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("postproc_ex3"), std::string::npos);
  }
}

TEST(ProcessSentence, SinglePairNeverCallsTheClient) {
  SentenceAnalysis s = MakeSentence("s", "rain caused floods today");
  TokenLabelSeq seq{"s", Labels(4, {{C, 0, 1}, {E, 2, 4}}), 1};
  ScriptedCpcClient client({});
  std::vector<NeuralRelation> out = ProcessSentence(seq, s, client);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], (NeuralRelation{"s", {0, 1}, {2, 4}, Provenance::kSingle}));
  EXPECT_EQ(client.calls(), 0);
}

TEST(ProcessSentence, OneSidedPredictionsYieldNothing) {
  SentenceAnalysis s = MakeSentence("s", "a b c d");
  ScriptedCpcClient client({});
  EXPECT_TRUE(ProcessSentence({"s", Labels(4, {{C, 0, 2}}), 1}, s, client).empty());
  EXPECT_TRUE(ProcessSentence({"s", Labels(4, {}), 1}, s, client).empty());
  EXPECT_TRUE(ProcessSentence({"s", Labels(4, {{C, 0, 1}, {E, 1, 2}, {C, 2, 3}}), 0}, s,
                              client)
                  .empty());
  EXPECT_EQ(client.calls(), 0);
}

TEST(RecoverNegatives, AcceptedAndRejected) {
  SentenceAnalysis s = MakeSentence("s", "a b c d");
  TokenLabelSeq seq{"s", Labels(4, {{E, 0, 2}, {C, 3, 4}}), 0};
  ScriptedCpcClient yes({{"s", {3, 4}, {0, 2}, true}});
  auto r = RecoverNegatives(seq, s, yes);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->provenance, Provenance::kCpcRecovered);
  ScriptedCpcClient no({{"s", {3, 4}, {0, 2}, false}});
  EXPECT_FALSE(RecoverNegatives(seq, s, no));
}

TEST(PostProcessing, EveryExampleReproducesItsRelations) {
  for (const testing::NeuralExample &ex : PostProcessingExamples()) {
    ScriptedCpcClient client(ex.verdicts);
    std::vector<NeuralRelation> out = ProcessSentence(ex.prediction, ex.sentence, client);
    EXPECT_EQ(out, ex.expected) << ex.name;
    for (const NeuralRelation &r : out) EXPECT_EQ(r.provenance, ex.heuristic) << ex.name;
  }
}

TEST(PostProcessing, ExpectedTexts) {
  auto examples = PostProcessingExamples();
  auto text = [&](int i, int k, bool cause) {
    const auto &ex = examples[i];
    ScriptedCpcClient client(ex.verdicts);
    auto out = ProcessSentence(ex.prediction, ex.sentence, client);
    return ex.sentence.JoinTokens(cause ? out[k].cause_span : out[k].effect_span);
  };
  EXPECT_EQ(text(0, 0, false),
            "Still , car companies and dealers may have to eventually adopt some of the "
            "changes Tesla has introduced");
  EXPECT_EQ(text(1, 0, true), "the current situation in this region");
  EXPECT_EQ(text(2, 0, true), "global supply chains switching to EVs to");
  EXPECT_EQ(text(2, 0, false), "the Indian EV industry");
  EXPECT_EQ(text(3, 0, true), "the governor of the country");
  EXPECT_EQ(text(3, 1, false),
            "China stocks rose on Monday after the governor of the country ’ s central bank "
            "vowed to increase the implementation of prudent monetary policy");
  EXPECT_EQ(text(4, 0, true), "the virus spread .");
  EXPECT_EQ(text(5, 0, false), "Ford is shutting its car factories in India");
}

TEST(Predictions, RoundTripAndErrors) {
  std::vector<TokenLabelSeq> preds = {{"a", Labels(3, {{C, 0, 1}, {E, 2, 3}}), 1},
                                      {"b", Labels(2, {}), 0}};
  std::ostringstream out;
  WritePredictions(preds, out);
  std::istringstream in(out.str());
  EXPECT_EQ(ReadPredictions(in), preds);

  std::istringstream bad_label(R"({"sentence_id":"a","csc":1,"labels":["O","ARG2"]})");
  EXPECT_THROW(ReadPredictions(bad_label), Error);
  std::istringstream bad_csc(R"({"sentence_id":"a","csc":2,"labels":["O"]})");
  EXPECT_THROW(ReadPredictions(bad_csc), Error);
}

}  // namespace
}  // namespace causalkg
