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

#include "causalkg/neural_adapter.h"

#include <algorithm>
#include <fstream>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

using internal::Json;

const char *ArgLabelName(ArgLabel label) {
  switch (label) {
    case ArgLabel::kO: return "O";
    case ArgLabel::kArg0: return "ARG0";
    case ArgLabel::kArg1: return "ARG1";
  }
  return "O";
}

std::optional<ArgLabel> ParseArgLabel(std::string_view name) {
  if (name == "O") return ArgLabel::kO;
  if (name == "ARG0") return ArgLabel::kArg0;
  if (name == "ARG1") return ArgLabel::kArg1;
  return std::nullopt;
}

std::vector<TokenLabelSeq> ReadPredictions(std::istream &in) {
  std::vector<TokenLabelSeq> out;
  internal::ForEachJsonLine(in, "predictions", [&](int, const Json &j) {
    TokenLabelSeq seq;
    seq.sentence_id = j.at("sentence_id").get<std::string>();
    int csc = j.at("csc").get<int>();
    if (csc != 0 && csc != 1) throw InputError("csc must be 0 or 1");
    seq.csc = csc == 1;
    for (const Json &l : j.at("labels")) {
      std::string name = l.get<std::string>();
      auto label = ParseArgLabel(name);
      if (!label) throw InputError("unknown span label '" + name + "'");
      seq.labels.push_back(*label);
    }
    out.push_back(std::move(seq));
  });
  return out;
}

std::vector<TokenLabelSeq> LoadPredictions(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadPredictions(in);
}

void WritePredictions(const std::vector<TokenLabelSeq> &predictions, std::ostream &out) {
  for (const TokenLabelSeq &seq : predictions) {
    internal::OrderedJson j;
    j["sentence_id"] = seq.sentence_id;
    j["csc"] = seq.csc ? 1 : 0;
    std::vector<std::string> labels;
    for (ArgLabel l : seq.labels) labels.emplace_back(ArgLabelName(l));
    j["labels"] = labels;
    out << j.dump() << '\n';
  }
}

MergedSpans MergeSequential(std::span<const ArgLabel> labels) {
  MergedSpans out;
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n;) {
    if (labels[i] == ArgLabel::kO) {
      ++i;
      continue;
    }
    int j = i;
    while (j < n && labels[j] == labels[i]) ++j;
    ArgKind kind = labels[i] == ArgLabel::kArg0 ? ArgKind::kCause : ArgKind::kEffect;
    if (!out.spans.empty() && out.spans.back().kind == kind) {
      // Same kind again with only O tokens since the previous fragment.
      out.spans.back().span.end = j;
      out.merged = true;
    } else {
      out.spans.push_back({kind, {i, j}, false});
    }
    i = j;
  }
  return out;
}

int SpanCharCount(const SentenceAnalysis &sentence, const TokenSpan &span) {
  return static_cast<int>(sentence.JoinTokens(span).size());
}

std::optional<std::pair<ArgSpan, ArgSpan>> ResolveThree(std::span<const ArgSpan> spans,
                                                        const SentenceAnalysis &sentence) {
  if (spans.size() != 3) return std::nullopt;
  std::vector<ArgSpan> causes;
  std::vector<ArgSpan> effects;
  for (const ArgSpan &s : spans) {
    (s.kind == ArgKind::kCause ? causes : effects).push_back(s);
  }
  std::vector<ArgSpan> &doubled = causes.size() == 2 ? causes : effects;
  if (doubled.size() != 2) return std::nullopt;
  const int a = SpanCharCount(sentence, doubled[0].span);
  const int b = SpanCharCount(sentence, doubled[1].span);
  if (a == b) return std::nullopt;
  doubled = {a > b ? doubled[0] : doubled[1]};
  return std::pair(causes.front(), effects.front());
}

namespace {

std::vector<ArgSpan> CandidatesOf(std::span<const ArgSpan> spans, ArgKind kind) {
  std::vector<ArgSpan> own;
  std::vector<ArgSpan> other;
  for (const ArgSpan &s : spans) (s.kind == kind ? own : other).push_back(s);
  std::sort(own.begin(), own.end(),
            [](const ArgSpan &a, const ArgSpan &b) { return a.span < b.span; });
  std::vector<ArgSpan> out = own;
  for (std::size_t i = 0; i < own.size(); ++i) {
    for (std::size_t j = i + 1; j < own.size(); ++j) {
      int between = 0;
      for (const ArgSpan &o : other) {
        between += o.span.start >= own[i].span.end && o.span.end <= own[j].span.start;
      }
      if (between == 1) {
        out.push_back({kind, {own[i].span.start, own[j].span.end}, true});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CandidatePair> EnumerateCandidates(std::span<const ArgSpan> spans) {
  std::vector<ArgSpan> causes = CandidatesOf(spans, ArgKind::kCause);
  std::vector<ArgSpan> effects = CandidatesOf(spans, ArgKind::kEffect);
  std::vector<CandidatePair> out;
  for (const ArgSpan &c : causes) {
    for (const ArgSpan &e : effects) {
      if (!c.span.Overlaps(e.span)) out.push_back({c, e});
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidatePair &a, const CandidatePair &b) {
    return std::tie(a.cause.span.start, a.effect.span.start, a.cause.span.end,
                    a.effect.span.end) < std::tie(b.cause.span.start, b.effect.span.start,
                                                  b.cause.span.end, b.effect.span.end);
  });
  return out;
}

std::vector<NeuralRelation> CpcFilter(const SentenceAnalysis &sentence,
                                      std::span<const CandidatePair> candidates,
                                      const CpcClient &client) {
  std::vector<NeuralRelation> out;
  for (const CandidatePair &c : candidates) {
    if (client.IsCausal(sentence, c.cause.span, c.effect.span)) {
      out.push_back({sentence.sentence_id, c.cause.span, c.effect.span,
                     Provenance::kCpcMulti});
    }
  }
  return out;
}

namespace {

void CheckAligned(const TokenLabelSeq &seq, const SentenceAnalysis &sentence) {
  if (static_cast<int>(seq.labels.size()) != sentence.size()) {
    throw InputError("prediction for sentence '" + seq.sentence_id + "' has " +
                     std::to_string(seq.labels.size()) + " labels for " +
                     std::to_string(sentence.size()) + " tokens");
  }
}

}  // namespace

std::optional<NeuralRelation> RecoverNegatives(const TokenLabelSeq &seq,
                                               const SentenceAnalysis &sentence,
                                               const CpcClient &client) {
  CheckAligned(seq, sentence);
  if (seq.csc) return std::nullopt;
  MergedSpans merged = MergeSequential(seq.labels);
  if (merged.spans.size() != 2) return std::nullopt;
  const ArgSpan &first = merged.spans[0];
  const ArgSpan &second = merged.spans[1];
  const TokenSpan cause = first.kind == ArgKind::kCause ? first.span : second.span;
  const TokenSpan effect = first.kind == ArgKind::kCause ? second.span : first.span;
  if (!client.IsCausal(sentence, cause, effect)) return std::nullopt;
  return NeuralRelation{sentence.sentence_id, cause, effect, Provenance::kCpcRecovered};
}

std::vector<NeuralRelation> ProcessSentence(const TokenLabelSeq &seq,
                                            const SentenceAnalysis &sentence,
                                            const CpcClient &client) {
  CheckAligned(seq, sentence);
  if (!seq.csc) {
    std::optional<NeuralRelation> r = RecoverNegatives(seq, sentence, client);
    return r ? std::vector<NeuralRelation>{*r} : std::vector<NeuralRelation>{};
  }
  MergedSpans merged = MergeSequential(seq.labels);
  const std::vector<ArgSpan> &spans = merged.spans;
  if (spans.size() < 2) return {};
  if (spans.size() == 2) {
    const ArgSpan &cause = spans[0].kind == ArgKind::kCause ? spans[0] : spans[1];
    const ArgSpan &effect = spans[0].kind == ArgKind::kCause ? spans[1] : spans[0];
    return {{sentence.sentence_id, cause.span, effect.span,
             merged.merged ? Provenance::kMerged : Provenance::kSingle}};
  }
  if (spans.size() == 3) {
    if (auto pair = ResolveThree(spans, sentence)) {
      return {{sentence.sentence_id, pair->first.span, pair->second.span,
               Provenance::kLongest3}};
    }
  }
  std::vector<CandidatePair> candidates = EnumerateCandidates(spans);
  return CpcFilter(sentence, candidates, client);
}

}  // namespace causalkg
