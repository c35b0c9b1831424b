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

#ifndef CAUSALKG_EVALUATION_H_
#define CAUSALKG_EVALUATION_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "causalkg/relation.h"
#include "causalkg/span.h"

namespace causalkg {

struct GoldRelation {
  std::string sentence_id;
  TokenSpan cause_span;
  TokenSpan effect_span;
};

std::vector<GoldRelation> ReadGold(std::istream &in);
std::vector<GoldRelation> LoadGold(const std::filesystem::path &path);

// Span pair used on either side of a comparison.
struct SpanPair {
  std::string sentence_id;
  TokenSpan cause_span;
  TokenSpan effect_span;
};

// At least one shared token in both the cause and the effect spans.
bool RelationMatch(const SpanPair &a, const SpanPair &b);

enum class MatchOutcome { kTruePositive, kFalsePositive, kFalseNegative };

struct LedgerEntry {
  std::string sentence_id;
  MatchOutcome outcome;
  int prediction = -1;  // index into the predictions, or -1
  int gold = -1;        // index into the golds, or -1
};

struct EvalReport {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_defined = true;  // false when there are no predictions
  bool recall_defined = true;     // false when there are no golds
  // False positives that overlap a gold already taken by an earlier
  // prediction of the same sentence.
  int duplicate_fp = 0;
  std::vector<LedgerEntry> ledger;
};

// P/R/F1 from counts; undefined ratios are reported as 0 with the flag off.
EvalReport ReportFromCounts(int tp, int fp, int fn);

// Greedy one-to-one matching per sentence: predictions in cause-start order
// each take the first unmatched gold (also in cause-start order) they match.
EvalReport Score(std::span<const SpanPair> predictions,
                 std::span<const SpanPair> golds);

// Precision with duplicate false positives set aside; 0 when undefined.
double AdjustedPrecision(const EvalReport &report);

std::vector<SpanPair> ToSpanPairs(std::span<const CausalRelation> relations);
std::vector<SpanPair> ToSpanPairs(std::span<const GoldRelation> golds);

// Counts to integers, ratios to four decimals.
void WriteReportTable(const EvalReport &report, std::ostream &out);
void WriteReportJson(const EvalReport &report, std::ostream &out);

using Clustering = std::map<std::string, std::string>;  // item -> cluster label

// I(A;B) / sqrt(H(A) H(B)) with natural logs. Both entropies zero gives 1;
// exactly one zero gives 0. Throws InputError if item sets differ or are
// empty.
double Nmi(const Clustering &a, const Clustering &b);

}  // namespace causalkg

#endif  // CAUSALKG_EVALUATION_H_
