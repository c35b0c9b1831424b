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

#include "causalkg/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

using internal::Json;
using internal::OrderedJson;

std::vector<GoldRelation> ReadGold(std::istream &in) {
  std::vector<GoldRelation> out;
  internal::ForEachJsonLine(in, "gold", [&](int, const Json &j) {
    GoldRelation g;
    g.sentence_id = j.at("sentence_id").get<std::string>();
    g.cause_span = internal::SpanFromJson(j.at("cause_span"));
    g.effect_span = internal::SpanFromJson(j.at("effect_span"));
    out.push_back(std::move(g));
  });
  return out;
}

std::vector<GoldRelation> LoadGold(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadGold(in);
}

bool RelationMatch(const SpanPair &a, const SpanPair &b) {
  return a.sentence_id == b.sentence_id && a.cause_span.Overlaps(b.cause_span) &&
         a.effect_span.Overlaps(b.effect_span);
}

EvalReport ReportFromCounts(int tp, int fp, int fn) {
  EvalReport r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.precision_defined = tp + fp > 0;
  r.recall_defined = tp + fn > 0;
  r.precision = r.precision_defined ? double(tp) / (tp + fp) : 0.0;
  r.recall = r.recall_defined ? double(tp) / (tp + fn) : 0.0;
  r.f1 = r.precision + r.recall > 0
             ? 2 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

namespace {

// Indices grouped by sentence, each group in cause-start order.
std::map<std::string, std::vector<int>> BySentence(std::span<const SpanPair> pairs) {
  std::map<std::string, std::vector<int>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[pairs[i].sentence_id].push_back(static_cast<int>(i));
  }
  for (auto &[id, idx] : out) {
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return pairs[a].cause_span.start < pairs[b].cause_span.start;
    });
  }
  return out;
}

}  // namespace

EvalReport Score(std::span<const SpanPair> predictions, std::span<const SpanPair> golds) {
  auto preds_by = BySentence(predictions);
  auto golds_by = BySentence(golds);
  std::set<std::string> sentences;
  for (const auto &[id, idx] : preds_by) sentences.insert(id);
  for (const auto &[id, idx] : golds_by) sentences.insert(id);

  int tp = 0, fp = 0, fn = 0, duplicate_fp = 0;
  std::vector<LedgerEntry> ledger;
  for (const std::string &id : sentences) {
    const std::vector<int> &ps = preds_by[id];
    const std::vector<int> &gs = golds_by[id];
    std::vector<bool> used(gs.size(), false);
    for (int p : ps) {
      int hit = -1;
      for (std::size_t g = 0; g < gs.size(); ++g) {
        if (!used[g] && RelationMatch(predictions[p], golds[gs[g]])) {
          hit = static_cast<int>(g);
          break;
        }
      }
      if (hit >= 0) {
        used[hit] = true;
        ++tp;
        ledger.push_back({id, MatchOutcome::kTruePositive, p, gs[hit]});
      } else {
        ++fp;
        for (std::size_t g = 0; g < gs.size(); ++g) {
          if (used[g] && RelationMatch(predictions[p], golds[gs[g]])) {
            ++duplicate_fp;
            break;
          }
        }
        ledger.push_back({id, MatchOutcome::kFalsePositive, p, -1});
      }
    }
    for (std::size_t g = 0; g < gs.size(); ++g) {
      if (used[g]) continue;
      ++fn;
      ledger.push_back({id, MatchOutcome::kFalseNegative, -1, gs[g]});
    }
  }
  EvalReport report = ReportFromCounts(tp, fp, fn);
  report.duplicate_fp = duplicate_fp;
  report.ledger = std::move(ledger);
  return report;
}

double AdjustedPrecision(const EvalReport &report) {
  const int denominator = report.tp + report.fp - report.duplicate_fp;
  return denominator > 0 ? double(report.tp) / denominator : 0.0;
}

std::vector<SpanPair> ToSpanPairs(std::span<const CausalRelation> relations) {
  std::vector<SpanPair> out;
  for (const CausalRelation &r : relations) {
    out.push_back({r.sentence_id, r.cause_span, r.effect_span});
  }
  return out;
}

std::vector<SpanPair> ToSpanPairs(std::span<const GoldRelation> golds) {
  std::vector<SpanPair> out;
  for (const GoldRelation &g : golds) out.push_back({g.sentence_id, g.cause_span, g.effect_span});
  return out;
}

namespace {

std::string Ratio(double v, bool defined) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return defined ? buf : std::string(buf) + " (undefined)";
}

double Round4(double v) { return std::round(v * 1e4) / 1e4; }

const char *OutcomeName(MatchOutcome o) {
  switch (o) {
    case MatchOutcome::kTruePositive: return "TP";
    case MatchOutcome::kFalsePositive: return "FP";
    case MatchOutcome::kFalseNegative: return "FN";
  }
  return "?";
}

}  // namespace

void WriteReportTable(const EvalReport &report, std::ostream &out) {
  out << "metric     value\n"
      << "TP         " << report.tp << '\n'
      << "FP         " << report.fp << '\n'
      << "FN         " << report.fn << '\n'
      << "precision  " << Ratio(report.precision, report.precision_defined) << '\n'
      << "recall     " << Ratio(report.recall, report.recall_defined) << '\n'
      << "F1         " << Ratio(report.f1, report.precision_defined && report.recall_defined)
      << '\n';
}

void WriteReportJson(const EvalReport &report, std::ostream &out) {
  OrderedJson j;
  j["tp"] = report.tp;
  j["fp"] = report.fp;
  j["fn"] = report.fn;
  j["precision"] = Round4(report.precision);
  j["recall"] = Round4(report.recall);
  j["f1"] = Round4(report.f1);
  j["precision_defined"] = report.precision_defined;
  j["recall_defined"] = report.recall_defined;
  j["duplicate_fp"] = report.duplicate_fp;
  OrderedJson ledger = OrderedJson::array();
  for (const LedgerEntry &e : report.ledger) {
    ledger.push_back({{"sentence_id", e.sentence_id},
                      {"outcome", OutcomeName(e.outcome)},
                      {"prediction", e.prediction},
                      {"gold", e.gold}});
  }
  j["ledger"] = std::move(ledger);
  out << j.dump(1) << '\n';
}

double Nmi(const Clustering &a, const Clustering &b) {
  if (a.empty()) throw InputError("NMI needs at least one item");
  if (a.size() != b.size()) throw InputError("NMI clusterings cover different items");
  std::map<std::pair<std::string, std::string>, double> joint;
  std::map<std::string, double> ca, cb;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      throw InputError("NMI clusterings cover different items ('" + ia->first + "' vs '" +
                       ib->first + "')");
    }
    joint[{ia->second, ib->second}] += 1;
    ca[ia->second] += 1;
    cb[ib->second] += 1;
  }
  const double n = static_cast<double>(a.size());
  auto entropy = [n](const std::map<std::string, double> &counts) {
    double h = 0.0;
    for (const auto &[k, c] : counts) h -= (c / n) * std::log(c / n);
    return h;
  };
  const double ha = entropy(ca);
  const double hb = entropy(cb);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;
  double mi = 0.0;
  for (const auto &[key, c] : joint) {
    mi += (c / n) * std::log(c * n / (ca[key.first] * cb[key.second]));
  }
  return std::clamp(mi / std::sqrt(ha * hb), 0.0, 1.0);
}

}  // namespace causalkg
