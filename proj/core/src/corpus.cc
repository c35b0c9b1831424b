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

#include "causalkg/corpus.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

using internal::Json;
using internal::OrderedJson;

namespace {

constexpr const char *kNerNames[] = {"LOCATION", "PERSON",  "ORGANIZATION",
                                     "TIME",     "MONEY",   "PERCENT",
                                     "DATE"};

int Find(std::vector<int> &parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

const char *CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidInput: return "invalid input";
    case ErrorCategory::kMissingInput: return "missing input";
    case ErrorCategory::kIo: return "i/o error";
    case ErrorCategory::kExternal: return "external service error";
    case ErrorCategory::kInternal: return "internal error";
  }
  return "error";
}

const char *NerLabelName(NerLabel label) {
  return kNerNames[static_cast<int>(label)];
}

std::optional<NerLabel> ParseNerLabel(std::string_view name) {
  for (int i = 0; i < 7; ++i) {
    if (name == kNerNames[i]) return static_cast<NerLabel>(i);
  }
  return std::nullopt;
}

bool IsNounTag(std::string_view pos) { return pos.starts_with("NN"); }

bool SentenceAnalysis::InEntity(int index) const {
  for (const NerSpan &ner : ner_spans) {
    if (index >= ner.start && index < ner.end) return true;
  }
  return false;
}

std::string SentenceAnalysis::JoinTokens(const TokenSpan &span) const {
  std::string out;
  for (int i = std::max(span.start, 0); i < std::min(span.end, size()); ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

void ValidateSentence(const SentenceAnalysis &s) {
  const std::string where = "sentence '" + s.sentence_id + "': ";
  if (s.sentence_id.empty()) throw InputError("sentence without sentence_id");
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    if (s.tokens[i].index != i) {
      throw InputError(where + "token indices must be contiguous from 0, got " +
                       std::to_string(s.tokens[i].index) + " at position " +
                       std::to_string(i));
    }
    if (s.tokens[i].text.empty()) {
      throw InputError(where + "token " + std::to_string(i) + " has empty text");
    }
  }
  std::set<std::tuple<int, int, std::string>> seen;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> in_edge(n, false);
  for (const DepEdge &e : s.dep_edges) {
    if (e.head < 0 || e.head >= n || e.dependent < 0 || e.dependent >= n) {
      throw InputError(where + "dependency edge " + std::to_string(e.head) +
                       "->" + std::to_string(e.dependent) + " (" + e.relation +
                       ") cites a token outside 0.." + std::to_string(n - 1));
    }
    if (e.head == e.dependent) {
      throw InputError(where + "dependency edge on token " +
                       std::to_string(e.head) + " is a self-loop");
    }
    if (e.relation.empty()) {
      throw InputError(where + "dependency edge without relation label");
    }
    if (!seen.emplace(e.head, e.dependent, e.relation).second) {
      throw InputError(where + "duplicate dependency edge " +
                       std::to_string(e.head) + "->" +
                       std::to_string(e.dependent) + " (" + e.relation + ")");
    }
    in_edge[e.head] = in_edge[e.dependent] = true;
    parent[Find(parent, e.head)] = Find(parent, e.dependent);
  }
  int root = -1;
  for (int i = 0; i < n; ++i) {
    if (!in_edge[i]) continue;
    if (root < 0) root = Find(parent, i);
    if (Find(parent, i) != root) {
      throw InputError(where + "dependency graph is disconnected at token " +
                       std::to_string(i));
    }
  }
  for (const NerSpan &ner : s.ner_spans) {
    if (ner.start < 0 || ner.end > n || ner.start >= ner.end) {
      throw InputError(where + "entity span [" + std::to_string(ner.start) +
                       "," + std::to_string(ner.end) + ") is invalid");
    }
  }
}

std::optional<Date> ParseIsoDate(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  for (int i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  auto num = [&](int pos, int len) {
    int v = 0;
    for (int i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  Date date{std::chrono::year(num(0, 4)),
            std::chrono::month(static_cast<unsigned>(num(5, 2))),
            std::chrono::day(static_cast<unsigned>(num(8, 2)))};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string FormatIsoDate(const Date &date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(date.year()),
                unsigned(date.month()), unsigned(date.day()));
  return buf;
}

Corpus::Corpus(std::vector<DocumentMeta> documents,
               std::vector<SentenceAnalysis> sentences)
    : documents_(std::move(documents)), sentences_(std::move(sentences)) {
  for (int i = 0; i < document_count(); ++i) {
    if (!document_index_.emplace(documents_[i].doc_id, i).second) {
      throw InputError("duplicate doc_id '" + documents_[i].doc_id + "'");
    }
  }
  for (int i = 0; i < sentence_count(); ++i) {
    const SentenceAnalysis &s = sentences_[i];
    ValidateSentence(s);
    if (!sentence_index_.emplace(s.sentence_id, i).second) {
      throw InputError("duplicate sentence_id '" + s.sentence_id + "'");
    }
    if (!document_index_.contains(s.doc_id)) {
      throw InputError("sentence '" + s.sentence_id +
                       "' references unknown doc_id '" + s.doc_id + "'");
    }
  }
}

const SentenceAnalysis *Corpus::FindSentence(std::string_view id) const {
  auto it = sentence_index_.find(std::string(id));
  return it == sentence_index_.end() ? nullptr : &sentences_[it->second];
}

const DocumentMeta *Corpus::FindDocument(std::string_view id) const {
  auto it = document_index_.find(std::string(id));
  return it == document_index_.end() ? nullptr : &documents_[it->second];
}

namespace {

SentenceAnalysis SentenceFromJson(const Json &j) {
  SentenceAnalysis s;
  s.sentence_id = j.at("sentence_id").get<std::string>();
  s.doc_id = j.at("doc_id").get<std::string>();
  s.text = j.value("text", "");
  for (const Json &t : j.at("tokens")) {
    s.tokens.push_back({t.at("index").get<int>(), t.at("text").get<std::string>(),
                        t.at("pos").get<std::string>()});
  }
  if (j.contains("dep_edges")) {
    for (const Json &e : j.at("dep_edges")) {
      s.dep_edges.push_back({e.at("head").get<int>(), e.at("dependent").get<int>(),
                             e.at("relation").get<std::string>()});
    }
  }
  if (j.contains("ner_spans")) {
    for (const Json &e : j.at("ner_spans")) {
      std::string name = e.at("label").get<std::string>();
      auto label = ParseNerLabel(name);
      if (!label) throw InputError("unknown entity label '" + name + "'");
      s.ner_spans.push_back({e.at("start").get<int>(), e.at("end").get<int>(), *label});
    }
  }
  ValidateSentence(s);
  return s;
}

}  // namespace

namespace internal {

SentenceAnalysis ParseSentenceJson(const Json &j) { return SentenceFromJson(j); }

OrderedJson SentenceToJson(const SentenceAnalysis &s) {
  OrderedJson j;
  j["sentence_id"] = s.sentence_id;
  j["doc_id"] = s.doc_id;
  j["text"] = s.text;
  OrderedJson tokens = OrderedJson::array();
  for (const Token &t : s.tokens) {
    tokens.push_back({{"index", t.index}, {"text", t.text}, {"pos", t.pos}});
  }
  j["tokens"] = std::move(tokens);
  OrderedJson edges = OrderedJson::array();
  for (const DepEdge &e : s.dep_edges) {
    edges.push_back(
        {{"head", e.head}, {"dependent", e.dependent}, {"relation", e.relation}});
  }
  j["dep_edges"] = std::move(edges);
  OrderedJson ner = OrderedJson::array();
  for (const NerSpan &e : s.ner_spans) {
    ner.push_back(
        {{"start", e.start}, {"end", e.end}, {"label", NerLabelName(e.label)}});
  }
  j["ner_spans"] = std::move(ner);
  return j;
}

}  // namespace internal

Corpus ReadCorpus(std::istream &sentences, std::istream &documents) {
  std::vector<DocumentMeta> docs;
  std::set<std::string> doc_ids;
  internal::ForEachJsonLine(documents, "documents", [&](int, const Json &j) {
    DocumentMeta d;
    d.doc_id = j.at("doc_id").get<std::string>();
    d.published = j.value("published", "");
    d.region = j.value("region", "");
    d.title = j.value("title", "");
    if (!doc_ids.insert(d.doc_id).second) {
      throw InputError("duplicate doc_id '" + d.doc_id + "'");
    }
    docs.push_back(std::move(d));
  });

  std::vector<SentenceAnalysis> sents;
  std::set<std::string> sentence_ids;
  internal::ForEachJsonLine(sentences, "sentences", [&](int, const Json &j) {
    SentenceAnalysis s = SentenceFromJson(j);
    if (!sentence_ids.insert(s.sentence_id).second) {
      throw InputError("duplicate sentence_id '" + s.sentence_id + "'");
    }
    if (!doc_ids.contains(s.doc_id)) {
      throw InputError("sentence '" + s.sentence_id +
                       "' references unknown doc_id '" + s.doc_id + "'");
    }
    sents.push_back(std::move(s));
  });
  return Corpus(std::move(docs), std::move(sents));
}

Corpus LoadCorpus(const std::filesystem::path &sentences_path,
                  const std::filesystem::path &documents_path) {
  std::ifstream s = internal::OpenInput(sentences_path);
  std::ifstream d = internal::OpenInput(documents_path);
  return ReadCorpus(s, d);
}

void WriteCorpus(const Corpus &corpus, std::ostream &sentences,
                 std::ostream &documents) {
  for (const DocumentMeta &d : corpus.documents()) {
    OrderedJson j;
    j["doc_id"] = d.doc_id;
    j["published"] = d.published;
    j["region"] = d.region;
    j["title"] = d.title;
    documents << j.dump() << '\n';
  }
  for (const SentenceAnalysis &s : corpus.sentences()) {
    sentences << internal::SentenceToJson(s).dump() << '\n';
  }
}

void SaveCorpus(const Corpus &corpus, const std::filesystem::path &sentences_path,
                const std::filesystem::path &documents_path) {
  std::ofstream s = internal::OpenOutput(sentences_path);
  std::ofstream d = internal::OpenOutput(documents_path);
  WriteCorpus(corpus, s, d);
}

int TimeBuckets::BucketOf(std::string_view doc_id) const {
  for (std::size_t b = 0; b < doc_ids.size(); ++b) {
    for (const std::string &id : doc_ids[b]) {
      if (id == doc_id) return static_cast<int>(b);
    }
  }
  return -1;
}

std::vector<std::string> BucketLabels(const std::vector<Date> &boundaries) {
  std::vector<std::string> labels;
  if (boundaries.empty()) return {"all"};
  const bool yearly = std::all_of(boundaries.begin(), boundaries.end(), [](const Date &d) {
    return d.month() == std::chrono::January && d.day() == std::chrono::day(1);
  });
  if (yearly) {
    auto year = [](const Date &d) { return int(d.year()); };
    labels.push_back("before " + std::to_string(year(boundaries.front())));
    for (std::size_t i = 1; i < boundaries.size(); ++i) {
      int first = year(boundaries[i - 1]);
      int last = year(boundaries[i]) - 1;
      labels.push_back(first == last ? std::to_string(first)
                                     : std::to_string(first) + " to " +
                                           std::to_string(last));
    }
    labels.push_back("after " + std::to_string(year(boundaries.back()) - 1));
  } else {
    labels.push_back("before " + FormatIsoDate(boundaries.front()));
    for (std::size_t i = 1; i < boundaries.size(); ++i) {
      labels.push_back(FormatIsoDate(boundaries[i - 1]) + " to " +
                       FormatIsoDate(boundaries[i]) + " (exclusive)");
    }
    labels.push_back("from " + FormatIsoDate(boundaries.back()));
  }
  return labels;
}

TimeBuckets BucketByTime(const Corpus &corpus, const std::vector<Date> &boundaries) {
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (!(boundaries[i - 1] < boundaries[i])) {
      throw InputError("time bucket boundaries must be strictly increasing");
    }
  }
  TimeBuckets out;
  out.labels = BucketLabels(boundaries);
  out.doc_ids.resize(out.labels.size());
  for (const DocumentMeta &doc : corpus.documents()) {
    std::optional<Date> date = doc.published_date();
    if (!date) {
      out.rejected.push_back(doc.doc_id);
      continue;
    }
    // Number of boundaries <= date: left-inclusive, right-exclusive.
    auto bucket = std::upper_bound(boundaries.begin(), boundaries.end(), *date) -
                  boundaries.begin();
    out.doc_ids[bucket].push_back(doc.doc_id);
  }
  return out;
}

}  // namespace causalkg
