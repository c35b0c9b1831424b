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

#ifndef CAUSALKG_CORPUS_H_
#define CAUSALKG_CORPUS_H_

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "causalkg/span.h"

namespace causalkg {

struct Token {
  int index = 0;
  std::string text;
  std::string pos;  // Penn tag, e.g. "NN", "VBN"

  bool operator==(const Token &) const = default;
};

// Directed dependency arc head -> dependent.
struct DepEdge {
  int head = 0;
  int dependent = 0;
  std::string relation;

  bool operator==(const DepEdge &) const = default;
};

// The seven entity classes of the upstream tagger.
enum class NerLabel {
  kLocation,
  kPerson,
  kOrganization,
  kTime,
  kMoney,
  kPercent,
  kDate,
};

const char *NerLabelName(NerLabel label);
std::optional<NerLabel> ParseNerLabel(std::string_view name);

struct NerSpan {
  int start = 0;
  int end = 0;
  NerLabel label = NerLabel::kOrganization;

  bool operator==(const NerSpan &) const = default;
};

// Any tag starting with "NN".
bool IsNounTag(std::string_view pos);

struct SentenceAnalysis {
  std::string sentence_id;
  std::string doc_id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<DepEdge> dep_edges;
  std::vector<NerSpan> ner_spans;

  int size() const { return static_cast<int>(tokens.size()); }
  bool IsNoun(int index) const { return IsNounTag(tokens[index].pos); }
  bool InEntity(int index) const;

  // Token texts of `span` joined by single spaces.
  std::string JoinTokens(const TokenSpan &span) const;

  bool operator==(const SentenceAnalysis &) const = default;
};

// Throws InputError naming the sentence when an invariant is broken:
// contiguous 0-based token indices, non-empty token text, valid and unique
// edges without self-loops, valid NER ranges, and a connected (undirected)
// dependency graph over the tokens that take part in any edge.
void ValidateSentence(const SentenceAnalysis &sentence);

using Date = std::chrono::year_month_day;

// Strict YYYY-MM-DD.
std::optional<Date> ParseIsoDate(std::string_view text);
std::string FormatIsoDate(const Date &date);

struct DocumentMeta {
  std::string doc_id;
  std::string published;  // raw ISO-8601 text as stored
  std::string region;
  std::string title;

  std::optional<Date> published_date() const { return ParseIsoDate(published); }

  bool operator==(const DocumentMeta &) const = default;
};

// Immutable, indexed collection of documents and their analyzed sentences.
class Corpus {
 public:
  Corpus() = default;
  Corpus(std::vector<DocumentMeta> documents,
         std::vector<SentenceAnalysis> sentences);

  const std::vector<DocumentMeta> &documents() const { return documents_; }
  const std::vector<SentenceAnalysis> &sentences() const { return sentences_; }
  int document_count() const { return static_cast<int>(documents_.size()); }
  int sentence_count() const { return static_cast<int>(sentences_.size()); }

  const SentenceAnalysis *FindSentence(std::string_view sentence_id) const;
  const DocumentMeta *FindDocument(std::string_view doc_id) const;

  bool operator==(const Corpus &other) const {
    return documents_ == other.documents_ && sentences_ == other.sentences_;
  }

 private:
  std::vector<DocumentMeta> documents_;
  std::vector<SentenceAnalysis> sentences_;
  std::unordered_map<std::string, int> sentence_index_;
  std::unordered_map<std::string, int> document_index_;
};

// Reads the line-delimited sentence stream and the companion document stream.
// Errors carry the offending line number. Sentence ids must be unique and
// every sentence must reference a known document.
Corpus ReadCorpus(std::istream &sentences, std::istream &documents);
Corpus LoadCorpus(const std::filesystem::path &sentences_path,
                  const std::filesystem::path &documents_path);

void WriteCorpus(const Corpus &corpus, std::ostream &sentences,
                 std::ostream &documents);
void SaveCorpus(const Corpus &corpus,
                const std::filesystem::path &sentences_path,
                const std::filesystem::path &documents_path);

// Partition of documents into publication-date buckets delimited by strictly
// increasing boundaries. Bucket i covers [boundaries[i-1], boundaries[i]);
// the first bucket is open below and the last open above.
struct TimeBuckets {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> doc_ids;  // parallel to labels
  std::vector<std::string> rejected;              // unparseable dates

  int BucketOf(std::string_view doc_id) const;  // -1 when absent
};

TimeBuckets BucketByTime(const Corpus &corpus, const std::vector<Date> &boundaries);

// "before 2020", "2020 to 2021", "after 2021" when every boundary is January
// 1st; otherwise explicit dates.
std::vector<std::string> BucketLabels(const std::vector<Date> &boundaries);

}  // namespace causalkg

#endif  // CAUSALKG_CORPUS_H_
