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

#ifndef CAUSALKG_PATTERN_ENGINE_H_
#define CAUSALKG_PATTERN_ENGINE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/dep_path.h"
#include "causalkg/pattern.h"
#include "causalkg/relation.h"
#include "causalkg/span.h"

namespace causalkg {

// Ordered, duplicate-free collection of canonical patterns with a lookup index
// on the constraint-free skeleton.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<DependencyPattern> patterns);

  // Returns false if the canonical string is already present.
  bool Add(DependencyPattern pattern);
  bool Contains(const std::string &canonical) const;

  const std::vector<DependencyPattern> &patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }

  // Patterns whose skeleton equals `skeleton`.
  std::vector<const DependencyPattern *> Candidates(
      const std::string &skeleton) const;

 private:
  std::vector<DependencyPattern> patterns_;
  std::unordered_map<std::string, int> by_canonical_;
  std::unordered_map<std::string, std::vector<int>> by_skeleton_;
};

// One canonical pattern per line; blank lines and "#" comments are skipped.
std::vector<DependencyPattern> ReadPatternList(std::istream &in,
                                               PatternSource source);
std::vector<DependencyPattern> LoadPatternFile(const std::filesystem::path &path,
                                               PatternSource source);
void WritePatternList(const std::vector<DependencyPattern> &patterns,
                      std::ostream &out);

// All ordered pairs (i, j), i != j, of noun-tagged tokens.
std::vector<std::pair<int, int>> ExtractNounPairs(const SentenceAnalysis &sentence);

struct RawMatch {
  std::string sentence_id;
  int cause_token = 0;
  int effect_token = 0;
  std::string pattern;             // canonical string of the matched pattern
  std::vector<int> anchor_tokens;  // interior path tokens

  bool operator==(const RawMatch &) const = default;
};

// For every noun pair, emits one match per pattern that accepts the pair's
// shortest dependency path.
std::vector<RawMatch> MatchSentence(const SentenceAnalysis &sentence,
                                    const PatternSet &patterns);

struct MinedRecord {
  SentenceAnalysis sentence;
  int cause_token = 0;
  int effect_token = 0;
};

std::vector<MinedRecord> ReadMinedCorpus(std::istream &in);
std::vector<MinedRecord> LoadMinedCorpus(const std::filesystem::path &path);

struct RankedPattern {
  DependencyPattern pattern;
  int count = 0;
};

struct MiningResult {
  std::vector<RankedPattern> ranked;  // descending count, then canonical string
  int skipped = 0;                    // records with disconnected endpoints
};

MiningResult MinePatterns(std::span<const MinedRecord> records);

struct SelectionPolicy {
  int keep_unconditionally = 50;  // ranks 1..50
  int keep_with_anchor = 500;     // ranks 51..500 need a center token
};

std::vector<DependencyPattern> SelectMinedPatterns(
    std::span<const RankedPattern> ranked, const SelectionPolicy &policy = {});

// Set union by canonical string; `a` order first, then new entries of `b`.
std::vector<DependencyPattern> MergePatternLists(
    std::span<const DependencyPattern> a, std::span<const DependencyPattern> b);

struct PatternRelation {
  std::string sentence_id;
  TokenSpan cause_span;
  TokenSpan effect_span;
  std::string pattern;
  std::vector<int> signal_tokens;  // sorted
  std::vector<int> cause_tokens;   // matched nouns behind cause_span
  std::vector<int> effect_tokens;  // matched nouns behind effect_span

  bool operator==(const PatternRelation &) const = default;
};

// Merges matches of one sentence sharing a pattern and a cause (then, on the
// result, a pattern and an effect). Merged spans are minimal covering ranges.
// A merge that would make the two spans overlap or swallow a signal token is
// not performed.
std::vector<PatternRelation> ConsolidateMatches(std::span<const RawMatch> matches);

// Grows each argument toward the signal words lying between the two
// arguments: the earlier argument extends right up to the first such signal,
// the later argument extends left to start right after the last one.
PatternRelation ExpandSpans(const PatternRelation &relation,
                            const SentenceAnalysis &sentence);

// match -> consolidate -> expand for one sentence.
std::vector<PatternRelation> ExtractPatternRelations(
    const SentenceAnalysis &sentence, const PatternSet &patterns);

}  // namespace causalkg

#endif  // CAUSALKG_PATTERN_ENGINE_H_
