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

#include "causalkg/pattern_engine.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

PatternSet::PatternSet(std::vector<DependencyPattern> patterns) {
  for (DependencyPattern &p : patterns) Add(std::move(p));
}

bool PatternSet::Add(DependencyPattern pattern) {
  std::string canonical = pattern.ToString();
  if (by_canonical_.contains(canonical)) return false;
  const int index = static_cast<int>(patterns_.size());
  by_canonical_.emplace(std::move(canonical), index);
  by_skeleton_[pattern.Skeleton()].push_back(index);
  patterns_.push_back(std::move(pattern));
  return true;
}

bool PatternSet::Contains(const std::string &canonical) const {
  return by_canonical_.contains(canonical);
}

std::vector<const DependencyPattern *> PatternSet::Candidates(
    const std::string &skeleton) const {
  std::vector<const DependencyPattern *> out;
  auto it = by_skeleton_.find(skeleton);
  if (it == by_skeleton_.end()) return out;
  for (int i : it->second) out.push_back(&patterns_[i]);
  return out;
}

std::vector<DependencyPattern> ReadPatternList(std::istream &in, PatternSource source) {
  std::vector<DependencyPattern> out;
  std::set<std::string> seen;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      DependencyPattern p = DependencyPattern::Parse(line, source);
      if (seen.insert(p.ToString()).second) out.push_back(std::move(p));
    } catch (const Error &e) {
      throw InputError("pattern file line " + std::to_string(line_number) + ": " +
                       e.what());
    }
  }
  return out;
}

std::vector<DependencyPattern> LoadPatternFile(const std::filesystem::path &path,
                                               PatternSource source) {
  std::ifstream in = internal::OpenInput(path);
  return ReadPatternList(in, source);
}

void WritePatternList(const std::vector<DependencyPattern> &patterns, std::ostream &out) {
  for (const DependencyPattern &p : patterns) out << p.ToString() << '\n';
}

std::vector<std::pair<int, int>> ExtractNounPairs(const SentenceAnalysis &sentence) {
  std::vector<int> nouns;
  for (int i = 0; i < sentence.size(); ++i) {
    if (sentence.IsNoun(i)) nouns.push_back(i);
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(nouns.size() * (nouns.size() > 0 ? nouns.size() - 1 : 0));
  for (int a : nouns) {
    for (int b : nouns) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

std::vector<RawMatch> MatchSentence(const SentenceAnalysis &sentence,
                                    const PatternSet &patterns) {
  std::vector<RawMatch> matches;
  if (patterns.empty()) return matches;
  DependencyGraph graph(sentence);
  for (const auto &[cause, effect] : ExtractNounPairs(sentence)) {
    std::optional<DepPath> path = ShortestDepPath(graph, cause, effect);
    if (!path) continue;
    const DependencyPattern observed = PathToPattern(sentence, *path);
    for (const DependencyPattern *p : patterns.Candidates(observed.Skeleton())) {
      if (!SlotAccepts(p->elements().front().tag, sentence.tokens[cause].pos) ||
          !SlotAccepts(p->elements().back().tag, sentence.tokens[effect].pos)) {
        continue;
      }
      matches.push_back({sentence.sentence_id, cause, effect, p->ToString(),
                         path->interior()});
    }
  }
  return matches;
}

std::vector<MinedRecord> ReadMinedCorpus(std::istream &in) {
  std::vector<MinedRecord> out;
  internal::ForEachJsonLine(in, "mined corpus", [&](int, const internal::Json &j) {
    MinedRecord r;
    r.sentence = internal::ParseSentenceJson(j.at("sentence"));
    r.cause_token = j.at("cause_token").get<int>();
    r.effect_token = j.at("effect_token").get<int>();
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<MinedRecord> LoadMinedCorpus(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadMinedCorpus(in);
}

MiningResult MinePatterns(std::span<const MinedRecord> records) {
  std::map<std::string, RankedPattern> counts;
  MiningResult result;
  for (const MinedRecord &r : records) {
    const int n = r.sentence.size();
    if (r.cause_token < 0 || r.cause_token >= n || r.effect_token < 0 ||
        r.effect_token >= n || r.cause_token == r.effect_token) {
      throw InputError("mined record for sentence '" + r.sentence.sentence_id +
                       "' has invalid cause/effect tokens");
    }
    std::optional<DepPath> path = ShortestDepPath(r.sentence, r.cause_token,
                                                  r.effect_token, SlotStyle::kGeneralized);
    if (!path) {
      ++result.skipped;
      continue;
    }
    DependencyPattern p = PathToPattern(r.sentence, *path, SlotStyle::kGeneralized);
    auto [it, inserted] = counts.try_emplace(p.ToString(), RankedPattern{p, 0});
    ++it->second.count;
  }
  for (auto &[canonical, ranked] : counts) result.ranked.push_back(std::move(ranked));
  // `counts` iterates in canonical order, so a stable sort settles ties.
  std::stable_sort(result.ranked.begin(), result.ranked.end(),
                   [](const RankedPattern &a, const RankedPattern &b) {
                     return a.count > b.count;
                   });
  return result;
}

std::vector<DependencyPattern> SelectMinedPatterns(std::span<const RankedPattern> ranked,
                                                   const SelectionPolicy &policy) {
  std::vector<DependencyPattern> out;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const int rank = static_cast<int>(i) + 1;
    if (rank > policy.keep_with_anchor) break;
    if (rank <= policy.keep_unconditionally || ranked[i].pattern.has_center_token()) {
      DependencyPattern p = ranked[i].pattern;
      p.set_source(PatternSource::kMined);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<DependencyPattern> MergePatternLists(std::span<const DependencyPattern> a,
                                                 std::span<const DependencyPattern> b) {
  std::map<std::string, int> index;
  std::vector<DependencyPattern> out;
  for (const DependencyPattern &p : a) {
    if (index.try_emplace(p.ToString(), static_cast<int>(out.size())).second) {
      out.push_back(p);
    }
  }
  for (const DependencyPattern &p : b) {
    auto [it, inserted] = index.try_emplace(p.ToString(), static_cast<int>(out.size()));
    if (inserted) {
      out.push_back(p);
    } else {
      out[it->second].set_source(PatternSource::kMerged);
    }
  }
  return out;
}

namespace {

struct Group {
  std::string pattern;
  std::set<int> causes;
  std::set<int> effects;
  std::set<int> signals;
  int first = 0;  // earliest contributing match, for output order
};

TokenSpan CoverOf(const std::set<int> &tokens) {
  return {*tokens.begin(), *tokens.rbegin() + 1};
}

bool Mergeable(const Group &g) {
  TokenSpan cause = CoverOf(g.causes);
  TokenSpan effect = CoverOf(g.effects);
  if (cause.Overlaps(effect)) return false;
  for (int s : g.signals) {
    if (cause.Contains(s) || effect.Contains(s)) return false;
  }
  return true;
}

Group Union(const std::vector<const Group *> &parts) {
  Group g = *parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g.causes.insert(parts[i]->causes.begin(), parts[i]->causes.end());
    g.effects.insert(parts[i]->effects.begin(), parts[i]->effects.end());
    g.signals.insert(parts[i]->signals.begin(), parts[i]->signals.end());
    g.first = std::min(g.first, parts[i]->first);
  }
  return g;
}

// Groups `in` by key; a group merges only if the merged spans stay valid.
template <typename KeyFn>
std::vector<Group> MergeBy(const std::vector<Group> &in, KeyFn key) {
  std::vector<std::vector<const Group *>> buckets;
  std::map<decltype(key(in.front())), int> bucket_of;
  for (const Group &g : in) {
    auto [it, inserted] = bucket_of.try_emplace(key(g), static_cast<int>(buckets.size()));
    if (inserted) buckets.emplace_back();
    buckets[it->second].push_back(&g);
  }
  std::vector<Group> out;
  for (const auto &parts : buckets) {
    Group merged = Union(parts);
    if (parts.size() == 1 || Mergeable(merged)) {
      out.push_back(std::move(merged));
    } else {
      for (const Group *p : parts) out.push_back(*p);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Group &a, const Group &b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::vector<PatternRelation> ConsolidateMatches(std::span<const RawMatch> matches) {
  std::vector<PatternRelation> out;
  if (matches.empty()) return out;
  std::vector<Group> groups;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const RawMatch &m = matches[i];
    Group g;
    g.pattern = m.pattern;
    g.causes = {m.cause_token};
    g.effects = {m.effect_token};
    g.signals.insert(m.anchor_tokens.begin(), m.anchor_tokens.end());
    g.first = static_cast<int>(i);
    groups.push_back(std::move(g));
  }
  groups = MergeBy(groups, [](const Group &g) { return std::pair(g.pattern, g.causes); });
  groups = MergeBy(groups, [](const Group &g) { return std::pair(g.pattern, g.effects); });

  const std::string &sentence_id = matches.front().sentence_id;
  for (const Group &g : groups) {
    PatternRelation r;
    r.sentence_id = sentence_id;
    r.cause_span = CoverOf(g.causes);
    r.effect_span = CoverOf(g.effects);
    r.pattern = g.pattern;
    r.signal_tokens.assign(g.signals.begin(), g.signals.end());
    r.cause_tokens.assign(g.causes.begin(), g.causes.end());
    r.effect_tokens.assign(g.effects.begin(), g.effects.end());
    out.push_back(std::move(r));
  }
  return out;
}

PatternRelation ExpandSpans(const PatternRelation &relation, const SentenceAnalysis &) {
  PatternRelation out = relation;
  const bool cause_first = out.cause_span.start < out.effect_span.start;
  TokenSpan &earlier = cause_first ? out.cause_span : out.effect_span;
  TokenSpan &later = cause_first ? out.effect_span : out.cause_span;
  int first_signal = -1;
  int last_signal = -1;
  for (int s : out.signal_tokens) {
    if (s < earlier.end || s >= later.start) continue;
    if (first_signal < 0) first_signal = s;
    last_signal = s;
  }
  if (first_signal < 0) return out;
  earlier.end = first_signal;
  later.start = last_signal + 1;
  return out;
}

std::vector<PatternRelation> ExtractPatternRelations(const SentenceAnalysis &sentence,
                                                     const PatternSet &patterns) {
  std::vector<RawMatch> matches = MatchSentence(sentence, patterns);
  std::vector<PatternRelation> relations = ConsolidateMatches(matches);
  for (PatternRelation &r : relations) r = ExpandSpans(r, sentence);
  return relations;
}

}  // namespace causalkg
