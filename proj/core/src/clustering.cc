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

#include "causalkg/clustering.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

using internal::Json;
using internal::OrderedJson;

std::string Neutralize(const SentenceAnalysis &sentence, const TokenSpan &span) {
  std::string out;
  for (int i = span.start; i < span.end; ++i) {
    if (sentence.InEntity(i)) continue;
    if (!out.empty()) out += ' ';
    out += sentence.tokens[i].text;
  }
  return out;
}

std::vector<ArgumentInstance> BuildArguments(const Corpus &corpus,
                                             std::span<const CausalRelation> relations) {
  std::vector<ArgumentInstance> out;
  out.reserve(relations.size() * 2);
  for (const CausalRelation &r : relations) {
    const SentenceAnalysis *s = corpus.FindSentence(r.sentence_id);
    if (s == nullptr) {
      throw InputError("relation '" + r.relation_id + "' cites unknown sentence '" +
                       r.sentence_id + "'");
    }
    for (ArgRole role : {ArgRole::kCause, ArgRole::kEffect}) {
      const TokenSpan span = role == ArgRole::kCause ? r.cause_span : r.effect_span;
      if (span.start < 0 || span.end > s->size() || span.empty()) {
        throw InputError("relation '" + r.relation_id + "' span " + span.ToString() +
                         " outside sentence '" + s->sentence_id + "'");
      }
      ArgumentInstance a;
      a.arg_id = role == ArgRole::kCause ? r.cause_arg_id() : r.effect_arg_id();
      a.sentence_id = r.sentence_id;
      a.span = span;
      a.role = role;
      a.surface_text = s->JoinTokens(span);
      a.neutralized_text = Neutralize(*s, span);
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<ArgumentInstance> ReadArguments(std::istream &in) {
  std::vector<ArgumentInstance> out;
  internal::ForEachJsonLine(in, "arguments", [&](int, const Json &j) {
    ArgumentInstance a;
    a.arg_id = j.at("arg_id").get<std::string>();
    a.sentence_id = j.at("sentence_id").get<std::string>();
    a.span = internal::SpanFromJson(j.at("span"));
    const std::string role = j.at("role").get<std::string>();
    if (role == "cause") {
      a.role = ArgRole::kCause;
    } else if (role == "effect") {
      a.role = ArgRole::kEffect;
    } else {
      throw InputError("unknown role '" + role + "'");
    }
    a.surface_text = j.at("surface_text").get<std::string>();
    a.neutralized_text = j.at("neutralized_text").get<std::string>();
    out.push_back(std::move(a));
  });
  return out;
}

std::vector<ArgumentInstance> LoadArguments(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadArguments(in);
}

void WriteArguments(const std::vector<ArgumentInstance> &arguments, std::ostream &out) {
  for (const ArgumentInstance &a : arguments) {
    OrderedJson j;
    j["arg_id"] = a.arg_id;
    j["sentence_id"] = a.sentence_id;
    j["role"] = a.role == ArgRole::kCause ? "cause" : "effect";
    j["span"] = internal::SpanToJson(a.span);
    j["surface_text"] = a.surface_text;
    j["neutralized_text"] = a.neutralized_text;
    out << j.dump() << '\n';
  }
}

TopicAssignment ClusterArguments(std::span<const ArgumentInstance> arguments,
                                 const EmbeddingStore &store,
                                 const KMeansOptions &options) {
  if (arguments.empty()) throw InputError("no arguments to cluster");
  if (options.k > static_cast<int>(arguments.size())) {
    throw InputError("k=" + std::to_string(options.k) + " exceeds the " +
                     std::to_string(arguments.size()) + " arguments");
  }
  const int dim = store.dimension();
  PointMatrix points(static_cast<int>(arguments.size()), dim);
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    const ArgumentInstance &a = arguments[i];
    if (a.all_entities()) continue;  // zero-vector sentinel
    std::span<const float> v = store.Find(a.arg_id);
    if (v.empty()) throw InputError("no embedding for argument '" + a.arg_id + "'");
    std::copy(v.begin(), v.end(), points.row(static_cast<int>(i)).begin());
  }
  KMeansResult result = KMeans(points, options);
  TopicAssignment out;
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    if (!out.emplace(arguments[i].arg_id, result.assignment[i]).second) {
      throw InputError("duplicate argument id '" + arguments[i].arg_id + "'");
    }
  }
  return out;
}

std::vector<CausalRelation> DropSelfLoops(std::span<const CausalRelation> relations,
                                          const TopicAssignment &assignment,
                                          std::size_t *dropped) {
  auto topic = [&](const std::string &id) {
    auto it = assignment.find(id);
    if (it == assignment.end()) throw InputError("argument '" + id + "' has no topic");
    return it->second;
  };
  std::vector<CausalRelation> out;
  std::size_t n = 0;
  for (const CausalRelation &r : relations) {
    if (topic(r.cause_arg_id()) == topic(r.effect_arg_id())) {
      ++n;
    } else {
      out.push_back(r);
    }
  }
  if (dropped != nullptr) *dropped = n;
  return out;
}

std::vector<std::string> KeywordTokens(const std::string &text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::size_t b = i, e = j;
    while (b < e && std::ispunct(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b < e) {
      std::string w = text.substr(b, e - b);
      for (char &c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      out.push_back(std::move(w));
    }
    i = j;
  }
  return out;
}

std::vector<std::vector<ScoredWord>> ScoreTopicWords(
    const std::vector<std::vector<std::string>> &documents) {
  const double k = static_cast<double>(documents.size());
  std::vector<std::map<std::string, int>> counts(documents.size());
  std::map<std::string, int> df;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    for (const std::string &text : documents[d]) {
      for (std::string &w : KeywordTokens(text)) ++counts[d][std::move(w)];
    }
    for (const auto &[w, n] : counts[d]) ++df[w];
  }
  std::vector<std::vector<ScoredWord>> out(documents.size());
  for (std::size_t d = 0; d < documents.size(); ++d) {
    double total = 0;
    for (const auto &[w, n] : counts[d]) total += n;
    for (const auto &[w, n] : counts[d]) {
      const double idf = std::log(k / df[w]);
      out[d].push_back({w, (n / total) * idf * idf});
    }
    std::stable_sort(out[d].begin(), out[d].end(),
                     [](const ScoredWord &a, const ScoredWord &b) {
                       return a.score > b.score;
                     });
  }
  return out;
}

std::string DisplayLabel(const TopicCluster &cluster,
                         const std::map<std::string, const ArgumentInstance *> &by_id) {
  if (cluster.members.size() == 1) {
    auto it = by_id.find(cluster.members.front());
    if (it != by_id.end()) return it->second->surface_text;
  }
  std::string label;
  for (const std::string &w : cluster.keywords) {
    if (!label.empty()) label += '_';
    label += w;
  }
  return label.empty() ? "topic_" + std::to_string(cluster.topic_id) : label;
}

std::vector<TopicCluster> BuildTopics(std::span<const ArgumentInstance> arguments,
                                      const TopicAssignment &assignment,
                                      const EmbeddingStore *store, int keyword_count) {
  std::map<std::string, const ArgumentInstance *> by_id;
  std::map<int, std::vector<std::string>> members;
  for (const ArgumentInstance &a : arguments) {
    auto it = assignment.find(a.arg_id);
    if (it == assignment.end()) throw InputError("argument '" + a.arg_id + "' has no topic");
    by_id[a.arg_id] = &a;
    members[it->second].push_back(a.arg_id);
  }

  std::vector<TopicCluster> topics;
  std::vector<std::vector<std::string>> documents;
  for (auto &[id, ids] : members) {
    std::sort(ids.begin(), ids.end());
    TopicCluster t;
    t.topic_id = id;
    t.members = ids;
    std::vector<std::string> texts;
    for (const std::string &m : ids) texts.push_back(by_id[m]->neutralized_text);
    documents.push_back(std::move(texts));
    if (store != nullptr) {
      t.centroid.assign(store->dimension(), 0.0);
      for (const std::string &m : ids) {
        if (by_id[m]->all_entities()) continue;
        std::span<const float> v = store->Find(m);
        if (v.empty()) throw InputError("no embedding for argument '" + m + "'");
        for (int d = 0; d < store->dimension(); ++d) t.centroid[d] += v[d];
      }
      for (double &c : t.centroid) c /= static_cast<double>(ids.size());
    }
    topics.push_back(std::move(t));
  }

  auto scored = ScoreTopicWords(documents);
  for (std::size_t i = 0; i < topics.size(); ++i) {
    const auto &words = scored[i];
    for (int w = 0; w < keyword_count && w < static_cast<int>(words.size()); ++w) {
      topics[i].keywords.push_back(words[w].word);
    }
    topics[i].display_label = DisplayLabel(topics[i], by_id);
  }
  return topics;
}

TopicAssignment IdentityAssignment(std::span<const ArgumentInstance> arguments) {
  TopicAssignment out;
  int next = 0;
  for (const ArgumentInstance &a : arguments) out.emplace(a.arg_id, next++);
  return out;
}

void WriteClusterFile(const ClusterFile &file, std::ostream &out) {
  OrderedJson j;
  OrderedJson assignment = OrderedJson::object();
  for (const auto &[id, topic] : file.assignment) assignment[id] = topic;
  j["assignment"] = std::move(assignment);
  OrderedJson topics = OrderedJson::array();
  for (const TopicCluster &t : file.topics) {
    OrderedJson tj;
    tj["topic_id"] = t.topic_id;
    tj["display_label"] = t.display_label;
    tj["keywords"] = t.keywords;
    tj["members"] = t.members;
    tj["centroid"] = t.centroid;
    topics.push_back(std::move(tj));
  }
  j["topics"] = std::move(topics);
  out << j.dump(1) << '\n';
}

ClusterFile ReadClusterFile(std::istream &in) {
  ClusterFile file;
  try {
    Json j = Json::parse(in);
    for (const auto &[id, topic] : j.at("assignment").items()) {
      file.assignment[id] = topic.get<int>();
    }
    for (const Json &tj : j.at("topics")) {
      TopicCluster t;
      t.topic_id = tj.at("topic_id").get<int>();
      t.display_label = tj.at("display_label").get<std::string>();
      t.keywords = tj.at("keywords").get<std::vector<std::string>>();
      t.members = tj.at("members").get<std::vector<std::string>>();
      t.centroid = tj.value("centroid", std::vector<double>{});
      file.topics.push_back(std::move(t));
    }
  } catch (const Json::exception &e) {
    throw InputError(std::string("malformed cluster file: ") + e.what());
  }
  return file;
}

ClusterFile LoadClusterFile(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadClusterFile(in);
}

}  // namespace causalkg
