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

#include "causalkg/graph_query.h"

#include <algorithm>
#include <cctype>

#include "causalkg/error.h"
#include "causalkg/kmeans.h"

namespace causalkg {

namespace {

std::string Lower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::set<int> FindTargets(const CausalGraph &graph, const std::vector<std::string> &terms) {
  std::set<int> out;
  if (terms.empty()) return out;
  std::vector<std::string> lowered;
  for (const std::string &t : terms) lowered.push_back(Lower(t));
  for (const KgNode &n : graph.nodes()) {
    const std::string label = Lower(n.display_label);
    bool all = true;
    for (const std::string &t : lowered) all = all && label.find(t) != std::string::npos;
    if (all) out.insert(n.topic_id);
  }
  return out;
}

SubgraphView OneHopSubgraph(const CausalGraph &graph, const std::set<int> &targets) {
  SubgraphView view;
  for (int t : targets) {
    if (!graph.HasNode(t)) continue;
    view.target_nodes.insert(t);
    view.included_nodes.insert(t);
    for (int e : graph.OutEdges(t)) view.included_nodes.insert(graph.edges()[e].target);
    for (int e : graph.InEdges(t)) view.included_nodes.insert(graph.edges()[e].source);
  }
  for (const KgEdge &e : graph.edges()) {
    if (view.included_nodes.contains(e.source) && view.included_nodes.contains(e.target)) {
      view.included_edges.insert({e.source, e.target});
    }
  }
  return view;
}

std::vector<Successor> SuccessorsBySupport(const CausalGraph &graph, int topic_id) {
  std::vector<Successor> out;
  for (int e : graph.OutEdges(topic_id)) {
    const KgEdge &edge = graph.edges()[e];
    out.push_back({edge.target, edge.support, graph.node(edge.target).display_label});
  }
  std::sort(out.begin(), out.end(), [](const Successor &a, const Successor &b) {
    if (a.support != b.support) return a.support > b.support;
    if (a.label != b.label) return a.label < b.label;
    return a.topic_id < b.topic_id;
  });
  return out;
}

namespace {

void ChainDfs(const CausalGraph &graph, int max_len, std::vector<int> &path,
              std::vector<int> &supports, std::vector<Chain> &out) {
  if (static_cast<int>(supports.size()) == max_len) return;
  // Out-edges are stored by (source, target), so targets ascend.
  for (int e : graph.OutEdges(path.back())) {
    const KgEdge &edge = graph.edges()[e];
    if (std::find(path.begin(), path.end(), edge.target) != path.end()) continue;
    path.push_back(edge.target);
    supports.push_back(edge.support);
    out.push_back({path, *std::min_element(supports.begin(), supports.end())});
    ChainDfs(graph, max_len, path, supports, out);
    path.pop_back();
    supports.pop_back();
  }
}

}  // namespace

std::vector<Chain> TransitiveChains(const CausalGraph &graph, int source, int max_len) {
  if (!graph.HasNode(source)) throw InputError("no node " + std::to_string(source));
  if (max_len < 1) throw InputError("chain length must be at least 1");
  std::vector<Chain> out;
  std::vector<int> path{source};
  std::vector<int> supports;
  ChainDfs(graph, max_len, path, supports, out);
  return out;
}

TrendReport TrendAnalysis(const CausalGraph &graph, const Corpus &corpus,
                          const std::vector<Date> &boundaries,
                          const std::vector<std::string> &terms, std::uint64_t seed) {
  TimeBuckets buckets = BucketByTime(corpus, boundaries);
  TrendReport report;
  report.rejected_docs = buckets.rejected;

  std::size_t smallest = 0;
  bool any = false;
  for (const auto &docs : buckets.doc_ids) {
    if (docs.empty()) continue;
    smallest = any ? std::min(smallest, docs.size()) : docs.size();
    any = true;
  }
  report.sample_size = static_cast<int>(smallest);

  const SubgraphView base = OneHopSubgraph(graph, FindTargets(graph, terms));
  SplitMix64 rng(seed);
  for (std::size_t b = 0; b < buckets.labels.size(); ++b) {
    std::vector<std::string> docs = buckets.doc_ids[b];
    std::sort(docs.begin(), docs.end());
    const std::size_t take = std::min(smallest, docs.size());
    for (std::size_t i = 0; i < take; ++i) {
      std::swap(docs[i], docs[i + rng.NextBelow(docs.size() - i)]);
    }
    docs.resize(take);
    std::sort(docs.begin(), docs.end());

    TrendBucket bucket;
    bucket.label = buckets.labels[b];
    bucket.view = base;
    for (const EdgeKey &key : base.included_edges) {
      const KgEdge *edge = graph.FindEdge(key.first, key.second);
      for (const Evidence &ev : edge->evidence) {
        const SentenceAnalysis *s = corpus.FindSentence(ev.sentence_id);
        if (s != nullptr && std::binary_search(docs.begin(), docs.end(), s->doc_id)) {
          bucket.view.highlight_edges.insert(key);
          break;
        }
      }
    }
    bucket.highlight_count = static_cast<int>(bucket.view.highlight_edges.size());
    bucket.sampled_docs = std::move(docs);
    report.buckets.push_back(std::move(bucket));
  }
  return report;
}

}  // namespace causalkg
