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

#include <benchmark/benchmark.h>

#include <random>

#include "causalkg/graph.h"
#include "causalkg/graph_stats.h"
#include "causalkg/kmeans.h"
#include "causalkg/pattern_engine.h"

namespace causalkg {
namespace {

// Random dependency tree over nouns and verbs.
SentenceAnalysis RandomTree(std::mt19937 &rng, int n) {
  static const char *kTags[] = {"NN", "NNS", "VBD", "IN", "JJ", "VBN"};
  static const char *kRels[] = {"nsubj", "dobj", "nmod:of", "nmod:by", "amod", "case"};
  SentenceAnalysis s;
  s.sentence_id = "b";
  for (int i = 0; i < n; ++i) s.tokens.push_back({i, "w" + std::to_string(i), kTags[rng() % 6]});
  for (int i = 1; i < n; ++i) {
    s.dep_edges.push_back({static_cast<int>(rng() % i), i, kRels[rng() % 6]});
  }
  return s;
}

void BM_MatchSentence(benchmark::State &state) {
  std::mt19937 rng(1);
  std::vector<SentenceAnalysis> sentences;
  for (int i = 0; i < 64; ++i) sentences.push_back(RandomTree(rng, state.range(0)));
  PatternSet patterns({DependencyPattern::Parse("[[cause]]/N -nsubj caused/VBD +dobj [[effect]]"),
                       DependencyPattern::Parse("[[cause]]/N -nmod:of [[effect]]"),
                       DependencyPattern::Parse("[[cause]]/N -nmod:by [[effect]]")});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MatchSentence(sentences[i++ % sentences.size()], patterns));
  }
}
BENCHMARK(BM_MatchSentence)->Arg(15)->Arg(30)->Arg(60);

void BM_KMeans(benchmark::State &state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0, 1);
  PointMatrix pts(state.range(0), 64);
  for (double &x : pts.data) x = g(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(KMeans(pts, {static_cast<int>(state.range(1)), 42, 50, 0}));
  }
}
BENCHMARK(BM_KMeans)->Args({1000, 10})->Args({5000, 100})->Unit(benchmark::kMillisecond);

void BM_ComputeStats(benchmark::State &state) {
  std::mt19937 rng(3);
  const int n = state.range(0);
  std::vector<KgNode> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back({i, "t" + std::to_string(i), {}});
  std::set<std::pair<int, int>> seen;
  std::vector<KgEdge> edges;
  while (static_cast<int>(edges.size()) < 4 * n) {
    int a = rng() % n, b = rng() % n;
    if (a == b || !seen.insert({a, b}).second) continue;
    edges.push_back({a, b, 1, {{"r", "s", Provenance::kPattern}}});
  }
  CausalGraph graph(nodes, edges);
  for (auto _ : state) benchmark::DoNotOptimize(ComputeStats(graph));
}
BENCHMARK(BM_ComputeStats)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace causalkg

BENCHMARK_MAIN();
