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

#include "pipeline.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "causalkg/clustering.h"
#include "causalkg/cpc_client.h"
#include "causalkg/digest.h"
#include "causalkg/embedding_store.h"
#include "causalkg/evaluation.h"
#include "causalkg/graph.h"
#include "causalkg/graph_query.h"
#include "causalkg/neural_adapter.h"
#include "causalkg/relation.h"

namespace causalkg::cli {

namespace fs = std::filesystem;
using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

int ExitCode(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidInput: return 3;
    case ErrorCategory::kMissingInput: return 4;
    case ErrorCategory::kIo: return 5;
    case ErrorCategory::kExternal: return 6;
    case ErrorCategory::kInternal: return 1;
  }
  return 1;
}

std::string PipelineConfig::Hash() const { return Sha256Hex(effective.dump()); }

std::vector<Date> ParseDateList(const std::string &csv) {
  std::vector<Date> out;
  std::stringstream in(csv);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.empty()) continue;
    auto d = ParseIsoDate(piece);
    if (!d) throw UsageError("bad date '" + piece + "' (want YYYY-MM-DD)");
    out.push_back(*d);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i - 1] < out[i])) throw UsageError("bucket boundaries must increase");
  }
  return out;
}

namespace {

const std::set<std::string> kPathKeys = {
    "sentences", "documents", "patterns", "mined_corpus", "predictions",
    "cpc_verdicts", "embeddings", "gold", "output_dir"};
const std::set<std::string> kOtherKeys = {"sidecar_url", "k", "keywords", "seed",
                                          "time_buckets", "selection",
                                          "suppress_duplicates"};

template <typename T>
T Field(const Json &j, const std::string &key, const char *type) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception &) {
    throw UsageError("config key '" + key + "' must be " + type);
  }
}

}  // namespace

PipelineConfig ParseConfig(const Json &input, const fs::path &base_dir,
                           const ConfigOverrides &overrides) {
  if (!input.is_object()) throw UsageError("config must be a JSON object");
  Json j = input;
  if (overrides.output_dir) j["output_dir"] = *overrides.output_dir;
  if (overrides.k) j["k"] = *overrides.k;
  if (overrides.seed) j["seed"] = *overrides.seed;
  if (overrides.keywords) j["keywords"] = *overrides.keywords;

  PipelineConfig c;
  auto path = [&](const std::string &key) -> fs::path {
    if (!j.contains(key) || j[key].is_null()) return {};
    fs::path p = Field<std::string>(j, key, "a path string");
    return p.is_absolute() ? p : base_dir / p;
  };
  for (const auto &[key, value] : j.items()) {
    if (!kPathKeys.contains(key) && !kOtherKeys.contains(key)) {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  c.sentences = path("sentences");
  c.documents = path("documents");
  c.patterns = path("patterns");
  c.mined_corpus = path("mined_corpus");
  c.predictions = path("predictions");
  c.cpc_verdicts = path("cpc_verdicts");
  c.embeddings = path("embeddings");
  c.gold = path("gold");
  c.output_dir = path("output_dir");
  if (c.output_dir.empty()) c.output_dir = base_dir / "out";
  if (j.contains("sidecar_url")) c.sidecar_url = Field<std::string>(j, "sidecar_url", "a URL");
  if (j.contains("k")) c.k = Field<int>(j, "k", "an integer");
  if (c.k < 0) throw UsageError("k must be >= 1 (or 0 to skip clustering)");
  if (j.contains("keywords")) c.keywords = Field<int>(j, "keywords", "an integer");
  if (c.keywords < 1) throw UsageError("keywords must be >= 1");
  if (j.contains("seed")) c.seed = Field<std::uint64_t>(j, "seed", "a non-negative integer");
  if (j.contains("time_buckets")) {
    std::string csv;
    for (const std::string &d : Field<std::vector<std::string>>(j, "time_buckets",
                                                                "a list of dates")) {
      csv += d + ",";
    }
    c.time_buckets = ParseDateList(csv);
  }
  if (j.contains("selection")) {
    const Json &s = j["selection"];
    if (s.contains("keep_unconditionally")) {
      c.selection.keep_unconditionally = Field<int>(s, "keep_unconditionally", "an integer");
    }
    if (s.contains("keep_with_anchor")) {
      c.selection.keep_with_anchor = Field<int>(s, "keep_with_anchor", "an integer");
    }
  }
  if (j.contains("suppress_duplicates")) {
    c.suppress_duplicates = Field<bool>(j, "suppress_duplicates", "a boolean");
  }
  c.effective = j;
  c.effective.erase("output_dir");
  return c;
}

PipelineConfig LoadConfig(const fs::path &path, const ConfigOverrides &overrides) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception &e) {
    throw UsageError("malformed config " + path.string() + ": " + e.what());
  }
  return ParseConfig(j, path.parent_path(), overrides);
}

namespace {

fs::path Require(const fs::path &p, const char *key, const char *command) {
  if (p.empty()) {
    throw UsageError(std::string("config key '") + key + "' is required by " + command);
  }
  return p;
}

fs::path StageInput(const PipelineConfig &c, const char *file, const char *producer) {
  fs::path p = c.output_dir / file;
  if (!fs::exists(p)) {
    throw MissingInputError("missing " + p.string() + "; run `causalkg " + producer +
                            "` first");
  }
  return p;
}

std::ofstream Create(const fs::path &p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

void Close(std::ofstream &out, const fs::path &p) {
  out.close();
  if (!out) throw IoError("failed writing " + p.string());
}

// Records a stage run in output_dir/manifest.json. Content digests only, so
// reruns over unchanged inputs leave the manifest unchanged.
void RecordStage(const PipelineConfig &c, const std::string &stage,
                 const std::map<std::string, fs::path> &inputs,
                 const std::vector<std::string> &outputs) {
  const fs::path path = c.output_dir / kManifestFile;
  Json manifest = Json::object();
  if (fs::exists(path)) {
    std::ifstream in(path);
    try {
      manifest = Json::parse(in);
    } catch (const Json::exception &) {
      manifest = Json::object();
    }
  }
  Json entry;
  entry["config_hash"] = c.Hash();
  entry["inputs"] = Json::object();
  for (const auto &[name, p] : inputs) entry["inputs"][name] = FileSha256Hex(p);
  entry["outputs"] = Json::object();
  for (const std::string &file : outputs) {
    entry["outputs"][file] = FileSha256Hex(c.output_dir / file);
  }
  manifest["stages"][stage] = std::move(entry);
  std::ofstream out = Create(path);
  out << manifest.dump(1) << '\n';
  Close(out, path);
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Extension(ExportFormat f) {
  switch (f) {
    case ExportFormat::kGraphMl: return ".graphml";
    case ExportFormat::kCytoscapeJson: return ".cyjs";
    case ExportFormat::kDot: return ".dot";
  }
  return "";
}

// Stands in when neither verdicts nor a sidecar are configured; only
// sentences that need pair classification reach it.
class UnconfiguredCpcClient : public CpcClient {
 public:
  bool IsCausal(const SentenceAnalysis &sentence, const TokenSpan &, const TokenSpan &)
      const override {
    throw MissingInputError("sentence '" + sentence.sentence_id +
                            "' needs pair classification; configure cpc_verdicts or "
                            "sidecar_url");
  }
};

std::unique_ptr<CpcClient> MakeCpcClient(const PipelineConfig &c) {
  if (!c.cpc_verdicts.empty()) {
    return std::make_unique<VerdictFileClient>(VerdictFileClient::Load(c.cpc_verdicts));
  }
  if (!c.sidecar_url.empty()) return std::make_unique<HttpCpcClient>(c.sidecar_url);
  return std::make_unique<UnconfiguredCpcClient>();
}

MethodCounts Tally(const Corpus &corpus, const std::vector<const CausalRelation *> &rels) {
  MethodCounts m;
  std::set<std::string> sentences, texts;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const CausalRelation *r : rels) {
    const SentenceAnalysis *s = corpus.FindSentence(r->sentence_id);
    sentences.insert(r->sentence_id);
    texts.insert(s->text);
    pairs.insert({s->JoinTokens(r->cause_span), s->JoinTokens(r->effect_span)});
  }
  m.sentences = static_cast<int>(sentences.size());
  m.unique_sentences = static_cast<int>(texts.size());
  m.relations = static_cast<int>(rels.size());
  m.distinct_pairs = static_cast<int>(pairs.size());
  m.avg_support = pairs.empty() ? 0.0 : double(rels.size()) / pairs.size();
  return m;
}

OrderedJson CountsJson(const MethodCounts &m) {
  OrderedJson j;
  j["sentences"] = m.sentences;
  j["unique_sentences"] = m.unique_sentences;
  j["relations"] = m.relations;
  j["distinct_pairs"] = m.distinct_pairs;
  j["avg_support"] = std::round(m.avg_support * 1e4) / 1e4;
  return j;
}

}  // namespace

MiningSummary CmdMinePatterns(const PipelineConfig &c, std::ostream &log) {
  const fs::path mined_path = Require(c.mined_corpus, "mined_corpus", "mine-patterns");
  std::vector<DependencyPattern> base;
  if (!c.patterns.empty()) base = LoadPatternFile(c.patterns, PatternSource::kCauseNet);
  std::vector<MinedRecord> records = LoadMinedCorpus(mined_path);
  MiningResult mined = MinePatterns(records);
  std::vector<DependencyPattern> selected = SelectMinedPatterns(mined.ranked, c.selection);
  std::vector<DependencyPattern> merged = MergePatternLists(base, selected);

  MiningSummary s;
  s.base = static_cast<int>(base.size());
  s.mined = static_cast<int>(mined.ranked.size());
  s.selected = static_cast<int>(selected.size());
  s.written = static_cast<int>(merged.size());
  s.overlap = s.base + s.selected - s.written;
  s.skipped = mined.skipped;

  const fs::path out_path = c.output_dir / kPatternsFile;
  std::ofstream out = Create(out_path);
  WritePatternList(merged, out);
  Close(out, out_path);

  std::set<std::string> kept;
  for (const DependencyPattern &p : selected) kept.insert(p.ToString());
  const fs::path ranks_path = c.output_dir / kPatternRanksFile;
  std::ofstream ranks = Create(ranks_path);
  ranks << "rank\tcount\tcenter_token\tselected\tpattern\n";
  for (std::size_t i = 0; i < mined.ranked.size(); ++i) {
    const DependencyPattern &p = mined.ranked[i].pattern;
    ranks << i + 1 << '\t' << mined.ranked[i].count << '\t'
          << (p.has_center_token() ? "yes" : "no") << '\t'
          << (kept.contains(p.ToString()) ? "yes" : "no") << '\t' << p.ToString() << '\n';
  }
  Close(ranks, ranks_path);

  std::map<std::string, fs::path> inputs{{"mined_corpus", mined_path}};
  if (!c.patterns.empty()) inputs["patterns"] = c.patterns;
  RecordStage(c, "mine-patterns", inputs, {kPatternsFile, kPatternRanksFile});

  log << "base patterns     " << s.base << '\n'
      << "mined patterns    " << s.mined << " (" << s.skipped << " records skipped)\n"
      << "selected mined    " << s.selected << '\n'
      << "overlap           " << s.overlap << '\n'
      << "written           " << s.written << " -> " << out_path.string() << '\n';
  return s;
}

ExtractSummary CmdExtract(const PipelineConfig &c, std::ostream &log) {
  Corpus corpus = LoadCorpus(Require(c.sentences, "sentences", "extract"),
                             Require(c.documents, "documents", "extract"));
  std::map<std::string, fs::path> inputs{{"sentences", c.sentences},
                                         {"documents", c.documents}};

  // Mined patterns, when configured, come from the mine-patterns stage.
  fs::path pattern_path;
  if (!c.mined_corpus.empty()) {
    pattern_path = StageInput(c, kPatternsFile, "mine-patterns");
  } else if (!c.patterns.empty()) {
    pattern_path = c.patterns;
  }
  if (pattern_path.empty() && c.predictions.empty()) {
    throw UsageError("extract needs 'patterns' (or 'mined_corpus') or 'predictions'");
  }
  PatternSet patterns;
  if (!pattern_path.empty()) {
    patterns = PatternSet(LoadPatternFile(pattern_path, PatternSource::kCauseNet));
    inputs["patterns"] = pattern_path;
  }

  std::map<std::string, TokenLabelSeq> predictions;
  std::unique_ptr<CpcClient> client;
  if (!c.predictions.empty()) {
    for (TokenLabelSeq &seq : LoadPredictions(c.predictions)) {
      const SentenceAnalysis *s = corpus.FindSentence(seq.sentence_id);
      if (s == nullptr) {
        throw InputError("prediction for unknown sentence '" + seq.sentence_id + "'");
      }
      if (static_cast<int>(seq.labels.size()) != s->size()) {
        throw InputError("prediction for '" + seq.sentence_id + "' has " +
                         std::to_string(seq.labels.size()) + " labels for " +
                         std::to_string(s->size()) + " tokens");
      }
      std::string id = seq.sentence_id;
      if (!predictions.emplace(id, std::move(seq)).second) {
        throw InputError("duplicate prediction for sentence '" + id + "'");
      }
    }
    inputs["predictions"] = c.predictions;
    client = MakeCpcClient(c);
    if (!c.cpc_verdicts.empty()) inputs["cpc_verdicts"] = c.cpc_verdicts;
  }

  ExtractSummary summary;
  std::vector<CausalRelation> relations;
  for (const SentenceAnalysis &s : corpus.sentences()) {
    int n = 0;
    if (!patterns.empty()) {
      for (const PatternRelation &p : ExtractPatternRelations(s, patterns)) {
        CausalRelation r;
        r.relation_id = s.sentence_id + "#p" + std::to_string(n++);
        r.sentence_id = s.sentence_id;
        r.method = ExtractionMethod::kPattern;
        r.provenance = Provenance::kPattern;
        r.cause_span = p.cause_span;
        r.effect_span = p.effect_span;
        r.pattern = p.pattern;
        r.signal_tokens = p.signal_tokens;
        relations.push_back(std::move(r));
      }
    }
    auto it = predictions.find(s.sentence_id);
    if (it == predictions.end()) continue;
    n = 0;
    std::vector<NeuralRelation> kept;
    for (const NeuralRelation &nr : ProcessSentence(it->second, s, *client)) {
      if (c.suppress_duplicates) {
        bool dup = false;
        for (const NeuralRelation &k : kept) {
          dup = dup || (k.cause_span.Overlaps(nr.cause_span) &&
                        k.effect_span.Overlaps(nr.effect_span));
        }
        if (dup) {
          ++summary.suppressed;
          continue;
        }
      }
      kept.push_back(nr);
      CausalRelation r;
      r.relation_id = s.sentence_id + "#b" + std::to_string(n++);
      r.sentence_id = s.sentence_id;
      r.method = ExtractionMethod::kBert;
      r.provenance = nr.provenance;
      r.cause_span = nr.cause_span;
      r.effect_span = nr.effect_span;
      relations.push_back(std::move(r));
    }
  }

  std::vector<const CausalRelation *> by_pattern, by_bert, all;
  for (const CausalRelation &r : relations) {
    (r.method == ExtractionMethod::kPattern ? by_pattern : by_bert).push_back(&r);
    all.push_back(&r);
  }
  summary.pattern = Tally(corpus, by_pattern);
  summary.bert = Tally(corpus, by_bert);
  summary.total = Tally(corpus, all);

  const fs::path rel_path = c.output_dir / kRelationsFile;
  std::ofstream rel_out = Create(rel_path);
  WriteRelations(relations, rel_out);
  Close(rel_out, rel_path);

  const fs::path arg_path = c.output_dir / kArgumentsFile;
  std::ofstream arg_out = Create(arg_path);
  WriteArguments(BuildArguments(corpus, relations), arg_out);
  Close(arg_out, arg_path);

  OrderedJson sj;
  sj["pattern"] = CountsJson(summary.pattern);
  sj["bert"] = CountsJson(summary.bert);
  sj["total"] = CountsJson(summary.total);
  sj["suppressed_duplicates"] = summary.suppressed;
  const fs::path sum_path = c.output_dir / kExtractSummaryFile;
  std::ofstream sum_out = Create(sum_path);
  sum_out << sj.dump(1) << '\n';
  Close(sum_out, sum_path);

  RecordStage(c, "extract", inputs, {kRelationsFile, kArgumentsFile, kExtractSummaryFile});

  log << "method   sentences  unique  relations  pairs  avg_support\n";
  auto row = [&](const char *name, const MethodCounts &m) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-8s %9d %7d %10d %6d %12.2f\n", name, m.sentences,
                  m.unique_sentences, m.relations, m.distinct_pairs, m.avg_support);
    log << buf;
  };
  row("pattern", summary.pattern);
  row("bert", summary.bert);
  row("total", summary.total);
  if (c.suppress_duplicates) log << "suppressed duplicates: " << summary.suppressed << '\n';
  return summary;
}

void CmdCluster(const PipelineConfig &c, std::ostream &log) {
  const fs::path arg_path = StageInput(c, kArgumentsFile, "extract");
  std::vector<ArgumentInstance> args = LoadArguments(arg_path);
  std::map<std::string, fs::path> inputs{{"arguments", arg_path}};

  ClusterFile file;
  std::optional<EmbeddingStore> store;
  if (c.k == 0) {
    file.assignment = IdentityAssignment(args);
  } else {
    store = LoadEmbeddingStore(Require(c.embeddings, "embeddings", "cluster"));
    inputs["embeddings"] = c.embeddings;
    KMeansOptions options;
    options.k = c.k;
    options.seed = c.seed;
    file.assignment = ClusterArguments(args, *store, options);
  }
  file.topics = BuildTopics(args, file.assignment, store ? &*store : nullptr, c.keywords);

  const fs::path out_path = c.output_dir / kClustersFile;
  std::ofstream out = Create(out_path);
  WriteClusterFile(file, out);
  Close(out, out_path);
  RecordStage(c, "cluster", inputs, {kClustersFile});

  int all_entity = 0;
  for (const ArgumentInstance &a : args) all_entity += a.all_entities();
  log << "arguments   " << args.size() << " (" << all_entity << " entity-only)\n"
      << "topics      " << file.topics.size() << '\n';
}

namespace {

void WriteStats(const GraphStats &s, const fs::path &path) {
  OrderedJson j;
  j["node_count"] = s.node_count;
  j["edge_count"] = s.edge_count;
  j["total_weight"] = s.total_weight;
  j["subgraph_count"] = s.subgraph_count;
  j["avg_clustering_coefficient"] = s.avg_clustering_coefficient;
  j["avg_degree_centrality"] = s.avg_degree_centrality;
  j["avg_eigenvector_centrality"] =
      s.avg_eigenvector_centrality ? OrderedJson(*s.avg_eigenvector_centrality) : OrderedJson();
  j["transitivity"] = s.transitivity;
  j["triangles"] = s.triangles;
  j["connected_triads"] = s.connected_triads;
  std::ofstream out = Create(path);
  out << j.dump(1) << '\n';
  Close(out, path);
}

void PrintStats(const GraphStats &s, std::ostream &log) {
  log << "nodes                        " << s.node_count << '\n'
      << "edges                        " << s.edge_count << '\n'
      << "total weight                 " << s.total_weight << '\n'
      << "subgraphs                    " << s.subgraph_count << '\n'
      << "avg clustering coefficient   " << Fixed(s.avg_clustering_coefficient, 6) << '\n'
      << "avg degree centrality        " << Fixed(s.avg_degree_centrality, 6) << '\n'
      << "avg eigenvector centrality   "
      << (s.avg_eigenvector_centrality ? Fixed(*s.avg_eigenvector_centrality, 6)
                                       : std::string("n/a (did not converge)"))
      << '\n'
      << "transitivity                 " << Fixed(s.transitivity, 6) << '\n';
}

}  // namespace

GraphStats CmdBuild(const PipelineConfig &c, std::ostream &log) {
  const fs::path rel_path = StageInput(c, kRelationsFile, "extract");
  const fs::path clu_path = StageInput(c, kClustersFile, "cluster");
  std::vector<CausalRelation> relations = LoadRelations(rel_path);
  ClusterFile clusters = LoadClusterFile(clu_path);

  std::size_t dropped = 0;
  std::vector<CausalRelation> kept = DropSelfLoops(relations, clusters.assignment, &dropped);
  CausalGraph graph = BuildGraph(kept, clusters.assignment, clusters.topics);

  BuildInfo info;
  info.config_hash = c.Hash();
  info.input_digests["relations"] = FileSha256Hex(rel_path);
  info.input_digests["clusters"] = FileSha256Hex(clu_path);
  const fs::path graph_path = c.output_dir / kGraphFile;
  std::ofstream out = Create(graph_path);
  WriteGraph(graph, info, out);
  Close(out, graph_path);

  GraphStats stats = ComputeStats(graph);
  WriteStats(stats, c.output_dir / kStatsFile);
  RecordStage(c, "build", {{"relations", rel_path}, {"clusters", clu_path}},
              {kGraphFile, kStatsFile});

  log << "self-loop relations dropped  " << dropped << '\n';
  PrintStats(stats, log);
  return stats;
}

void CmdQuery(const PipelineConfig &c, const QueryOptions &o, std::ostream &log) {
  if (o.terms.empty()) throw UsageError("query needs --terms");
  if (o.max_path_len < 1) throw UsageError("--max-path-len must be >= 1");
  CausalGraph graph = LoadGraph(StageInput(c, kGraphFile, "build"));
  std::set<int> targets = FindTargets(graph, o.terms);
  SubgraphView view = OneHopSubgraph(graph, targets);

  log << "targets: " << targets.size() << "  subgraph: " << view.included_nodes.size()
      << " nodes, " << view.included_edges.size() << " edges\n";
  for (int t : targets) {
    log << "\n[" << t << "] " << graph.node(t).display_label << '\n';
    for (int e : graph.InEdges(t)) {
      const KgEdge &edge = graph.edges()[e];
      log << "  <- " << graph.node(edge.source).display_label << " (s=" << edge.support
          << ")\n";
    }
    for (const Successor &s : SuccessorsBySupport(graph, t)) {
      log << "  -> " << s.label << " (s=" << s.support << ")\n";
    }
    for (const Chain &chain : TransitiveChains(graph, t, o.max_path_len)) {
      if (chain.nodes.size() < 3) continue;  // direct edges listed above
      log << "  chain";
      for (int n : chain.nodes) log << (n == t ? " " : " -> ") << graph.node(n).display_label;
      log << " (confidence " << chain.confidence << ")\n";
    }
  }
  if (!o.out.empty()) {
    std::ofstream out = Create(o.out);
    Export(graph, &view, o.format, out);
    Close(out, o.out);
  }
}

void CmdTrend(const PipelineConfig &c, const TrendOptions &o, std::ostream &log) {
  if (o.terms.empty()) throw UsageError("trend needs --terms");
  const std::vector<Date> boundaries = o.buckets ? *o.buckets : c.time_buckets;
  if (boundaries.empty()) throw UsageError("trend needs --buckets or config time_buckets");
  Corpus corpus = LoadCorpus(Require(c.sentences, "sentences", "trend"),
                             Require(c.documents, "documents", "trend"));
  CausalGraph graph = LoadGraph(StageInput(c, kGraphFile, "build"));
  TrendReport report = TrendAnalysis(graph, corpus, boundaries, o.terms, c.seed);

  log << "sample size per bucket: " << report.sample_size << '\n';
  if (!report.rejected_docs.empty()) {
    log << "documents without a usable date: " << report.rejected_docs.size() << '\n';
  }
  OrderedJson j;
  j["seed"] = c.seed;
  j["sample_size"] = report.sample_size;
  j["rejected_docs"] = report.rejected_docs;
  j["buckets"] = OrderedJson::array();
  for (std::size_t i = 0; i < report.buckets.size(); ++i) {
    const TrendBucket &b = report.buckets[i];
    log << b.label << ": " << b.highlight_count << " highlighted of "
        << b.view.included_edges.size() << " edges\n";
    OrderedJson bj;
    bj["label"] = b.label;
    bj["sampled_docs"] = b.sampled_docs;
    bj["highlight_count"] = b.highlight_count;
    OrderedJson edges = OrderedJson::array();
    for (const EdgeKey &e : b.view.highlight_edges) edges.push_back({e.first, e.second});
    bj["highlight_edges"] = std::move(edges);
    j["buckets"].push_back(std::move(bj));
    if (!o.out.empty()) {
      const fs::path p = o.out / ("bucket_" + std::to_string(i) + Extension(o.format));
      std::ofstream out = Create(p);
      Export(graph, &b.view, o.format, out);
      Close(out, p);
    }
  }
  if (!o.out.empty()) {
    const fs::path p = o.out / "trend.json";
    std::ofstream out = Create(p);
    out << j.dump(1) << '\n';
    Close(out, p);
  }
}

void CmdEval(const PipelineConfig &c, const EvalOptions &o, std::ostream &log) {
  if (!o.nmi_a.empty() || !o.nmi_b.empty()) {
    if (o.nmi_a.empty() || o.nmi_b.empty()) throw UsageError("--nmi needs two cluster files");
    auto load = [](const fs::path &p) {
      Clustering out;
      for (const auto &[id, topic] : LoadClusterFile(p).assignment) {
        out[id] = std::to_string(topic);
      }
      return out;
    };
    log << "NMI " << Fixed(Nmi(load(o.nmi_a), load(o.nmi_b)), 4) << '\n';
    return;
  }
  const fs::path gold_path = o.gold.empty() ? Require(c.gold, "gold", "eval") : o.gold;
  const fs::path rel_path =
      o.relations.empty() ? StageInput(c, kRelationsFile, "extract") : o.relations;
  if (o.method != "all" && !ParseMethod(o.method)) {
    throw UsageError("--method must be all, pattern or bert");
  }
  // Only annotated sentences are scored; the rest of the corpus has no gold.
  std::vector<GoldRelation> golds = LoadGold(gold_path);
  std::set<std::string> annotated;
  for (const GoldRelation &g : golds) annotated.insert(g.sentence_id);
  std::vector<CausalRelation> relations;
  int unannotated = 0;
  for (CausalRelation &r : LoadRelations(rel_path)) {
    if (o.method != "all" && r.method != *ParseMethod(o.method)) continue;
    if (!annotated.contains(r.sentence_id)) {
      ++unannotated;
      continue;
    }
    relations.push_back(r);
  }
  log << "scored " << relations.size() << " relations in " << annotated.size()
      << " annotated sentences (" << unannotated << " outside the gold set)\n";
  EvalReport report = Score(ToSpanPairs(relations), ToSpanPairs(golds));

  WriteReportTable(report, log);
  if (o.whitelist_duplicates) {
    log << "adjusted P " << Fixed(AdjustedPrecision(report), 4) << " (" << report.duplicate_fp
        << " duplicates set aside)\n";
  }
  const fs::path out_path = c.output_dir / kEvalFile;
  std::ofstream out = Create(out_path);
  WriteReportJson(report, out);
  Close(out, out_path);
}

void CmdExport(const PipelineConfig &c, const ExportOptions &o, std::ostream &log) {
  CausalGraph graph = LoadGraph(StageInput(c, kGraphFile, "build"));
  if (o.out.empty()) {
    Export(graph, nullptr, o.format, log);
    return;
  }
  std::ofstream out = Create(o.out);
  Export(graph, nullptr, o.format, out);
  Close(out, o.out);
}

}  // namespace causalkg::cli
