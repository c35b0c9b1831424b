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

#ifndef CAUSALKG_TOOLS_PIPELINE_H_
#define CAUSALKG_TOOLS_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/error.h"
#include "causalkg/graph_io.h"
#include "causalkg/graph_stats.h"
#include "causalkg/pattern_engine.h"
#include "json.hpp"

namespace causalkg::cli {

// Bad command line or configuration file. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ExitCode(ErrorCategory category);

// Effective pipeline configuration. Paths are resolved against the directory
// of the config file; empty means "not configured".
struct PipelineConfig {
  std::filesystem::path sentences;
  std::filesystem::path documents;
  std::filesystem::path patterns;
  std::filesystem::path mined_corpus;
  std::filesystem::path predictions;
  std::filesystem::path cpc_verdicts;
  std::string sidecar_url;
  std::filesystem::path embeddings;
  std::filesystem::path gold;
  std::filesystem::path output_dir;
  int k = 3000;  // 0 keeps every argument in its own topic
  int keywords = 5;
  std::uint64_t seed = 42;
  std::vector<Date> time_buckets;
  SelectionPolicy selection;
  bool suppress_duplicates = false;

  // The settings as read plus overrides, minus output_dir; hashed into the
  // manifest and the graph build info.
  nlohmann::json effective;

  std::string Hash() const;
};

struct ConfigOverrides {
  std::optional<std::string> output_dir;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  std::optional<int> keywords;
};

PipelineConfig ParseConfig(const nlohmann::json &j, const std::filesystem::path &base_dir,
                           const ConfigOverrides &overrides = {});
PipelineConfig LoadConfig(const std::filesystem::path &path,
                          const ConfigOverrides &overrides = {});

std::vector<Date> ParseDateList(const std::string &csv);

// Stage outputs, relative to output_dir.
inline constexpr const char *kPatternsFile = "patterns.txt";
inline constexpr const char *kPatternRanksFile = "pattern_ranks.tsv";
inline constexpr const char *kRelationsFile = "relations.jsonl";
inline constexpr const char *kArgumentsFile = "arguments.jsonl";
inline constexpr const char *kExtractSummaryFile = "extract_summary.json";
inline constexpr const char *kClustersFile = "clusters.json";
inline constexpr const char *kGraphFile = "graph.json";
inline constexpr const char *kStatsFile = "stats.json";
inline constexpr const char *kEvalFile = "eval.json";
inline constexpr const char *kManifestFile = "manifest.json";

struct MethodCounts {
  int sentences = 0;         // sentences with at least one relation
  int unique_sentences = 0;  // distinct texts among them
  int relations = 0;
  int distinct_pairs = 0;    // distinct (cause text, effect text)
  double avg_support = 0.0;  // relations / distinct_pairs
};

struct ExtractSummary {
  MethodCounts pattern;
  MethodCounts bert;
  MethodCounts total;
  int suppressed = 0;
};

struct MiningSummary {
  int base = 0;
  int mined = 0;
  int selected = 0;
  int overlap = 0;
  int written = 0;
  int skipped = 0;
};

MiningSummary CmdMinePatterns(const PipelineConfig &config, std::ostream &log);
ExtractSummary CmdExtract(const PipelineConfig &config, std::ostream &log);
void CmdCluster(const PipelineConfig &config, std::ostream &log);
GraphStats CmdBuild(const PipelineConfig &config, std::ostream &log);

struct QueryOptions {
  std::vector<std::string> terms;
  int max_path_len = 3;
  ExportFormat format = ExportFormat::kGraphMl;
  std::filesystem::path out;
};
void CmdQuery(const PipelineConfig &config, const QueryOptions &options, std::ostream &log);

struct TrendOptions {
  std::vector<std::string> terms;
  std::optional<std::vector<Date>> buckets;  // default: config time_buckets
  ExportFormat format = ExportFormat::kGraphMl;
  std::filesystem::path out;                 // directory for per-bucket exports
};
void CmdTrend(const PipelineConfig &config, const TrendOptions &options, std::ostream &log);

struct EvalOptions {
  std::filesystem::path gold;       // default: config gold
  std::filesystem::path relations;  // default: output_dir/relations.jsonl
  std::string method = "all";       // all | pattern | bert
  bool whitelist_duplicates = false;
  std::filesystem::path nmi_a;      // two cluster files switch to NMI mode
  std::filesystem::path nmi_b;
};
void CmdEval(const PipelineConfig &config, const EvalOptions &options, std::ostream &log);

struct ExportOptions {
  ExportFormat format = ExportFormat::kGraphMl;
  std::filesystem::path out;  // stdout when empty
};
void CmdExport(const PipelineConfig &config, const ExportOptions &options, std::ostream &log);

}  // namespace causalkg::cli

#endif  // CAUSALKG_TOOLS_PIPELINE_H_
