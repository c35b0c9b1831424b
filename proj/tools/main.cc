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

// causalkg: build and query a causal knowledge graph from parsed news text.

#include <iostream>

#include "CLI11.hpp"
#include "pipeline.h"

namespace {

using namespace causalkg;
using namespace causalkg::cli;

ExportFormat FormatFlag(const std::string &name) {
  auto f = ParseExportFormat(name);
  if (!f) throw UsageError("unknown --format '" + name + "' (graphml, cytoscape, dot)");
  return *f;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Causal knowledge graph pipeline"};
  app.require_subcommand(1);

  std::string config_path = "causalkg.json";
  ConfigOverrides overrides;
  std::string out_dir;
  int k = -1, keywords = -1;
  std::uint64_t seed = 0;
  app.add_option("-c,--config", config_path, "Pipeline config file")->capture_default_str();
  auto *out_opt = app.add_option("--out-dir", out_dir, "Override output_dir");
  auto *k_opt = app.add_option("--k", k, "Override k (0 = no clustering)");
  auto *seed_opt = app.add_option("--seed", seed, "Override seed");
  auto *kw_opt = app.add_option("--keywords", keywords, "Override keywords per topic");

  auto *mine = app.add_subcommand("mine-patterns", "Mine, select and merge patterns");
  auto *extract = app.add_subcommand("extract", "Extract relations with both engines");
  auto *cluster = app.add_subcommand("cluster", "Cluster arguments into topics");
  auto *build = app.add_subcommand("build", "Build the graph and its statistics");

  std::string terms_csv, format = "graphml", out_path, buckets_csv;
  QueryOptions query_opts;
  auto *query = app.add_subcommand("query", "One-hop subgraph, successors and chains");
  query->add_option("--terms", terms_csv, "Comma-separated search terms")->required();
  query->add_option("--max-path-len", query_opts.max_path_len, "Chain length in edges")
      ->capture_default_str();
  query->add_option("--format", format, "graphml, cytoscape or dot");
  query->add_option("--out", out_path, "Write the subgraph here");

  auto *trend = app.add_subcommand("trend", "Down-sampled time bucket comparison");
  trend->add_option("--terms", terms_csv, "Comma-separated search terms")->required();
  auto *buckets_opt =
      trend->add_option("--buckets", buckets_csv, "Comma-separated YYYY-MM-DD boundaries");
  trend->add_option("--format", format, "graphml, cytoscape or dot");
  trend->add_option("--out", out_path, "Directory for per-bucket exports");

  EvalOptions eval_opts;
  std::string gold, relations;
  std::vector<std::string> nmi;
  auto *eval = app.add_subcommand("eval", "Score relations against gold, or NMI");
  eval->add_option("--gold", gold, "Gold annotation file");
  eval->add_option("--relations", relations, "Relation file (default: extract output)");
  eval->add_option("--method", eval_opts.method, "all, pattern or bert")
      ->capture_default_str();
  eval->add_flag("--whitelist-duplicates", eval_opts.whitelist_duplicates,
                 "Also report precision without duplicate false positives");
  eval->add_option("--nmi", nmi, "Two cluster files to compare")->expected(2);

  auto *exp = app.add_subcommand("export", "Export the whole graph");
  exp->add_option("--format", format, "graphml, cytoscape or dot");
  exp->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*out_opt) overrides.output_dir = out_dir;
    if (*k_opt) overrides.k = k;
    if (*seed_opt) overrides.seed = seed;
    if (*kw_opt) overrides.keywords = keywords;
    const PipelineConfig config = LoadConfig(config_path, overrides);

    auto split = [](const std::string &csv) {
      std::vector<std::string> out;
      std::size_t start = 0;
      while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        if (comma > start) out.push_back(csv.substr(start, comma - start));
        start = comma + 1;
      }
      return out;
    };

    if (*mine) {
      CmdMinePatterns(config, std::cout);
    } else if (*extract) {
      CmdExtract(config, std::cout);
    } else if (*cluster) {
      CmdCluster(config, std::cout);
    } else if (*build) {
      CmdBuild(config, std::cout);
    } else if (*query) {
      query_opts.terms = split(terms_csv);
      query_opts.format = FormatFlag(format);
      query_opts.out = out_path;
      CmdQuery(config, query_opts, std::cout);
    } else if (*trend) {
      TrendOptions o;
      o.terms = split(terms_csv);
      if (*buckets_opt) o.buckets = ParseDateList(buckets_csv);
      o.format = FormatFlag(format);
      o.out = out_path;
      CmdTrend(config, o, std::cout);
    } else if (*eval) {
      eval_opts.gold = gold;
      eval_opts.relations = relations;
      if (nmi.size() == 2) {
        eval_opts.nmi_a = nmi[0];
        eval_opts.nmi_b = nmi[1];
      }
      CmdEval(config, eval_opts, std::cout);
    } else if (*exp) {
      ExportOptions o;
      o.format = FormatFlag(format);
      o.out = out_path;
      CmdExport(config, o, std::cout);
    }
  } catch (const UsageError &e) {
    std::cerr << "causalkg: " << e.what() << '\n';
    return 2;
  } catch (const Error &e) {
    std::cerr << "causalkg: " << CategoryName(e.category()) << ": " << e.what() << '\n';
    return ExitCode(e.category());
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "causalkg: io: " << e.what() << '\n';
    return 5;
  } catch (const std::exception &e) {
    std::cerr << "causalkg: internal: " << e.what() << '\n';
    return 1;
  }
  std::cout.flush();
  return std::cout ? 0 : 5;
}
