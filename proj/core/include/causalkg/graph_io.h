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

#ifndef CAUSALKG_GRAPH_IO_H_
#define CAUSALKG_GRAPH_IO_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "causalkg/graph.h"
#include "causalkg/graph_query.h"

namespace causalkg {

// Build provenance stored with a persisted graph.
struct BuildInfo {
  std::string config_hash;
  std::map<std::string, std::string> input_digests;  // name -> sha256

  bool operator==(const BuildInfo &) const = default;
};

void WriteGraph(const CausalGraph &graph, const BuildInfo &info, std::ostream &out);
CausalGraph ReadGraph(std::istream &in, BuildInfo *info = nullptr);
CausalGraph LoadGraph(const std::filesystem::path &path, BuildInfo *info = nullptr);

enum class ExportFormat { kGraphMl, kCytoscapeJson, kDot };

std::optional<ExportFormat> ParseExportFormat(const std::string &name);

// Nodes carry label, support totals and target flags; edges carry support and
// highlight flags. With a view only its nodes and edges are written.
void Export(const CausalGraph &graph, const SubgraphView *view,
            ExportFormat format, std::ostream &out);

// Re-imports a GraphML document written by Export. Evidence and member lists
// are not part of the export and come back empty.
struct ImportedGraph {
  CausalGraph graph;
  SubgraphView flags;  // target_nodes and highlight_edges read back
};
ImportedGraph ImportGraphMl(std::istream &in);

}  // namespace causalkg

#endif  // CAUSALKG_GRAPH_IO_H_
