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

#include "causalkg/graph_io.h"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

using internal::Json;
using internal::OrderedJson;

namespace {

constexpr const char *kGraphFormat = "causalkg-graph";
constexpr int kGraphVersion = 1;

}  // namespace

void WriteGraph(const CausalGraph &graph, const BuildInfo &info, std::ostream &out) {
  OrderedJson j;
  j["format"] = kGraphFormat;
  j["version"] = kGraphVersion;
  OrderedJson build;
  build["config_hash"] = info.config_hash;
  OrderedJson digests = OrderedJson::object();
  for (const auto &[name, sha] : info.input_digests) digests[name] = sha;
  build["input_digests"] = std::move(digests);
  j["build"] = std::move(build);
  OrderedJson nodes = OrderedJson::array();
  for (const KgNode &n : graph.nodes()) {
    nodes.push_back({{"topic_id", n.topic_id},
                     {"display_label", n.display_label},
                     {"member_args", n.member_args}});
  }
  j["nodes"] = std::move(nodes);
  OrderedJson edges = OrderedJson::array();
  for (const KgEdge &e : graph.edges()) {
    OrderedJson ev = OrderedJson::array();
    for (const Evidence &x : e.evidence) {
      ev.push_back({{"relation_id", x.relation_id},
                    {"sentence_id", x.sentence_id},
                    {"provenance", ProvenanceName(x.provenance)}});
    }
    edges.push_back({{"source", e.source},
                     {"target", e.target},
                     {"support", e.support},
                     {"evidence", std::move(ev)}});
  }
  j["edges"] = std::move(edges);
  out << j.dump(1) << '\n';
}

CausalGraph ReadGraph(std::istream &in, BuildInfo *info) {
  try {
    Json j = Json::parse(in);
    if (j.value("format", "") != kGraphFormat) throw InputError("not a causalkg graph file");
    if (j.value("version", 0) != kGraphVersion) {
      throw InputError("unsupported graph version " + j.value("version", Json()).dump());
    }
    if (info != nullptr) {
      const Json &b = j.at("build");
      info->config_hash = b.at("config_hash").get<std::string>();
      info->input_digests =
          b.at("input_digests").get<std::map<std::string, std::string>>();
    }
    std::vector<KgNode> nodes;
    for (const Json &nj : j.at("nodes")) {
      nodes.push_back({nj.at("topic_id").get<int>(), nj.at("display_label").get<std::string>(),
                       nj.at("member_args").get<std::vector<std::string>>()});
    }
    std::vector<KgEdge> edges;
    for (const Json &ej : j.at("edges")) {
      KgEdge e;
      e.source = ej.at("source").get<int>();
      e.target = ej.at("target").get<int>();
      e.support = ej.at("support").get<int>();
      for (const Json &x : ej.at("evidence")) {
        const std::string prov = x.at("provenance").get<std::string>();
        auto p = ParseProvenance(prov);
        if (!p) throw InputError("unknown provenance '" + prov + "'");
        e.evidence.push_back({x.at("relation_id").get<std::string>(),
                              x.at("sentence_id").get<std::string>(), *p});
      }
      edges.push_back(std::move(e));
    }
    return CausalGraph(std::move(nodes), std::move(edges));
  } catch (const Json::exception &e) {
    throw InputError(std::string("malformed graph file: ") + e.what());
  }
}

CausalGraph LoadGraph(const std::filesystem::path &path, BuildInfo *info) {
  std::ifstream in = internal::OpenInput(path);
  return ReadGraph(in, info);
}

std::optional<ExportFormat> ParseExportFormat(const std::string &name) {
  if (name == "graphml") return ExportFormat::kGraphMl;
  if (name == "cytoscape" || name == "cytoscape-json") return ExportFormat::kCytoscapeJson;
  if (name == "dot") return ExportFormat::kDot;
  return std::nullopt;
}

namespace {

struct ExportNode {
  const KgNode *node;
  std::int64_t in_support = 0;
  std::int64_t out_support = 0;
  bool target = false;
};

struct ExportEdge {
  const KgEdge *edge;
  bool highlight = false;
};

void Select(const CausalGraph &graph, const SubgraphView *view,
            std::vector<ExportNode> &nodes, std::vector<ExportEdge> &edges) {
  for (const KgNode &n : graph.nodes()) {
    if (view != nullptr && !view->included_nodes.contains(n.topic_id)) continue;
    ExportNode x{&n};
    x.target = view != nullptr && view->target_nodes.contains(n.topic_id);
    for (int e : graph.InEdges(n.topic_id)) x.in_support += graph.edges()[e].support;
    for (int e : graph.OutEdges(n.topic_id)) x.out_support += graph.edges()[e].support;
    nodes.push_back(x);
  }
  for (const KgEdge &e : graph.edges()) {
    const EdgeKey key{e.source, e.target};
    if (view != nullptr && !view->included_edges.contains(key)) continue;
    edges.push_back({&e, view != nullptr && view->highlight_edges.contains(key)});
  }
}

std::string XmlEscape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string DotEscape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const char *Bool(bool b) { return b ? "true" : "false"; }

void ExportGraphMl(const std::vector<ExportNode> &nodes,
                   const std::vector<ExportEdge> &edges, std::ostream &out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"topic_id\" for=\"node\" attr.name=\"topic_id\" attr.type=\"int\"/>\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"members\" for=\"node\" attr.name=\"members\" attr.type=\"int\"/>\n"
      << "  <key id=\"in_support\" for=\"node\" attr.name=\"in_support\" attr.type=\"long\"/>\n"
      << "  <key id=\"out_support\" for=\"node\" attr.name=\"out_support\" attr.type=\"long\"/>\n"
      << "  <key id=\"target\" for=\"node\" attr.name=\"target\" attr.type=\"boolean\"/>\n"
      << "  <key id=\"support\" for=\"edge\" attr.name=\"support\" attr.type=\"int\"/>\n"
      << "  <key id=\"highlight\" for=\"edge\" attr.name=\"highlight\" attr.type=\"boolean\"/>\n"
      << "  <graph id=\"causalkg\" edgedefault=\"directed\">\n";
  for (const ExportNode &n : nodes) {
    out << "    <node id=\"n" << n.node->topic_id << "\">"
        << "<data key=\"topic_id\">" << n.node->topic_id << "</data>"
        << "<data key=\"label\">" << XmlEscape(n.node->display_label) << "</data>"
        << "<data key=\"members\">" << n.node->member_args.size() << "</data>"
        << "<data key=\"in_support\">" << n.in_support << "</data>"
        << "<data key=\"out_support\">" << n.out_support << "</data>"
        << "<data key=\"target\">" << Bool(n.target) << "</data></node>\n";
  }
  for (const ExportEdge &e : edges) {
    out << "    <edge source=\"n" << e.edge->source << "\" target=\"n" << e.edge->target
        << "\"><data key=\"support\">" << e.edge->support << "</data>"
        << "<data key=\"highlight\">" << Bool(e.highlight) << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void ExportCytoscape(const std::vector<ExportNode> &nodes,
                     const std::vector<ExportEdge> &edges, std::ostream &out) {
  OrderedJson jn = OrderedJson::array();
  for (const ExportNode &n : nodes) {
    jn.push_back({{"data",
                   {{"id", "n" + std::to_string(n.node->topic_id)},
                    {"topic_id", n.node->topic_id},
                    {"label", n.node->display_label},
                    {"members", n.node->member_args.size()},
                    {"in_support", n.in_support},
                    {"out_support", n.out_support},
                    {"target", n.target}}}});
  }
  OrderedJson je = OrderedJson::array();
  for (const ExportEdge &e : edges) {
    const std::string s = "n" + std::to_string(e.edge->source);
    const std::string t = "n" + std::to_string(e.edge->target);
    je.push_back({{"data",
                   {{"id", s + "-" + t},
                    {"source", s},
                    {"target", t},
                    {"support", e.edge->support},
                    {"highlight", e.highlight}}}});
  }
  OrderedJson j;
  j["elements"] = {{"nodes", std::move(jn)}, {"edges", std::move(je)}};
  out << j.dump(1) << '\n';
}

void ExportDot(const std::vector<ExportNode> &nodes, const std::vector<ExportEdge> &edges,
               std::ostream &out) {
  out << "digraph causalkg {\n";
  for (const ExportNode &n : nodes) {
    out << "  n" << n.node->topic_id << " [label=\"" << DotEscape(n.node->display_label)
        << "\"";
    if (n.target) out << ", style=filled, fillcolor=gold";
    out << "];\n";
  }
  for (const ExportEdge &e : edges) {
    out << "  n" << e.edge->source << " -> n" << e.edge->target << " [label=\""
        << e.edge->support << "\", weight=" << e.edge->support;
    if (e.highlight) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  out << "}\n";
}

int NodeIdFromXml(const std::string &id) {
  if (id.size() < 2 || id[0] != 'n') throw InputError("unexpected GraphML node id '" + id + "'");
  try {
    std::size_t used = 0;
    int v = std::stoi(id.substr(1), &used);
    if (used + 1 != id.size()) throw std::invalid_argument(id);
    return v;
  } catch (const std::exception &) {
    throw InputError("unexpected GraphML node id '" + id + "'");
  }
}

}  // namespace

void Export(const CausalGraph &graph, const SubgraphView *view, ExportFormat format,
            std::ostream &out) {
  std::vector<ExportNode> nodes;
  std::vector<ExportEdge> edges;
  Select(graph, view, nodes, edges);
  switch (format) {
    case ExportFormat::kGraphMl: ExportGraphMl(nodes, edges, out); break;
    case ExportFormat::kCytoscapeJson: ExportCytoscape(nodes, edges, out); break;
    case ExportFormat::kDot: ExportDot(nodes, edges, out); break;
  }
}

ImportedGraph ImportGraphMl(std::istream &in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error &e) {
    throw InputError(std::string("malformed GraphML: ") + e.what());
  }
  auto data = [](const pt::ptree &element) {
    std::map<std::string, std::string> out;
    for (const auto &[name, child] : element) {
      if (name == "data") out[child.get<std::string>("<xmlattr>.key")] = child.data();
    }
    return out;
  };
  ImportedGraph result;
  std::vector<KgNode> nodes;
  std::vector<KgEdge> edges;
  try {
    const pt::ptree &g = tree.get_child("graphml.graph");
    for (const auto &[name, child] : g) {
      if (name == "node") {
        auto d = data(child);
        KgNode n;
        n.topic_id = NodeIdFromXml(child.get<std::string>("<xmlattr>.id"));
        n.display_label = d["label"];
        if (d["target"] == "true") result.flags.target_nodes.insert(n.topic_id);
        result.flags.included_nodes.insert(n.topic_id);
        nodes.push_back(std::move(n));
      } else if (name == "edge") {
        auto d = data(child);
        KgEdge e;
        e.source = NodeIdFromXml(child.get<std::string>("<xmlattr>.source"));
        e.target = NodeIdFromXml(child.get<std::string>("<xmlattr>.target"));
        e.support = std::stoi(d.at("support"));
        if (d["highlight"] == "true") result.flags.highlight_edges.insert({e.source, e.target});
        result.flags.included_edges.insert({e.source, e.target});
        edges.push_back(std::move(e));
      }
    }
  } catch (const pt::ptree_error &e) {
    throw InputError(std::string("malformed GraphML: ") + e.what());
  } catch (const std::logic_error &e) {
    throw InputError(std::string("malformed GraphML: ") + e.what());
  }
  result.graph = CausalGraph(std::move(nodes), std::move(edges));
  return result;
}

}  // namespace causalkg
