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

#include "causalkg/relation.h"

#include <fstream>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

using internal::Json;
using internal::OrderedJson;

namespace {

constexpr const char *kProvenanceNames[] = {
    "PATTERN", "SINGLE", "MERGED", "LONGEST3", "CPC_MULTI", "CPC_RECOVERED"};

}  // namespace

const char *MethodName(ExtractionMethod method) {
  return method == ExtractionMethod::kPattern ? "pattern" : "bert";
}

std::optional<ExtractionMethod> ParseMethod(std::string_view name) {
  if (name == "pattern") return ExtractionMethod::kPattern;
  if (name == "bert") return ExtractionMethod::kBert;
  return std::nullopt;
}

const char *ProvenanceName(Provenance provenance) {
  return kProvenanceNames[static_cast<int>(provenance)];
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (name == kProvenanceNames[i]) return static_cast<Provenance>(i);
  }
  return std::nullopt;
}

std::vector<CausalRelation> ReadRelations(std::istream &in) {
  std::vector<CausalRelation> out;
  internal::ForEachJsonLine(in, "relations", [&](int line, const Json &j) {
    CausalRelation r;
    r.sentence_id = j.at("sentence_id").get<std::string>();
    r.relation_id = j.value("relation_id", r.sentence_id + "#" + std::to_string(line));
    std::string method = j.at("method").get<std::string>();
    auto m = ParseMethod(method);
    if (!m) throw InputError("unknown method '" + method + "'");
    r.method = *m;
    std::string prov = j.value("provenance", r.method == ExtractionMethod::kPattern
                                                 ? "PATTERN"
                                                 : "SINGLE");
    auto p = ParseProvenance(prov);
    if (!p) throw InputError("unknown provenance '" + prov + "'");
    r.provenance = *p;
    r.cause_span = internal::SpanFromJson(j.at("cause_span"));
    r.effect_span = internal::SpanFromJson(j.at("effect_span"));
    if (r.cause_span.Overlaps(r.effect_span)) {
      throw InputError("relation '" + r.relation_id + "' has overlapping spans");
    }
    r.pattern = j.value("pattern", "");
    if (j.contains("signal_tokens")) {
      r.signal_tokens = j.at("signal_tokens").get<std::vector<int>>();
    }
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<CausalRelation> LoadRelations(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadRelations(in);
}

void WriteRelations(const std::vector<CausalRelation> &relations, std::ostream &out) {
  for (const CausalRelation &r : relations) {
    OrderedJson j;
    j["relation_id"] = r.relation_id;
    j["sentence_id"] = r.sentence_id;
    j["method"] = MethodName(r.method);
    j["provenance"] = ProvenanceName(r.provenance);
    j["cause_span"] = internal::SpanToJson(r.cause_span);
    j["effect_span"] = internal::SpanToJson(r.effect_span);
    if (r.method == ExtractionMethod::kPattern) {
      j["pattern"] = r.pattern;
      j["signal_tokens"] = r.signal_tokens;
    }
    out << j.dump() << '\n';
  }
}

void SaveRelations(const std::vector<CausalRelation> &relations,
                   const std::filesystem::path &path) {
  std::ofstream out = internal::OpenOutput(path);
  WriteRelations(relations, out);
}

}  // namespace causalkg
