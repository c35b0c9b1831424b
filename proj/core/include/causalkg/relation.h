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

#ifndef CAUSALKG_RELATION_H_
#define CAUSALKG_RELATION_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causalkg/span.h"

namespace causalkg {

enum class ExtractionMethod { kPattern, kBert };

// How a relation was produced. kPattern for the dependency-pattern engine;
// the rest name the neural post-processing route.
enum class Provenance {
  kPattern,
  kSingle,
  kMerged,
  kLongest3,
  kCpcMulti,
  kCpcRecovered,
};

const char *MethodName(ExtractionMethod method);
std::optional<ExtractionMethod> ParseMethod(std::string_view name);
const char *ProvenanceName(Provenance provenance);
std::optional<Provenance> ParseProvenance(std::string_view name);

// One cause-effect pair grounded in a sentence, as written to the relation
// file. Every record is one occurrence.
struct CausalRelation {
  std::string relation_id;
  std::string sentence_id;
  ExtractionMethod method = ExtractionMethod::kPattern;
  Provenance provenance = Provenance::kPattern;
  TokenSpan cause_span;
  TokenSpan effect_span;
  std::string pattern;             // pattern method only
  std::vector<int> signal_tokens;  // pattern method only

  std::string cause_arg_id() const { return relation_id + "/cause"; }
  std::string effect_arg_id() const { return relation_id + "/effect"; }

  bool operator==(const CausalRelation &) const = default;
};

std::vector<CausalRelation> ReadRelations(std::istream &in);
std::vector<CausalRelation> LoadRelations(const std::filesystem::path &path);
void WriteRelations(const std::vector<CausalRelation> &relations,
                    std::ostream &out);
void SaveRelations(const std::vector<CausalRelation> &relations,
                   const std::filesystem::path &path);

}  // namespace causalkg

#endif  // CAUSALKG_RELATION_H_
