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

#ifndef CAUSALKG_SRC_JSON_UTIL_H_
#define CAUSALKG_SRC_JSON_UTIL_H_

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <string>

#include "causalkg/corpus.h"
#include "causalkg/error.h"
#include "causalkg/span.h"
#include "json.hpp"

namespace causalkg {
namespace internal {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Calls `fn(line_number, record)` for every non-blank line. Parse failures
// and exceptions thrown by `fn` are rethrown as InputError with the line.
inline void ForEachJsonLine(std::istream &in, const std::string &what,
                            const std::function<void(int, const Json &)> &fn) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::exception &e) {
      throw InputError(what + " line " + std::to_string(line_number) +
                       ": malformed record: " + e.what());
    }
    try {
      fn(line_number, record);
    } catch (const Json::exception &e) {
      throw InputError(what + " line " + std::to_string(line_number) +
                       ": malformed record: " + e.what());
    } catch (const Error &e) {
      if (e.category() != ErrorCategory::kInvalidInput) throw;
      throw InputError(what + " line " + std::to_string(line_number) + ": " +
                       e.what());
    }
  }
}

inline TokenSpan SpanFromJson(const Json &j) {
  if (!j.is_array() || j.size() != 2) {
    throw InputError("span must be a [start, end) pair");
  }
  TokenSpan span{j[0].get<int>(), j[1].get<int>()};
  if (span.empty() || span.start < 0) {
    throw InputError("empty or negative span " + span.ToString());
  }
  return span;
}

inline OrderedJson SpanToJson(const TokenSpan &span) {
  return OrderedJson::array({span.start, span.end});
}

inline std::ifstream OpenInput(const std::filesystem::path &path,
                               std::ios::openmode mode = std::ios::in) {
  if (!std::filesystem::exists(path)) {
    throw MissingInputError("file not found: " + path.string());
  }
  std::ifstream in(path, mode);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

inline std::ofstream OpenOutput(const std::filesystem::path &path,
                                std::ios::openmode mode = std::ios::out) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

SentenceAnalysis ParseSentenceJson(const Json &j);  // validates
OrderedJson SentenceToJson(const SentenceAnalysis &s);

}  // namespace internal
}  // namespace causalkg

#endif  // CAUSALKG_SRC_JSON_UTIL_H_
