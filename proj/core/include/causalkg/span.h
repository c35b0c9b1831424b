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

#ifndef CAUSALKG_SPAN_H_
#define CAUSALKG_SPAN_H_

#include <algorithm>
#include <compare>
#include <string>

namespace causalkg {

// Half-open token range [start, end).
struct TokenSpan {
  int start = 0;
  int end = 0;

  int size() const { return end - start; }
  bool empty() const { return end <= start; }
  bool Contains(int index) const { return index >= start && index < end; }
  bool Overlaps(const TokenSpan &other) const {
    return start < other.end && other.start < end;
  }

  // Smallest span covering both.
  TokenSpan Cover(const TokenSpan &other) const {
    return {std::min(start, other.start), std::max(end, other.end)};
  }

  std::string ToString() const {
    return "[" + std::to_string(start) + "," + std::to_string(end) + ")";
  }

  auto operator<=>(const TokenSpan &) const = default;
};

}  // namespace causalkg

#endif  // CAUSALKG_SPAN_H_
