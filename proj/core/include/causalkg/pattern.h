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

#ifndef CAUSALKG_PATTERN_H_
#define CAUSALKG_PATTERN_H_

#include <string>
#include <string_view>
#include <vector>

namespace causalkg {

enum class ElementKind { kCauseSlot, kEffectSlot, kAnchor, kStep };

// kUp walks dependent -> head ("-rel"), kDown walks head -> dependent ("+rel").
enum class StepDirection { kUp, kDown };

inline StepDirection Reverse(StepDirection d) {
  return d == StepDirection::kUp ? StepDirection::kDown : StepDirection::kUp;
}

struct PatternElement {
  ElementKind kind = ElementKind::kAnchor;
  std::string word;      // anchors only
  std::string tag;       // anchors: POS tag; slots: optional constraint ("N")
  StepDirection direction = StepDirection::kUp;  // steps only
  std::string relation;  // steps only

  static PatternElement CauseSlot(std::string constraint = "");
  static PatternElement EffectSlot(std::string constraint = "");
  static PatternElement Anchor(std::string word, std::string tag);
  static PatternElement Step(StepDirection direction, std::string relation);

  bool is_node() const { return kind != ElementKind::kStep; }
  std::string ToString() const;

  bool operator==(const PatternElement &) const = default;
};

// A slot constraint "N" accepts every noun tag; an empty constraint accepts
// anything; any other constraint must equal the tag.
bool SlotAccepts(std::string_view constraint, std::string_view pos);

enum class PatternSource { kCauseNet, kMined, kMerged };

// Cause/effect placeholders joined by directed dependency steps and anchor
// tokens, e.g. "[[cause]]/N -nmod:by brought/VBN +nmod:of [[effect]]".
//
// The canonical form always starts at the cause slot: a pattern written
// effect-first is stored reversed (element order flipped, step directions
// swapped), so two spellings of the same path compare equal.
class DependencyPattern {
 public:
  DependencyPattern() = default;

  // Throws InputError on a malformed slot marker, a step without a +/-
  // direction prefix, zero or duplicate slots, or broken node/step
  // alternation.
  static DependencyPattern Parse(std::string_view text,
                                 PatternSource source = PatternSource::kCauseNet);

  // Builds from an element list; validates and canonicalizes like Parse.
  static DependencyPattern FromElements(std::vector<PatternElement> elements,
                                        PatternSource source);

  const std::vector<PatternElement> &elements() const { return elements_; }
  PatternSource source() const { return source_; }
  void set_source(PatternSource source) { source_ = source; }

  // True iff at least one anchor token is present.
  bool has_center_token() const;

  // Single-space separated canonical string.
  std::string ToString() const;

  // The canonical string with slot constraints removed; used as a lookup key.
  std::string Skeleton() const;

  bool operator==(const DependencyPattern &other) const {
    return elements_ == other.elements_;
  }

 private:
  std::vector<PatternElement> elements_;
  PatternSource source_ = PatternSource::kCauseNet;
};

// canonical(s) == Parse(s).ToString().
std::string CanonicalPattern(std::string_view text);

}  // namespace causalkg

#endif  // CAUSALKG_PATTERN_H_
