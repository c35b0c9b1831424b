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

#include "causalkg/pattern.h"

#include <algorithm>
#include <sstream>

#include "causalkg/corpus.h"
#include "causalkg/error.h"

namespace causalkg {

PatternElement PatternElement::CauseSlot(std::string constraint) {
  PatternElement e;
  e.kind = ElementKind::kCauseSlot;
  e.tag = std::move(constraint);
  return e;
}

PatternElement PatternElement::EffectSlot(std::string constraint) {
  PatternElement e;
  e.kind = ElementKind::kEffectSlot;
  e.tag = std::move(constraint);
  return e;
}

PatternElement PatternElement::Anchor(std::string word, std::string tag) {
  PatternElement e;
  e.kind = ElementKind::kAnchor;
  e.word = std::move(word);
  e.tag = std::move(tag);
  return e;
}

PatternElement PatternElement::Step(StepDirection direction, std::string relation) {
  PatternElement e;
  e.kind = ElementKind::kStep;
  e.direction = direction;
  e.relation = std::move(relation);
  return e;
}

std::string PatternElement::ToString() const {
  switch (kind) {
    case ElementKind::kCauseSlot:
      return tag.empty() ? "[[cause]]" : "[[cause]]/" + tag;
    case ElementKind::kEffectSlot:
      return tag.empty() ? "[[effect]]" : "[[effect]]/" + tag;
    case ElementKind::kAnchor:
      return word + "/" + tag;
    case ElementKind::kStep:
      return (direction == StepDirection::kUp ? "-" : "+") + relation;
  }
  return {};
}

bool SlotAccepts(std::string_view constraint, std::string_view pos) {
  if (constraint.empty()) return true;
  if (constraint == "N") return IsNounTag(pos);
  return constraint == pos;
}

namespace {

PatternElement ParseElement(const std::string &piece, std::size_t position) {
  if (piece.starts_with("[[")) {
    for (const auto &[marker, kind] :
         {std::pair{std::string("[[cause]]"), ElementKind::kCauseSlot},
          std::pair{std::string("[[effect]]"), ElementKind::kEffectSlot}}) {
      if (!piece.starts_with(marker)) continue;
      std::string rest = piece.substr(marker.size());
      if (rest.empty()) {
        PatternElement e;
        e.kind = kind;
        return e;
      }
      if (rest.size() > 1 && rest[0] == '/' && rest.find('/', 1) == std::string::npos) {
        PatternElement e;
        e.kind = kind;
        e.tag = rest.substr(1);
        return e;
      }
    }
    throw InputError("malformed slot marker '" + piece + "'");
  }
  if (piece[0] == '-' || piece[0] == '+') {
    if (piece.size() == 1) {
      throw InputError("step '" + piece + "' has no relation label");
    }
    return PatternElement::Step(
        piece[0] == '-' ? StepDirection::kUp : StepDirection::kDown, piece.substr(1));
  }
  std::size_t slash = piece.rfind('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == piece.size()) {
    if (position % 2 == 1) {
      throw InputError("missing direction prefix (+/-) on step '" + piece + "'");
    }
    throw InputError("anchor '" + piece + "' is not of the form word/TAG");
  }
  return PatternElement::Anchor(piece.substr(0, slash), piece.substr(slash + 1));
}

void Canonicalize(std::vector<PatternElement> &elements) {
  if (elements.empty()) throw InputError("empty pattern");
  int causes = 0;
  int effects = 0;
  for (const PatternElement &e : elements) {
    causes += e.kind == ElementKind::kCauseSlot;
    effects += e.kind == ElementKind::kEffectSlot;
  }
  if (causes == 0) throw InputError("pattern has no cause slot");
  if (causes > 1) throw InputError("pattern has a duplicate cause slot");
  if (effects == 0) throw InputError("pattern has no effect slot");
  if (effects > 1) throw InputError("pattern has a duplicate effect slot");

  for (std::size_t i = 0; i < elements.size(); ++i) {
    const bool want_node = i % 2 == 0;
    if (want_node && !elements[i].is_node()) {
      throw InputError("expected a slot or anchor at position " + std::to_string(i) +
                       ", found step '" + elements[i].ToString() + "'");
    }
    if (!want_node && elements[i].is_node()) {
      throw InputError("missing direction prefix (+/-) on step at position " +
                       std::to_string(i) + " ('" + elements[i].ToString() + "')");
    }
  }
  if (elements.size() % 2 == 0) throw InputError("pattern ends with a step");

  const ElementKind first = elements.front().kind;
  const ElementKind last = elements.back().kind;
  const bool slots_at_ends =
      (first == ElementKind::kCauseSlot && last == ElementKind::kEffectSlot) ||
      (first == ElementKind::kEffectSlot && last == ElementKind::kCauseSlot);
  if (!slots_at_ends) throw InputError("cause and effect slots must be the endpoints");

  if (first == ElementKind::kEffectSlot) {
    std::reverse(elements.begin(), elements.end());
    for (PatternElement &e : elements) {
      if (e.kind == ElementKind::kStep) e.direction = Reverse(e.direction);
    }
  }
}

}  // namespace

DependencyPattern DependencyPattern::Parse(std::string_view text, PatternSource source) {
  std::istringstream in{std::string(text)};
  std::vector<PatternElement> elements;
  std::string piece;
  while (in >> piece) elements.push_back(ParseElement(piece, elements.size()));
  return FromElements(std::move(elements), source);
}

DependencyPattern DependencyPattern::FromElements(std::vector<PatternElement> elements,
                                                  PatternSource source) {
  Canonicalize(elements);
  DependencyPattern p;
  p.elements_ = std::move(elements);
  p.source_ = source;
  return p;
}

bool DependencyPattern::has_center_token() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const PatternElement &e) {
    return e.kind == ElementKind::kAnchor;
  });
}

std::string DependencyPattern::ToString() const {
  std::string out;
  for (const PatternElement &e : elements_) {
    if (!out.empty()) out += ' ';
    out += e.ToString();
  }
  return out;
}

std::string DependencyPattern::Skeleton() const {
  std::string out;
  for (const PatternElement &e : elements_) {
    if (!out.empty()) out += ' ';
    if (e.kind == ElementKind::kCauseSlot) {
      out += "[[cause]]";
    } else if (e.kind == ElementKind::kEffectSlot) {
      out += "[[effect]]";
    } else {
      out += e.ToString();
    }
  }
  return out;
}

std::string CanonicalPattern(std::string_view text) {
  return DependencyPattern::Parse(text).ToString();
}

}  // namespace causalkg
