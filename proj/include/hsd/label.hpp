// Copyright 2026 The hsd Authors.
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

#ifndef HSD_LABEL_HPP_
#define HSD_LABEL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace hsd {

// Canonical order is part of the serialized format and the tie-break rule.
enum class Label : int { kHate = 0, kOffensive = 1, kOk = 2 };

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::kHate, Label::kOffensive, Label::kOk};

constexpr std::size_t index_of(Label label) {
  return static_cast<std::size_t>(label);
}

constexpr std::string_view label_name(Label label) {
  switch (label) {
    case Label::kHate:
      return "HATE";
    case Label::kOffensive:
      return "OFFENSIVE";
    case Label::kOk:
      return "OK";
  }
  return "?";
}

// Accepts the canonical names only ("HATE", "OFFENSIVE", "OK").
constexpr std::optional<Label> parse_label(std::string_view name) {
  for (Label l : kAllLabels) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

}  // namespace hsd

#endif  // HSD_LABEL_HPP_
