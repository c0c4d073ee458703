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

#include "hsd/features.hpp"

#include <charconv>
#include <stdexcept>

#include "hsd/error.hpp"
#include "hsd/text.hpp"

namespace hsd {
namespace {

void check_order(FeatureFamily family, int order) {
  int lo = 1, hi = 3;
  if (family == FeatureFamily::kCharNgram) lo = 2, hi = 8;
  if (order < lo || order > hi) {
    throw std::invalid_argument("feature order " + std::to_string(order) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

std::string_view family_tag(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::kCharNgram:
      return "char";
    case FeatureFamily::kWordNgram:
      return "word";
    case FeatureFamily::kSkipBigram:
      return "skip";
  }
  return "?";
}

template <typename Extract>
std::vector<std::string> collect(Extract&& extract) {
  std::vector<std::string> out;
  extract([&out](std::string_view s) { out.emplace_back(s); });
  return out;
}

}  // namespace

namespace detail {
std::vector<std::size_t> offsets_for(std::string_view text) {
  return code_point_offsets(text);
}
}  // namespace detail

FeatureSpec::FeatureSpec(FeatureFamily family, int order)
    : family_(family), order_(order) {
  check_order(family, order);
}

FeatureSpec FeatureSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("feature spec '" + std::string(text) + "' is not family:order");
  }
  const std::string_view tag = text.substr(0, colon);
  const std::string_view num = text.substr(colon + 1);
  FeatureFamily family;
  if (tag == "char") {
    family = FeatureFamily::kCharNgram;
  } else if (tag == "word") {
    family = FeatureFamily::kWordNgram;
  } else if (tag == "skip") {
    family = FeatureFamily::kSkipBigram;
  } else {
    throw ConfigError("unknown feature family '" + std::string(tag) + "'");
  }
  int order = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), order);
  if (ec != std::errc() || ptr != num.data() + num.size()) {
    throw ConfigError("bad feature order in '" + std::string(text) + "'");
  }
  try {
    return FeatureSpec(family, order);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("feature spec '" + std::string(text) + "': " + e.what());
  }
}

std::string FeatureSpec::key_prefix() const { return name() + ":"; }

std::string FeatureSpec::name() const {
  return std::string(family_tag(family_)) + ":" + std::to_string(order_);
}

std::string FeatureSpec::display_name() const {
  static constexpr const char* kCharNames[] = {"", "", "Character bigrams",
                                               "Character trigrams"};
  static constexpr const char* kWordNames[] = {"", "Word unigrams", "Word bigrams",
                                               "Word trigrams"};
  switch (family_) {
    case FeatureFamily::kCharNgram:
      if (order_ <= 3) return kCharNames[order_];
      return "Character " + std::to_string(order_) + "-grams";
    case FeatureFamily::kWordNgram:
      return kWordNames[order_];
    case FeatureFamily::kSkipBigram:
      return std::to_string(order_) + "-skip Word bigrams";
  }
  return name();
}

std::vector<FeatureSpec> standard_specs() {
  std::vector<FeatureSpec> specs;
  for (int n = 2; n <= 8; ++n) specs.emplace_back(FeatureFamily::kCharNgram, n);
  for (int n = 1; n <= 3; ++n) specs.emplace_back(FeatureFamily::kWordNgram, n);
  for (int k = 1; k <= 3; ++k) specs.emplace_back(FeatureFamily::kSkipBigram, k);
  return specs;
}

std::vector<std::string> char_ngrams(std::string_view text, int n) {
  FeatureSpec spec(FeatureFamily::kCharNgram, n);
  return collect([&](auto&& emit) { for_each_feature(spec, text, {}, emit); });
}

std::vector<std::string> word_ngrams(std::span<const std::string> tokens, int n) {
  FeatureSpec spec(FeatureFamily::kWordNgram, n);
  return collect([&](auto&& emit) { for_each_feature(spec, {}, tokens, emit); });
}

std::vector<std::string> skip_bigrams(std::span<const std::string> tokens, int k) {
  FeatureSpec spec(FeatureFamily::kSkipBigram, k);
  return collect([&](auto&& emit) { for_each_feature(spec, {}, tokens, emit); });
}

}  // namespace hsd
