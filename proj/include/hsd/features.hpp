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

#ifndef HSD_FEATURES_HPP_
#define HSD_FEATURES_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsd {

enum class FeatureFamily { kCharNgram, kWordNgram, kSkipBigram };

// One feature family instance: CHAR_NGRAM order 2..8, WORD_NGRAM 1..3,
// SKIP_BIGRAM 1..3 (maximum number of skipped tokens).
class FeatureSpec {
 public:
  // Throws std::invalid_argument when order is out of range for family.
  FeatureSpec(FeatureFamily family, int order);

  // "char:4", "word:1", "skip:2".
  static FeatureSpec parse(std::string_view text);

  FeatureFamily family() const { return family_; }
  int order() const { return order_; }

  // Namespace prefix of vocabulary keys, e.g. "char:4:".
  std::string key_prefix() const;
  // Round-trips through parse().
  std::string name() const;
  // Row label in result tables, e.g. "Character 4-grams".
  std::string display_name() const;

  friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;

 private:
  FeatureFamily family_;
  int order_;
};

// Char n-grams 2..8, word n-grams 1..3, skip bigrams 1..3.
std::vector<FeatureSpec> standard_specs();

// Contiguous length-n code-point substrings of text, spaces included.
std::vector<std::string> char_ngrams(std::string_view text, int n);

// Contiguous n-token windows joined by single spaces.
std::vector<std::string> word_ngrams(std::span<const std::string> tokens, int n);

// Ordered pairs (tokens[i], tokens[j]) with 1 <= j - i <= k + 1. Gap width
// is not recorded in the surface string.
std::vector<std::string> skip_bigrams(std::span<const std::string> tokens, int k);

// Calls emit(surface) for every feature of spec in the document, in
// extraction order. `text` must be the preprocessed text whose tokenization
// is `tokens`.
template <typename Emit>
void for_each_feature(const FeatureSpec& spec, std::string_view text,
                      std::span<const std::string> tokens, Emit&& emit);

namespace detail {
std::vector<std::size_t> offsets_for(std::string_view text);
}

template <typename Emit>
void for_each_feature(const FeatureSpec& spec, std::string_view text,
                      std::span<const std::string> tokens, Emit&& emit) {
  const std::size_t order = static_cast<std::size_t>(spec.order());
  switch (spec.family()) {
    case FeatureFamily::kCharNgram: {
      const auto offsets = detail::offsets_for(text);
      const std::size_t n_cp = offsets.size() - 1;
      for (std::size_t i = 0; i + order <= n_cp; ++i) {
        emit(text.substr(offsets[i], offsets[i + order] - offsets[i]));
      }
      break;
    }
    case FeatureFamily::kWordNgram: {
      std::string buf;
      for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
        buf = tokens[i];
        for (std::size_t j = 1; j < order; ++j) {
          buf += ' ';
          buf += tokens[i + j];
        }
        emit(std::string_view(buf));
      }
      break;
    }
    case FeatureFamily::kSkipBigram: {
      std::string buf;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        for (std::size_t j = i + 1; j <= i + order + 1 && j < tokens.size(); ++j) {
          buf = tokens[i];
          buf += ' ';
          buf += tokens[j];
          emit(std::string_view(buf));
        }
      }
      break;
    }
  }
}

}  // namespace hsd

#endif  // HSD_FEATURES_HPP_
