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

#ifndef HSD_VOCABULARY_HPP_
#define HSD_VOCABULARY_HPP_

#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hsd/corpus.hpp"
#include "hsd/features.hpp"

namespace hsd {

template <typename Scalar>
using SparseVectorT = Eigen::SparseVector<Scalar>;
using SparseVector = SparseVectorT<double>;

// Bijection between namespaced feature keys ("char:4:abcd") and indices in
// [0, dim). Insertion is allowed until freeze().
class Vocabulary {
 public:
  Vocabulary(std::vector<FeatureSpec> specs, int min_df);

  Vocabulary(const Vocabulary& other);
  Vocabulary& operator=(const Vocabulary& other);
  Vocabulary(Vocabulary&&) noexcept = default;
  Vocabulary& operator=(Vocabulary&&) noexcept = default;

  // Returns the index of key, inserting it when new. Throws std::logic_error
  // on a frozen vocabulary.
  std::int32_t insert(std::string_view key);
  std::optional<std::int32_t> find(std::string_view key) const;

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::int32_t dim() const { return static_cast<std::int32_t>(keys_.size()); }
  const std::string& key(std::int32_t index) const { return keys_.at(index); }
  const std::vector<FeatureSpec>& specs() const { return specs_; }
  int min_df() const { return min_df_; }

  // Content hash over specs, min_df and keys in index order. Binds a model to
  // the vocabulary its weights were trained against.
  std::string fingerprint() const;

 private:
  std::vector<FeatureSpec> specs_;
  int min_df_;
  bool frozen_ = false;
  std::deque<std::string> keys_;  // stable addresses for the index views
  std::unordered_map<std::string_view, std::int32_t> index_;
};

// Features from every spec that occur in at least min_df distinct training
// documents, indexed in first-occurrence order. Returned frozen.
// Throws std::invalid_argument on an empty spec list or empty train set.
Vocabulary build_vocabulary(std::span<const LabeledInstance* const> train,
                            const std::vector<FeatureSpec>& specs, int min_df = 1);

// Calls emit(index) for each in-vocabulary feature occurrence.
template <typename Emit>
void for_each_feature_index(const Vocabulary& vocab, std::string_view text,
                            std::span<const std::string> tokens, Emit&& emit) {
  std::string key;
  for (const FeatureSpec& spec : vocab.specs()) {
    const std::string prefix = spec.key_prefix();
    for_each_feature(spec, text, tokens, [&](std::string_view surface) {
      key.assign(prefix);
      key.append(surface);
      if (auto idx = vocab.find(key)) emit(*idx);
    });
  }
}

// Raw feature counts scaled to unit Euclidean norm. Out-of-vocabulary
// features are ignored; a document with none yields the zero vector.
template <typename Scalar = double>
SparseVectorT<Scalar> vectorize(const Vocabulary& vocab, std::string_view text,
                                std::span<const std::string> tokens) {
  std::vector<std::int32_t> hits;
  for_each_feature_index(vocab, text, tokens,
                         [&hits](std::int32_t i) { hits.push_back(i); });
  std::sort(hits.begin(), hits.end());

  SparseVectorT<Scalar> v(vocab.dim());
  v.reserve(static_cast<Eigen::Index>(hits.size()));
  Scalar sq = 0;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    const auto count = static_cast<Scalar>(j - i);
    v.insertBack(hits[i]) = count;
    sq += count * count;
    i = j;
  }
  if (sq > 0) v /= std::sqrt(sq);
  return v;
}

template <typename Scalar = double>
SparseVectorT<Scalar> vectorize(const LabeledInstance& instance, const Vocabulary& vocab) {
  return vectorize<Scalar>(vocab, instance.text, instance.tokens);
}

void save_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path);
// Throws ParseError / ConfigError on malformed or unsupported documents.
Vocabulary load_vocabulary(const std::filesystem::path& path);

}  // namespace hsd

#endif  // HSD_VOCABULARY_HPP_
