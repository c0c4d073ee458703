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

#ifndef HSD_CORPUS_HPP_
#define HSD_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsd/label.hpp"

namespace hsd {

struct LabeledInstance {
  std::int64_t id = 0;
  std::string raw_text;
  std::string text;  // preprocess(raw_text)
  std::vector<std::string> tokens;
  Label label = Label::kOk;
};

// Builds an instance from raw text, running preprocess and tokenize.
LabeledInstance make_instance(std::int64_t id, std::string raw_text, Label label);

using ClassCounts = std::array<std::size_t, kNumLabels>;

// Non-owning selection of instances; the referenced Corpus must outlive it.
using InstanceRefs = std::vector<const LabeledInstance*>;

class Corpus {
 public:
  Corpus() = default;
  // Throws DataError on duplicate ids.
  explicit Corpus(std::vector<LabeledInstance> instances);

  const std::vector<LabeledInstance>& instances() const { return instances_; }
  const LabeledInstance& operator[](std::size_t i) const { return instances_[i]; }
  std::size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }
  const ClassCounts& class_counts() const { return counts_; }

  InstanceRefs refs() const;
  InstanceRefs select(std::span<const std::size_t> positions) const;

 private:
  std::vector<LabeledInstance> instances_;
  ClassCounts counts_{};
};

ClassCounts count_labels(std::span<const LabeledInstance* const> instances);

struct CsvColumns {
  std::string text_column = "tweet";
  std::string label_column = "class";
  // Raw label value -> Label. Every value in the file must be mapped.
  std::map<std::string, Label> label_map;
};

// Covers the numeric "class" column of the public GitHub release, the
// CrowdFlower answer strings and the canonical label names.
std::map<std::string, Label> default_label_map();

// One instance per data row; ids are 0-based data-row ordinals.
// Throws ConfigError (missing column), DataError (unmapped label, names the
// line) or ParseError (malformed CSV, carries the line).
Corpus load_csv(const std::filesystem::path& path, const CsvColumns& columns);

struct UnlabeledText {
  std::int64_t id = 0;
  std::string raw_text;
  std::string text;
  std::vector<std::string> tokens;
  std::optional<Label> gold;
};

// Reads the text column of a prediction input. When columns.label_column
// is present in the header, mapped labels are attached as gold; unmapped
// values are left empty.
std::vector<UnlabeledText> load_texts_csv(const std::filesystem::path& path,
                                          const CsvColumns& columns);

// Fold index per corpus position.
struct FoldAssignment {
  int k = 0;
  std::vector<int> fold_of;

  // Positions in fold f (test side) and outside it (training side), in
  // corpus order.
  std::vector<std::size_t> test_positions(int fold) const;
  std::vector<std::size_t> train_positions(int fold) const;
};

// Per class, shuffles positions with the seed and deals them round-robin
// into k folds. The dealing cursor carries over between classes so fold
// totals stay balanced too. Classes with zero instances are ignored.
// Throws StratificationError when a present class has fewer than k
// instances, std::invalid_argument when k < 2.
FoldAssignment stratified_folds(const Corpus& corpus, int k, std::uint64_t seed);

// The label the majority baseline predicts: most frequent, ties to the
// lower canonical label.
Label majority_label(std::span<const LabeledInstance* const> train);

// Fraction of test instances carrying the majority training label.
// Throws std::invalid_argument on empty train. Empty test yields 0.
double majority_baseline(std::span<const LabeledInstance* const> train,
                         std::span<const LabeledInstance* const> test);

// Synthetic three-class corpus. Each class owns a private word list and all
// classes share one more list; every token comes from the shared list with
// probability vocab_overlap and from the class list otherwise. Raw texts
// carry random capitalization, URLs and emoji that preprocessing removes.
Corpus synthesize_corpus(std::uint64_t seed, const ClassCounts& counts,
                         double vocab_overlap);

// Private-list words of a synthetic class (for tests that inspect models).
std::vector<std::string> synthetic_class_words(Label label);

}  // namespace hsd

#endif  // HSD_CORPUS_HPP_
