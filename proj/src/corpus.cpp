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

#include "hsd/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "hsd/csv.hpp"
#include "hsd/error.hpp"
#include "hsd/random.hpp"
#include "hsd/text.hpp"

namespace hsd {

LabeledInstance make_instance(std::int64_t id, std::string raw_text, Label label) {
  LabeledInstance inst;
  inst.id = id;
  inst.text = preprocess(raw_text);
  inst.tokens = tokenize(inst.text);
  inst.raw_text = std::move(raw_text);
  inst.label = label;
  return inst;
}

Corpus::Corpus(std::vector<LabeledInstance> instances)
    : instances_(std::move(instances)) {
  std::unordered_set<std::int64_t> seen;
  seen.reserve(instances_.size());
  for (const auto& inst : instances_) {
    if (!seen.insert(inst.id).second) {
      throw DataError("duplicate instance id " + std::to_string(inst.id));
    }
    ++counts_[index_of(inst.label)];
  }
}

InstanceRefs Corpus::refs() const {
  InstanceRefs out;
  out.reserve(instances_.size());
  for (const auto& inst : instances_) out.push_back(&inst);
  return out;
}

InstanceRefs Corpus::select(std::span<const std::size_t> positions) const {
  InstanceRefs out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(&instances_.at(p));
  return out;
}

ClassCounts count_labels(std::span<const LabeledInstance* const> instances) {
  ClassCounts counts{};
  for (const auto* inst : instances) ++counts[index_of(inst->label)];
  return counts;
}

std::map<std::string, Label> default_label_map() {
  return {
      {"0", Label::kHate},
      {"1", Label::kOffensive},
      {"2", Label::kOk},
      {"hate_speech", Label::kHate},
      {"offensive_language", Label::kOffensive},
      {"neither", Label::kOk},
      {"The tweet contains hate speech", Label::kHate},
      {"The tweet uses offensive language but not hate speech", Label::kOffensive},
      {"The tweet is not offensive", Label::kOk},
      {"HATE", Label::kHate},
      {"OFFENSIVE", Label::kOffensive},
      {"OK", Label::kOk},
  };
}

namespace {

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw ConfigError("column '" + name + "' not found in header");
  }
  return static_cast<std::size_t>(it - header.begin());
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

Corpus load_csv(const std::filesystem::path& path, const CsvColumns& columns) {
  std::ifstream in = open_input(path);
  CsvReader reader(in);
  auto header = reader.next();
  if (!header) throw ConfigError("'" + path.string() + "' has no header row");
  const std::size_t text_col = find_column(*header, columns.text_column);
  const std::size_t label_col = find_column(*header, columns.label_column);

  std::vector<LabeledInstance> instances;
  std::int64_t next_id = 0;
  while (auto row = reader.next()) {
    if (row->size() != header->size()) {
      throw ParseError("expected " + std::to_string(header->size()) +
                           " fields, found " + std::to_string(row->size()),
                       reader.record_line());
    }
    const std::string& raw_label = (*row)[label_col];
    auto it = columns.label_map.find(raw_label);
    if (it == columns.label_map.end()) {
      throw DataError("line " + std::to_string(reader.record_line()) +
                      " (row " + std::to_string(next_id) + "): label '" +
                      raw_label + "' is not in the label map");
    }
    instances.push_back(
        make_instance(next_id++, std::move((*row)[text_col]), it->second));
  }
  return Corpus(std::move(instances));
}

std::vector<UnlabeledText> load_texts_csv(const std::filesystem::path& path,
                                          const CsvColumns& columns) {
  std::ifstream in = open_input(path);
  CsvReader reader(in);
  auto header = reader.next();
  if (!header) throw ConfigError("'" + path.string() + "' has no header row");
  const std::size_t text_col = find_column(*header, columns.text_column);
  const auto label_it = std::find(header->begin(), header->end(), columns.label_column);
  const bool has_labels = label_it != header->end();
  const auto label_col = static_cast<std::size_t>(label_it - header->begin());
  std::vector<UnlabeledText> out;
  std::int64_t next_id = 0;
  while (auto row = reader.next()) {
    if (row->size() != header->size()) {
      throw ParseError("expected " + std::to_string(header->size()) +
                           " fields, found " + std::to_string(row->size()),
                       reader.record_line());
    }
    UnlabeledText t;
    t.id = next_id++;
    t.raw_text = std::move((*row)[text_col]);
    t.text = preprocess(t.raw_text);
    t.tokens = tokenize(t.text);
    if (has_labels) {
      auto it = columns.label_map.find((*row)[label_col]);
      if (it != columns.label_map.end()) t.gold = it->second;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::test_positions(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::train_positions(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] != fold) out.push_back(i);
  }
  return out;
}

FoldAssignment stratified_folds(const Corpus& corpus, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("fold count must be at least 2");
  const auto& counts = corpus.class_counts();
  for (Label l : kAllLabels) {
    std::size_t n = counts[index_of(l)];
    if (n > 0 && n < static_cast<std::size_t>(k)) {
      throw StratificationError("class " + std::string(label_name(l)) + " has " +
                                std::to_string(n) + " instances, fewer than k=" +
                                std::to_string(k));
    }
  }

  FoldAssignment folds;
  folds.k = k;
  folds.fold_of.assign(corpus.size(), -1);
  std::mt19937_64 rng(derive_seed(seed, {0xF01D}));
  std::size_t cursor = 0;
  for (Label l : kAllLabels) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (corpus[i].label == l) members.push_back(i);
    }
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t p : members) {
      folds.fold_of[p] = static_cast<int>(cursor % static_cast<std::size_t>(k));
      ++cursor;
    }
  }
  return folds;
}

Label majority_label(std::span<const LabeledInstance* const> train) {
  if (train.empty()) throw std::invalid_argument("majority baseline needs training data");
  ClassCounts counts = count_labels(train);
  Label best = Label::kHate;
  for (Label l : kAllLabels) {
    if (counts[index_of(l)] > counts[index_of(best)]) best = l;
  }
  return best;
}

double majority_baseline(std::span<const LabeledInstance* const> train,
                         std::span<const LabeledInstance* const> test) {
  Label predicted = majority_label(train);
  if (test.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto* inst : test) hits += inst->label == predicted;
  return static_cast<double>(hits) / static_cast<double>(test.size());
}

namespace {

constexpr std::array<std::string_view, 16> kSyllables = {
    "ba", "ke", "lo", "mi", "nu", "ra", "si", "to",
    "ve", "zo", "da", "fi", "go", "pu", "te", "xa"};
constexpr std::size_t kWordsPerList = 60;

// Distinct ids give distinct words: fixed-width base-16 syllable encoding.
std::string synthetic_word(std::size_t id) {
  std::string w;
  for (int digit = 2; digit >= 0; --digit) {
    w += kSyllables[(id >> (4 * digit)) & 0xF];
  }
  return w;
}

// List 0..2 are the class lists, list 3 is shared.
std::string list_word(std::size_t list, std::size_t i) {
  return synthetic_word(list * kWordsPerList + i + 1);
}

}  // namespace

std::vector<std::string> synthetic_class_words(Label label) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kWordsPerList; ++i) {
    out.push_back(list_word(index_of(label), i));
  }
  return out;
}

Corpus synthesize_corpus(std::uint64_t seed, const ClassCounts& counts,
                         double vocab_overlap) {
  if (!(vocab_overlap >= 0.0 && vocab_overlap <= 1.0)) {
    throw std::invalid_argument("vocab_overlap must lie in [0, 1]");
  }
  std::mt19937_64 rng(derive_seed(seed, {0x5E7}));
  std::uniform_int_distribution<std::size_t> length_dist(6, 14);
  std::uniform_int_distribution<std::size_t> word_dist(0, kWordsPerList - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::pair<Label, std::string>> docs;
  for (Label l : kAllLabels) {
    for (std::size_t n = 0; n < counts[index_of(l)]; ++n) {
      std::string raw;
      const std::size_t len = length_dist(rng);
      for (std::size_t t = 0; t < len; ++t) {
        const bool shared = unit(rng) < vocab_overlap;
        std::string w = list_word(shared ? 3 : index_of(l), word_dist(rng));
        if (unit(rng) < 0.1) {
          std::transform(w.begin(), w.end(), w.begin(),
                         [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        }
        if (!raw.empty()) raw += unit(rng) < 0.1 ? "  " : " ";
        raw += w;
      }
      if (unit(rng) < 0.15) raw += " http://t.co/" + synthetic_word(word_dist(rng));
      if (unit(rng) < 0.15) raw += " \xF0\x9F\x98\x82";  // U+1F602
      docs.emplace_back(l, std::move(raw));
    }
  }
  std::shuffle(docs.begin(), docs.end(), rng);

  std::vector<LabeledInstance> instances;
  instances.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    instances.push_back(make_instance(static_cast<std::int64_t>(i),
                                      std::move(docs[i].second), docs[i].first));
  }
  return Corpus(std::move(instances));
}

}  // namespace hsd
