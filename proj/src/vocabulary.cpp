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

#include "hsd/vocabulary.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hsd/error.hpp"
#include "json.hpp"

namespace hsd {

Vocabulary::Vocabulary(std::vector<FeatureSpec> specs, int min_df)
    : specs_(std::move(specs)), min_df_(min_df) {}

Vocabulary::Vocabulary(const Vocabulary& other)
    : specs_(other.specs_), min_df_(other.min_df_), frozen_(other.frozen_),
      keys_(other.keys_) {
  index_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    index_.emplace(keys_[i], static_cast<std::int32_t>(i));
  }
}

Vocabulary& Vocabulary::operator=(const Vocabulary& other) {
  if (this != &other) *this = Vocabulary(other);
  return *this;
}

std::int32_t Vocabulary::insert(std::string_view key) {
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  if (frozen_) throw std::logic_error("insert into a frozen vocabulary");
  const auto idx = static_cast<std::int32_t>(keys_.size());
  keys_.emplace_back(key);
  index_.emplace(keys_.back(), idx);
  return idx;
}

std::optional<std::int32_t> Vocabulary::find(std::string_view key) const {
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  return std::nullopt;
}

std::string Vocabulary::fingerprint() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001B3ULL;
    }
    h ^= 0xFF;
    h *= 0x100000001B3ULL;
  };
  for (const auto& spec : specs_) feed(spec.name());
  feed(std::to_string(min_df_));
  for (const auto& k : keys_) feed(k);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf + ":" + std::to_string(keys_.size());
}

Vocabulary build_vocabulary(std::span<const LabeledInstance* const> train,
                            const std::vector<FeatureSpec>& specs, int min_df) {
  if (specs.empty()) throw std::invalid_argument("vocabulary needs at least one feature spec");
  if (train.empty()) throw std::invalid_argument("vocabulary needs training documents");

  Vocabulary staging(specs, min_df);
  std::vector<std::int32_t> df;
  std::vector<std::int32_t> last_doc;
  std::string key;
  for (std::size_t d = 0; d < train.size(); ++d) {
    const LabeledInstance& doc = *train[d];
    for (const FeatureSpec& spec : specs) {
      const std::string prefix = spec.key_prefix();
      for_each_feature(spec, doc.text, doc.tokens, [&](std::string_view surface) {
        key.assign(prefix);
        key.append(surface);
        const std::int32_t idx = staging.insert(key);
        if (static_cast<std::size_t>(idx) == df.size()) {
          df.push_back(0);
          last_doc.push_back(-1);
        }
        if (last_doc[idx] != static_cast<std::int32_t>(d)) {
          last_doc[idx] = static_cast<std::int32_t>(d);
          ++df[idx];
        }
      });
    }
  }
  if (min_df <= 1) {
    staging.freeze();
    return staging;
  }
  Vocabulary vocab(specs, min_df);
  for (std::int32_t i = 0; i < staging.dim(); ++i) {
    if (df[i] >= min_df) vocab.insert(staging.key(i));
  }
  vocab.freeze();
  return vocab;
}

namespace {
constexpr int kVocabularyFormat = 1;
}

void save_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["format_version"] = kVocabularyFormat;
  doc["min_df"] = vocab.min_df();
  auto& specs = doc["specs"] = nlohmann::json::array();
  for (const auto& s : vocab.specs()) specs.push_back(s.name());
  auto& entries = doc["entries"] = nlohmann::json::array();
  for (std::int32_t i = 0; i < vocab.dim(); ++i) entries.push_back(vocab.key(i));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << doc.dump() << '\n';
  if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

Vocabulary load_vocabulary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.at("format_version").get<int>() != kVocabularyFormat) {
      throw ConfigError("unsupported vocabulary format_version in '" + path.string() + "'");
    }
    std::vector<FeatureSpec> specs;
    for (const auto& s : doc.at("specs")) specs.push_back(FeatureSpec::parse(s.get<std::string>()));
    Vocabulary vocab(std::move(specs), doc.at("min_df").get<int>());
    const auto& entries = doc.at("entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (vocab.insert(entries[i].get<std::string>()) != static_cast<std::int32_t>(i)) {
        throw ParseError("duplicate vocabulary entry at index " + std::to_string(i), 1);
      }
    }
    vocab.freeze();
    return vocab;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("vocabulary '" + path.string() + "': " + e.what(), 1);
  }
}

}  // namespace hsd
