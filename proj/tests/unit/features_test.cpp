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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>

#include "hsd/error.hpp"
#include "hsd/text.hpp"
#include "hsd/vocabulary.hpp"
#include "oracles/naive_extractors.hpp"

namespace hsd {
namespace {

using Strings = std::vector<std::string>;

Strings sorted(Strings v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(CharNgramsTest, Examples) {
  EXPECT_EQ(char_ngrams("a cat", 2), (Strings{"a ", " c", "ca", "at"}));
  EXPECT_EQ(char_ngrams("cat", 3), (Strings{"cat"}));
  EXPECT_TRUE(char_ngrams("cat", 4).empty());
  EXPECT_EQ(char_ngrams("\xC3\xA9t\xC3\xA9", 2), (Strings{"\xC3\xA9t", "t\xC3\xA9"}));
  EXPECT_THROW(char_ngrams("cat", 1), std::invalid_argument);
  EXPECT_THROW(char_ngrams("cat", 9), std::invalid_argument);
}

TEST(WordNgramsTest, Examples) {
  EXPECT_EQ(word_ngrams(Strings{"you", "are", "great"}, 2), (Strings{"you are", "are great"}));
  EXPECT_EQ(word_ngrams(Strings{"hi"}, 1), (Strings{"hi"}));
  EXPECT_TRUE(word_ngrams(Strings{"hi"}, 3).empty());
  EXPECT_THROW(word_ngrams(Strings{"hi"}, 0), std::invalid_argument);
  EXPECT_THROW(word_ngrams(Strings{"hi"}, 4), std::invalid_argument);
}

TEST(SkipBigramsTest, Examples) {
  EXPECT_EQ(sorted(skip_bigrams(Strings{"a", "b", "c", "d"}, 1)),
            sorted(Strings{"a b", "b c", "c d", "a c", "b d"}));
  EXPECT_EQ(skip_bigrams(Strings{"a", "b"}, 3), (Strings{"a b"}));
  EXPECT_THROW(skip_bigrams(Strings{"a"}, 0), std::invalid_argument);
  EXPECT_THROW(skip_bigrams(Strings{"a"}, 4), std::invalid_argument);
}

TEST(FeatureSpecTest, ParseAndNames) {
  EXPECT_EQ(FeatureSpec::parse("char:4"), FeatureSpec(FeatureFamily::kCharNgram, 4));
  EXPECT_EQ(FeatureSpec::parse("skip:2").name(), "skip:2");
  EXPECT_EQ(FeatureSpec::parse("word:1").display_name(), "Word unigrams");
  EXPECT_EQ(FeatureSpec::parse("char:4").display_name(), "Character 4-grams");
  EXPECT_EQ(FeatureSpec::parse("skip:3").display_name(), "3-skip Word bigrams");
  EXPECT_THROW(FeatureSpec::parse("char:9"), ConfigError);
  EXPECT_THROW(FeatureSpec::parse("brown:1"), ConfigError);
  EXPECT_THROW(FeatureSpec::parse("word"), ConfigError);
  EXPECT_THROW(FeatureSpec::parse("word:1x"), ConfigError);
  EXPECT_EQ(standard_specs().size(), 13u);
}

// Random preprocessed texts over a small alphabet with multi-byte letters,
// so that n-grams repeat and cross token boundaries.
std::string random_text(std::mt19937_64& rng, int max_len) {
  static const Strings alphabet = {"a", "b", "c", " ", "\xC3\xA9", "\xCF\x80", "@", "#"};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  for (int i = len(rng); i > 0; --i) s += alphabet[pick(rng)];
  return preprocess(s);
}

Strings random_tokens(std::mt19937_64& rng, int max_len) {
  static const Strings words = {"you", "are", "so", "rt", "\xC3\xA9t\xC3\xA9", "x"};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  Strings t;
  for (int i = len(rng); i > 0; --i) t.push_back(words[pick(rng)]);
  return t;
}

TEST(ExtractorPropertyTest, MatchesNaiveOracleAndCountIdentities) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> char_order(2, 8), word_order(1, 3);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::string text = random_text(rng, 30);
    const int n = char_order(rng);
    const auto got = char_ngrams(text, n);
    ASSERT_EQ(got, reference::char_ngrams(text, n)) << text;
    const auto len = static_cast<long>(code_point_offsets(text).size()) - 1;
    ASSERT_EQ(static_cast<long>(got.size()), std::max(0L, len - n + 1));

    const Strings tokens = random_tokens(rng, 30);
    const long t = static_cast<long>(tokens.size());
    const int w = word_order(rng);
    const auto words = word_ngrams(tokens, w);
    ASSERT_EQ(words, reference::word_ngrams(tokens, w));
    ASSERT_EQ(static_cast<long>(words.size()), std::max(0L, t - w + 1));

    const int k = word_order(rng);
    const auto skips = skip_bigrams(tokens, k);
    ASSERT_EQ(sorted(skips), sorted(reference::skip_bigrams(tokens, k)));
    long expected = 0;
    for (int g = 0; g <= k; ++g) expected += std::max(0L, t - 1 - g);
    ASSERT_EQ(static_cast<long>(skips.size()), expected);

    // Gap-0 inclusion: every bigram is also a skip bigram, as multisets.
    auto bigrams = sorted(word_ngrams(tokens, 2));
    auto skip_sorted = sorted(skip_bigrams(tokens, 1));
    ASSERT_TRUE(std::includes(skip_sorted.begin(), skip_sorted.end(), bigrams.begin(), bigrams.end()));
  }
}

LabeledInstance doc(std::int64_t id, const std::string& text) {
  return make_instance(id, text, Label::kOk);
}

TEST(VocabularyTest, MinDf) {
  const std::vector<LabeledInstance> docs = {doc(0, "a b"), doc(1, "b c")};
  const InstanceRefs refs = {&docs[0], &docs[1]};
  const std::vector<FeatureSpec> uni = {FeatureSpec(FeatureFamily::kWordNgram, 1)};
  const Vocabulary v1 = build_vocabulary(refs, uni, 1);
  EXPECT_EQ(v1.dim(), 3);
  EXPECT_EQ(v1.key(0), "word:1:a");
  EXPECT_EQ(v1.key(1), "word:1:b");
  EXPECT_EQ(v1.key(2), "word:1:c");
  EXPECT_TRUE(v1.frozen());
  const Vocabulary v2 = build_vocabulary(refs, uni, 2);
  EXPECT_EQ(v2.dim(), 1);
  EXPECT_EQ(v2.key(0), "word:1:b");
  EXPECT_THROW(build_vocabulary(refs, {}, 1), std::invalid_argument);
  EXPECT_THROW(build_vocabulary({}, uni, 1), std::invalid_argument);
}

TEST(VocabularyTest, DocumentFrequencyCountsDistinctDocuments) {
  const std::vector<LabeledInstance> docs = {doc(0, "a a a"), doc(1, "b")};
  const InstanceRefs refs = {&docs[0], &docs[1]};
  const Vocabulary v = build_vocabulary(refs, {FeatureSpec(FeatureFamily::kWordNgram, 1)}, 2);
  EXPECT_EQ(v.dim(), 0);
}

TEST(VocabularyTest, FrozenRejectsInsertionAndNamespacesDiffer) {
  const std::vector<LabeledInstance> docs = {doc(0, "ab ab")};
  const InstanceRefs refs = {&docs[0]};
  Vocabulary v = build_vocabulary(refs, {FeatureSpec(FeatureFamily::kCharNgram, 2),
                                         FeatureSpec(FeatureFamily::kWordNgram, 1)});
  EXPECT_THROW(v.insert("word:1:new"), std::logic_error);
  ASSERT_TRUE(v.find("char:2:ab").has_value());
  ASSERT_TRUE(v.find("word:1:ab").has_value());
  EXPECT_NE(*v.find("char:2:ab"), *v.find("word:1:ab"));
  EXPECT_EQ(v.insert("char:2:ab"), *v.find("char:2:ab"));  // existing key is a lookup
}

TEST(VectorizeTest, Examples) {
  const std::vector<LabeledInstance> docs = {doc(0, "a b c")};
  const InstanceRefs refs = {&docs[0]};
  const Vocabulary v = build_vocabulary(refs, {FeatureSpec(FeatureFamily::kWordNgram, 1)});

  const SparseVector bb = vectorize(doc(1, "b b"), v);
  ASSERT_EQ(bb.nonZeros(), 1);
  EXPECT_EQ(bb.innerIndexPtr()[0], 1);
  EXPECT_DOUBLE_EQ(bb.valuePtr()[0], 1.0);

  const SparseVector ab = vectorize(doc(2, "a b"), v);
  ASSERT_EQ(ab.nonZeros(), 2);
  EXPECT_NEAR(ab.coeff(0), 0.7071, 1e-4);
  EXPECT_NEAR(ab.coeff(1), 0.7071, 1e-4);

  const SparseVector oov = vectorize(doc(3, "z z"), v);
  EXPECT_EQ(oov.nonZeros(), 0);
  EXPECT_EQ(oov.size(), 3);
}

TEST(VectorizeTest, RoundTripPropertyAndNormalization) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LabeledInstance> docs;
    for (int d = 0; d < 8; ++d) docs.push_back(doc(d, random_text(rng, 30)));
    InstanceRefs refs;
    for (const auto& d : docs) refs.push_back(&d);
    const int min_df = trial % 3 + 1;
    const Vocabulary v = build_vocabulary(
        refs, {FeatureSpec(FeatureFamily::kCharNgram, 2), FeatureSpec(FeatureFamily::kCharNgram, 3),
               FeatureSpec(FeatureFamily::kWordNgram, 1), FeatureSpec(FeatureFamily::kSkipBigram, 2)},
        min_df);
    for (const auto& d : docs) {
      const SparseVector x = vectorize(d, v);
      // Indices strictly increasing, values positive, unit norm or zero.
      for (Eigen::Index i = 1; i < x.nonZeros(); ++i) {
        ASSERT_LT(x.innerIndexPtr()[i - 1], x.innerIndexPtr()[i]);
      }
      const double norm = x.norm();
      ASSERT_TRUE(x.nonZeros() == 0 || std::abs(norm - 1.0) < 1e-9);
      for (const auto& spec : v.specs()) {
        for_each_feature(spec, d.text, d.tokens, [&](std::string_view s) {
          const auto idx = v.find(spec.key_prefix() + std::string(s));
          if (idx) ASSERT_GT(x.coeff(*idx), 0.0);
        });
      }
    }
  }
}

TEST(VocabularyIoTest, SaveLoadPreservesIndicesAndFingerprint) {
  const std::vector<LabeledInstance> docs = {doc(0, "hate \"quoted\" \xC3\xA9t\xC3\xA9"), doc(1, "b c")};
  const InstanceRefs refs = {&docs[0], &docs[1]};
  const Vocabulary v = build_vocabulary(refs, {FeatureSpec(FeatureFamily::kCharNgram, 3),
                                               FeatureSpec(FeatureFamily::kSkipBigram, 1)});
  const auto path = std::filesystem::temp_directory_path() / "hsd_vocab_test.json";
  save_vocabulary(v, path);
  const Vocabulary back = load_vocabulary(path);
  std::filesystem::remove(path);
  ASSERT_EQ(back.dim(), v.dim());
  for (std::int32_t i = 0; i < v.dim(); ++i) EXPECT_EQ(back.key(i), v.key(i));
  EXPECT_EQ(back.specs(), v.specs());
  EXPECT_EQ(back.fingerprint(), v.fingerprint());
  EXPECT_TRUE(back.frozen());
}

}  // namespace
}  // namespace hsd
