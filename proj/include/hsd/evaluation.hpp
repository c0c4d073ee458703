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

#ifndef HSD_EVALUATION_HPP_
#define HSD_EVALUATION_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsd/corpus.hpp"
#include "hsd/features.hpp"
#include "hsd/label.hpp"
#include "hsd/linear_model.hpp"
#include "hsd/vocabulary.hpp"

namespace hsd {

struct Hyperparameters {
  SolverOptions solver;
  int min_df = 1;
  int jobs = 1;  // concurrent folds
};

// A row of a results table: one feature space, or the majority baseline.
struct ModelSpec {
  std::string name;
  std::vector<FeatureSpec> specs;  // empty for the majority baseline
  bool majority = false;

  static ModelSpec single(const FeatureSpec& spec);
  static ModelSpec combined(std::string name, std::vector<FeatureSpec> specs);
  static ModelSpec majority_baseline();
};

struct PredictionRecord {
  std::int64_t id = 0;
  Label gold = Label::kOk;
  Label predicted = Label::kOk;
  std::string model;
};

using CountMatrix = std::array<std::array<std::size_t, kNumLabels>, kNumLabels>;
using RateMatrix = std::array<std::array<double, kNumLabels>, kNumLabels>;

// Rows are gold labels, columns predictions, both in canonical order.
struct ConfusionMatrix {
  CountMatrix counts{};
  RateMatrix row_normalized{};  // all-zero row for an absent gold class

  std::size_t total() const;
  std::size_t correct() const;
  double accuracy() const;
};

// Throws std::invalid_argument on empty input or records of several models.
ConfusionMatrix confusion_matrix(std::span<const PredictionRecord> records);

struct EvaluationReport {
  std::string name;
  std::vector<std::string> spec_names;
  int k = 0;
  std::uint64_t seed = 0;
  Hyperparameters hyperparameters;
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0;
  double std_accuracy = 0;  // sample standard deviation over folds
  ConfusionMatrix confusion;
  std::vector<PredictionRecord> records;  // corpus order
  std::vector<std::int32_t> fold_dims;    // vocabulary size per fold
  int unconverged = 0;                    // binary problems that hit max_iterations
};

double mean(std::span<const double> xs);
// n - 1 denominator; 0 for fewer than two values.
double sample_stddev(std::span<const double> xs);

// Vocabulary plus the model trained over it.
struct TrainedPipeline {
  Vocabulary vocab;
  LinearModel model;

  Label predict(std::string_view text, std::span<const std::string> tokens) const;
};

// Builds the vocabulary on `train` only, vectorizes and trains one-vs-rest.
TrainedPipeline train_pipeline(std::span<const LabeledInstance* const> train,
                               const std::vector<FeatureSpec>& specs,
                               const Hyperparameters& hyper, std::uint64_t seed,
                               int class_jobs = 1);

// Seed used to train fold `fold` of an experiment with base seed `seed`.
std::uint64_t fold_training_seed(std::uint64_t seed, int fold);

// Each fold: vocabulary from the other k-1 folds, train, predict the held
// out fold. Every instance is predicted exactly once.
EvaluationReport cross_validate(const Corpus& corpus, const ModelSpec& model,
                                const FoldAssignment& folds, std::uint64_t seed,
                                const Hyperparameters& hyper);

EvaluationReport cross_validate(const Corpus& corpus, const std::vector<FeatureSpec>& specs,
                                int k, std::uint64_t seed, const Hyperparameters& hyper);

struct OracleResult {
  double accuracy = 0;
  std::vector<std::int64_t> ids;          // ascending
  std::vector<int> coverage;              // members correct, per id
  std::vector<double> member_accuracies;  // per record set
};

// An instance counts as correct when at least one member predicted it.
// Throws std::invalid_argument when the sets cover different ids or when
// no set is given.
OracleResult oracle(std::span<const std::vector<PredictionRecord>> record_sets);
double oracle_accuracy(std::span<const std::vector<PredictionRecord>> record_sets);

struct CurvePoint {
  std::size_t size = 0;
  double mean_accuracy = 0;
  double std_accuracy = 0;
  std::vector<double> fold_accuracies;
};

// Ten evenly spaced sizes from 10% to 100% of the smallest training pool.
std::vector<std::size_t> default_curve_sizes(const FoldAssignment& folds);

// Per fold, trains on a stratified random subsample of `size` training
// instances (kept in corpus order) and tests on the whole held-out fold.
// A size equal to the training pool reproduces cross_validate.
// Throws std::invalid_argument when sizes are not ascending or exceed the
// smallest training pool.
std::vector<CurvePoint> learning_curve(const Corpus& corpus, const ModelSpec& model,
                                       std::span<const std::size_t> sizes,
                                       const FoldAssignment& folds, std::uint64_t seed,
                                       const Hyperparameters& hyper);

// Stratified sample without replacement; per-class quotas by largest
// remainder. Returned positions are ascending.
std::vector<std::size_t> stratified_subsample(const Corpus& corpus,
                                              std::span<const std::size_t> pool,
                                              std::size_t size, std::uint64_t seed);

// The m largest positive weights of `label`'s one-vs-rest vector, descending,
// ties by key. The bias weight is excluded. Shorter when fewer qualify.
std::vector<std::pair<std::string, double>> top_features(const LinearModel& model,
                                                         const Vocabulary& vocab,
                                                         Label label, std::size_t m);

}  // namespace hsd

#endif  // HSD_EVALUATION_HPP_
