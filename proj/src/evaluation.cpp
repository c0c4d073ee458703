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

#include "hsd/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hsd/parallel.hpp"
#include "hsd/random.hpp"

namespace hsd {

ModelSpec ModelSpec::single(const FeatureSpec& spec) {
  return ModelSpec{spec.display_name(), {spec}, false};
}

ModelSpec ModelSpec::combined(std::string name, std::vector<FeatureSpec> specs) {
  return ModelSpec{std::move(name), std::move(specs), false};
}

ModelSpec ModelSpec::majority_baseline() {
  return ModelSpec{"Majority Class Baseline", {}, true};
}

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (const auto& row : counts) t += std::accumulate(row.begin(), row.end(), std::size_t{0});
  return t;
}

std::size_t ConfusionMatrix::correct() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < kNumLabels; ++i) t += counts[i][i];
  return t;
}

double ConfusionMatrix::accuracy() const {
  const std::size_t t = total();
  return t == 0 ? 0.0 : static_cast<double>(correct()) / static_cast<double>(t);
}

ConfusionMatrix confusion_matrix(std::span<const PredictionRecord> records) {
  if (records.empty()) throw std::invalid_argument("confusion matrix needs records");
  ConfusionMatrix cm;
  for (const auto& r : records) {
    if (r.model != records.front().model) {
      throw std::invalid_argument("confusion matrix records span several models");
    }
    ++cm.counts[index_of(r.gold)][index_of(r.predicted)];
  }
  for (std::size_t g = 0; g < kNumLabels; ++g) {
    const std::size_t row = std::accumulate(cm.counts[g].begin(), cm.counts[g].end(), std::size_t{0});
    for (std::size_t p = 0; p < kNumLabels; ++p) {
      cm.row_normalized[g][p] =
          row == 0 ? 0.0 : static_cast<double>(cm.counts[g][p]) / static_cast<double>(row);
    }
  }
  return cm;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

Label TrainedPipeline::predict(std::string_view text,
                               std::span<const std::string> tokens) const {
  return hsd::predict(model, vectorize(vocab, text, tokens));
}

TrainedPipeline train_pipeline(std::span<const LabeledInstance* const> train,
                               const std::vector<FeatureSpec>& specs,
                               const Hyperparameters& hyper, std::uint64_t seed,
                               int class_jobs) {
  Vocabulary vocab = build_vocabulary(train, specs, hyper.min_df);
  std::vector<SparseVector> xs;
  std::vector<Label> labels;
  xs.reserve(train.size());
  labels.reserve(train.size());
  for (const auto* inst : train) {
    xs.push_back(vectorize(*inst, vocab));
    labels.push_back(inst->label);
  }
  LinearModel model =
      train_ovr<double>(TrainingProblem<double>{xs, labels, hyper.solver}, seed, class_jobs);
  model.vocab_ref = vocab.fingerprint();
  return TrainedPipeline{std::move(vocab), std::move(model)};
}

std::uint64_t fold_training_seed(std::uint64_t seed, int fold) {
  return derive_seed(seed, {0x7A1, static_cast<std::uint64_t>(fold)});
}

namespace {

struct FoldResult {
  std::vector<std::pair<std::size_t, Label>> predictions;  // position, label
  std::int32_t dim = 0;
  int unconverged = 0;
};

FoldResult run_fold(const Corpus& corpus, const ModelSpec& model,
                    std::span<const std::size_t> train_pos,
                    std::span<const std::size_t> test_pos, std::uint64_t seed,
                    const Hyperparameters& hyper) {
  FoldResult out;
  const InstanceRefs train = corpus.select(train_pos);
  if (model.majority) {
    const Label l = majority_label(train);
    for (std::size_t p : test_pos) out.predictions.emplace_back(p, l);
    return out;
  }
  const TrainedPipeline pipeline = train_pipeline(train, model.specs, hyper, seed);
  out.dim = pipeline.vocab.dim();
  for (bool c : pipeline.model.converged) out.unconverged += !c;
  for (std::size_t p : test_pos) {
    out.predictions.emplace_back(p, pipeline.predict(corpus[p].text, corpus[p].tokens));
  }
  return out;
}

double fold_accuracy(const Corpus& corpus, const FoldResult& r) {
  if (r.predictions.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& [p, l] : r.predictions) hits += corpus[p].label == l;
  return static_cast<double>(hits) / static_cast<double>(r.predictions.size());
}

std::vector<std::string> spec_names(const ModelSpec& model) {
  if (model.majority) return {"majority"};
  std::vector<std::string> out;
  for (const auto& s : model.specs) out.push_back(s.name());
  return out;
}

}  // namespace

EvaluationReport cross_validate(const Corpus& corpus, const ModelSpec& model,
                                const FoldAssignment& folds, std::uint64_t seed,
                                const Hyperparameters& hyper) {
  if (folds.fold_of.size() != corpus.size()) {
    throw std::invalid_argument("fold assignment does not match corpus size");
  }
  std::vector<FoldResult> results(static_cast<std::size_t>(folds.k));
  parallel_for(results.size(), hyper.jobs, [&](std::size_t f) {
    const int fold = static_cast<int>(f);
    results[f] = run_fold(corpus, model, folds.train_positions(fold),
                          folds.test_positions(fold), fold_training_seed(seed, fold), hyper);
  });

  EvaluationReport report;
  report.name = model.name;
  report.spec_names = spec_names(model);
  report.k = folds.k;
  report.seed = seed;
  report.hyperparameters = hyper;

  std::vector<Label> predicted(corpus.size());
  std::vector<bool> seen(corpus.size(), false);
  for (const auto& r : results) {
    report.fold_accuracies.push_back(fold_accuracy(corpus, r));
    report.fold_dims.push_back(r.dim);
    report.unconverged += r.unconverged;
    for (const auto& [p, l] : r.predictions) {
      if (seen[p]) throw std::logic_error("instance predicted twice");
      seen[p] = true;
      predicted[p] = l;
    }
  }
  report.records.reserve(corpus.size());
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    if (!seen[p]) throw std::logic_error("instance never predicted");
    report.records.push_back({corpus[p].id, corpus[p].label, predicted[p], model.name});
  }
  report.mean_accuracy = mean(report.fold_accuracies);
  report.std_accuracy = sample_stddev(report.fold_accuracies);
  if (!report.records.empty()) report.confusion = confusion_matrix(report.records);
  return report;
}

EvaluationReport cross_validate(const Corpus& corpus, const std::vector<FeatureSpec>& specs,
                                int k, std::uint64_t seed, const Hyperparameters& hyper) {
  const FoldAssignment folds = stratified_folds(corpus, k, seed);
  const ModelSpec model = specs.size() == 1
                              ? ModelSpec::single(specs.front())
                              : ModelSpec::combined("All features combined", specs);
  return cross_validate(corpus, model, folds, seed, hyper);
}

OracleResult oracle(std::span<const std::vector<PredictionRecord>> record_sets) {
  if (record_sets.empty()) throw std::invalid_argument("oracle needs at least one model");
  std::vector<std::vector<PredictionRecord>> sorted(record_sets.begin(), record_sets.end());
  for (auto& set : sorted) {
    std::sort(set.begin(), set.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
  }
  const auto& first = sorted.front();
  OracleResult out;
  out.ids.reserve(first.size());
  for (const auto& r : first) out.ids.push_back(r.id);
  for (const auto& set : sorted) {
    if (set.size() != first.size()) throw std::invalid_argument("oracle members cover different instances");
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i].id != first[i].id || set[i].gold != first[i].gold) {
        throw std::invalid_argument("oracle members cover different instances");
      }
    }
  }
  out.coverage.assign(first.size(), 0);
  std::size_t covered = 0;
  for (const auto& set : sorted) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      const bool ok = set[i].predicted == set[i].gold;
      hits += ok;
      out.coverage[i] += ok;
    }
    out.member_accuracies.push_back(
        set.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(set.size()));
  }
  for (int c : out.coverage) covered += c > 0;
  out.accuracy =
      first.empty() ? 0.0 : static_cast<double>(covered) / static_cast<double>(first.size());
  return out;
}

double oracle_accuracy(std::span<const std::vector<PredictionRecord>> record_sets) {
  return oracle(record_sets).accuracy;
}

std::vector<std::size_t> default_curve_sizes(const FoldAssignment& folds) {
  std::size_t pool = folds.fold_of.size();
  for (int f = 0; f < folds.k; ++f) pool = std::min(pool, folds.train_positions(f).size());
  std::vector<std::size_t> sizes;
  for (int step = 1; step <= 10; ++step) {
    const auto s = static_cast<std::size_t>(
        std::llround(static_cast<double>(pool) * step / 10.0));
    if (s > 0 && (sizes.empty() || s > sizes.back())) sizes.push_back(s);
  }
  return sizes;
}

std::vector<std::size_t> stratified_subsample(const Corpus& corpus,
                                              std::span<const std::size_t> pool,
                                              std::size_t size, std::uint64_t seed) {
  if (size > pool.size()) {
    throw std::invalid_argument("subsample size " + std::to_string(size) +
                                " exceeds pool of " + std::to_string(pool.size()));
  }
  std::array<std::vector<std::size_t>, kNumLabels> by_class;
  for (std::size_t p : pool) by_class[index_of(corpus[p].label)].push_back(p);

  std::array<std::size_t, kNumLabels> quota{};
  std::array<double, kNumLabels> remainder{};
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const double exact = static_cast<double>(size) * static_cast<double>(by_class[c].size()) /
                         static_cast<double>(pool.size());
    quota[c] = static_cast<std::size_t>(std::floor(exact));
    remainder[c] = exact - static_cast<double>(quota[c]);
    assigned += quota[c];
  }
  while (assigned < size) {
    std::size_t best = kNumLabels;
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      if (quota[c] >= by_class[c].size()) continue;
      if (best == kNumLabels || remainder[c] > remainder[best]) best = c;
    }
    ++quota[best];
    remainder[best] = -1.0;
    ++assigned;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> out;
  out.reserve(size);
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    auto& members = by_class[c];
    std::shuffle(members.begin(), members.end(), rng);
    out.insert(out.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(quota[c]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurvePoint> learning_curve(const Corpus& corpus, const ModelSpec& model,
                                       std::span<const std::size_t> sizes,
                                       const FoldAssignment& folds, std::uint64_t seed,
                                       const Hyperparameters& hyper) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw std::invalid_argument("learning-curve sizes must be ascending");
  }
  std::size_t pool = corpus.size();
  for (int f = 0; f < folds.k; ++f) pool = std::min(pool, folds.train_positions(f).size());
  if (!sizes.empty() && sizes.back() > pool) {
    throw std::invalid_argument("learning-curve size " + std::to_string(sizes.back()) +
                                " exceeds the training pool of " + std::to_string(pool));
  }

  std::vector<CurvePoint> points;
  for (std::size_t size : sizes) {
    std::vector<double> acc(static_cast<std::size_t>(folds.k));
    parallel_for(acc.size(), hyper.jobs, [&](std::size_t f) {
      const int fold = static_cast<int>(f);
      const auto train_pool = folds.train_positions(fold);
      const auto train = stratified_subsample(
          corpus, train_pool, size, derive_seed(seed, {0xC0, f, size}));
      acc[f] = fold_accuracy(corpus, run_fold(corpus, model, train, folds.test_positions(fold),
                                              fold_training_seed(seed, fold), hyper));
    });
    points.push_back({size, mean(acc), sample_stddev(acc), acc});
  }
  return points;
}

std::vector<std::pair<std::string, double>> top_features(const LinearModel& model,
                                                         const Vocabulary& vocab,
                                                         Label label, std::size_t m) {
  if (m == 0) throw std::invalid_argument("top_features needs m >= 1");
  if (vocab.dim() != model.dim()) {
    throw std::invalid_argument("vocabulary dimension does not match model");
  }
  const auto it = std::find(model.classes.begin(), model.classes.end(), label);
  if (it == model.classes.end()) throw std::invalid_argument("label not in model");
  const auto col = model.weights.col(it - model.classes.begin());

  std::vector<std::pair<std::string, double>> out;
  for (Eigen::Index i = 0; i < model.dim(); ++i) {
    if (col(i) > 0) out.emplace_back(vocab.key(static_cast<std::int32_t>(i)), col(i));
  }
  const std::size_t keep = std::min(m, out.size());
  std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(keep), out.end(),
                    [](const auto& a, const auto& b) {
                      return a.second != b.second ? a.second > b.second : a.first < b.first;
                    });
  out.resize(keep);
  return out;
}

}  // namespace hsd
