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

#include "hsd/svm.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <limits>
#include <random>

#include "hsd/corpus.hpp"
#include "hsd/evaluation.hpp"
#include "hsd/linear_model.hpp"
#include "oracles/random_problems.hpp"
#include "oracles/reference_svm.hpp"

namespace hsd {
namespace {

using SV = Eigen::SparseVector<double>;

SV sparse(int dim, std::initializer_list<std::pair<int, double>> entries) {
  SV v(dim);
  for (auto [i, x] : entries) v.insertBack(i) = x;
  return v;
}

TEST(TrainBinaryTest, SeparablePairReachesUnitMargins) {
  const std::vector<SV> xs = {sparse(2, {{0, 1.0}}), sparse(2, {{1, 1.0}})};
  const std::vector<int> y = {1, -1};
  SolverOptions opt;
  opt.C = 100;
  opt.tolerance = 1e-8;
  const auto sol = train_binary<double>(xs, y, opt, 1);
  EXPECT_TRUE(sol.converged);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_GE(y[i] * augmented_dot(sol.weights, xs[i], 1.0), 1.0 - 1e-6);
  }
}

TEST(TrainBinaryTest, AllPositiveLabels) {
  std::mt19937_64 rng(3);
  auto p = testing::random_problem(rng, 15, 6, 1.0);
  std::fill(p.y.begin(), p.y.end(), 1);
  const auto sol = train_binary<double>(p.xs, p.y, SolverOptions{}, 9);
  for (const auto& x : p.xs) EXPECT_GT(augmented_dot(sol.weights, x, 1.0), 0.0);
}

TEST(TrainBinaryTest, MatchesReferenceSolverOnRandomProblems) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> rows(2, 50), cols(1, 20);
  for (int trial = 0; trial < 25; ++trial) {
    const double C = trial % 2 ? 1.0 : 0.3;
    auto p = testing::random_problem(rng, rows(rng), cols(rng), 1.0);
    SolverOptions opt;
    opt.C = C;
    opt.tolerance = 1e-7;
    opt.max_iterations = 100000;
    const auto sol = train_binary<double>(p.xs, p.y, opt, rng());
    const auto ref = reference::reference_svm(p.dense_augmented,
                                           Eigen::Map<const Eigen::VectorXi>(p.y.data(), p.y.size()).cast<double>(), C);
    ASSERT_LE(ref.primal - ref.dual, 1e-7 * std::max(1.0, ref.primal)) << "reference not certified";
    const double mine = primal_objective<double>(sol.weights, p.xs, p.y, opt);
    EXPECT_LE(std::abs(mine - ref.primal), 1e-3 * std::abs(ref.primal)) << "trial " << trial;
  }
}

TEST(TrainBinaryTest, DualFeasibleAndMonotone) {
  std::mt19937_64 rng(23);
  auto p = testing::random_problem(rng, 40, 12, 1.0);
  SolverOptions opt;
  opt.C = 0.5;
  opt.tolerance = 1e-6;
  double last = -std::numeric_limits<double>::infinity();
  int epochs = 0;
  train_binary<double>(p.xs, p.y, opt, 4, [&](const EpochState<double>& s) {
    ++epochs;
    EXPECT_GE(s.alpha.minCoeff(), 0.0);
    EXPECT_LE(s.alpha.maxCoeff(), opt.C);
    const double d = dual_objective<double>(s.alpha, s.weights);
    EXPECT_GE(d, last - 1e-12 * std::max(1.0, std::abs(d)));
    last = d;
  });
  EXPECT_GT(epochs, 1);
}

TEST(TrainBinaryTest, IterationCapSetsWarningFlag) {
  std::mt19937_64 rng(29);
  auto p = testing::random_problem(rng, 40, 12, 1.0);
  SolverOptions opt;
  opt.tolerance = 1e-12;
  opt.max_iterations = 2;
  const auto sol = train_binary<double>(p.xs, p.y, opt, 4);
  EXPECT_FALSE(sol.converged);
  EXPECT_EQ(sol.epochs, 2);
}

TEST(TrainBinaryTest, RejectsBadInput) {
  const std::vector<SV> bad = {sparse(2, {{0, std::numeric_limits<double>::quiet_NaN()}})};
  EXPECT_THROW(train_binary<double>(bad, std::vector<int>{1}, SolverOptions{}, 1), NumericError);
  const std::vector<SV> ok = {sparse(2, {{0, 1.0}})};
  SolverOptions zero_c;
  zero_c.C = 0;
  EXPECT_THROW(train_binary<double>(ok, std::vector<int>{1}, zero_c, 1), std::invalid_argument);
  EXPECT_THROW(train_binary<double>(ok, std::vector<int>{2}, SolverOptions{}, 1), std::invalid_argument);
  EXPECT_THROW(train_binary<double>(ok, std::vector<int>{}, SolverOptions{}, 1), std::invalid_argument);
}

TEST(TrainBinaryTest, SinglePrecisionInstantiation) {
  std::vector<Eigen::SparseVector<float>> xs(2, Eigen::SparseVector<float>(2));
  xs[0].insertBack(0) = 1.0f;
  xs[1].insertBack(1) = 1.0f;
  SolverOptions opt;
  opt.C = 10;
  opt.tolerance = 1e-4;
  const auto sol = train_binary<float>(xs, std::vector<int>{1, -1}, opt, 2);
  EXPECT_GT(augmented_dot(sol.weights, xs[0], 1.0f), 0.0f);
  EXPECT_LT(augmented_dot(sol.weights, xs[1], 1.0f), 0.0f);
}

struct VectorizedCorpus {
  std::vector<SV> xs;
  std::vector<Label> labels;
};

VectorizedCorpus vectorized(const Corpus& corpus, const Vocabulary& vocab) {
  VectorizedCorpus v;
  for (const auto& inst : corpus.instances()) {
    v.xs.push_back(vectorize(inst, vocab));
    v.labels.push_back(inst.label);
  }
  return v;
}

TEST(TrainOvrTest, SeparableSyntheticCorpus) {
  const Corpus corpus = synthesize_corpus(8, {10, 10, 10}, 0.0);
  const auto refs = corpus.refs();
  const Vocabulary vocab = build_vocabulary(refs, {FeatureSpec(FeatureFamily::kWordNgram, 1)});
  const auto data = vectorized(corpus, vocab);
  const LinearModel model = train_ovr<double>({data.xs, data.labels, SolverOptions{}}, 5);
  EXPECT_EQ(model.weights.cols(), 3);
  EXPECT_EQ(model.weights.rows(), vocab.dim() + 1);
  EXPECT_EQ(model.classes, (std::vector<Label>(kAllLabels.begin(), kAllLabels.end())));
  for (std::size_t i = 0; i < data.xs.size(); ++i) {
    EXPECT_EQ(predict(model, data.xs[i]), data.labels[i]);
  }

  const LinearModel again = train_ovr<double>({data.xs, data.labels, SolverOptions{}}, 5);
  EXPECT_TRUE((model.weights.array() == again.weights.array()).all());
  const LinearModel threaded = train_ovr<double>({data.xs, data.labels, SolverOptions{}}, 5, 3);
  EXPECT_TRUE((model.weights.array() == threaded.weights.array()).all());
}

TEST(TrainOvrTest, SingleClassIsTrainingError) {
  const std::vector<SV> xs = {sparse(1, {{0, 1.0}}), sparse(1, {{0, 0.5}})};
  const std::vector<Label> labels = {Label::kOk, Label::kOk};
  EXPECT_THROW(train_ovr<double>({xs, labels, SolverOptions{}}, 1), TrainingError);
}

LinearModel basis_model(double bias_weight) {
  LinearModel m;
  m.classes.assign(kAllLabels.begin(), kAllLabels.end());
  m.weights = Eigen::MatrixXd::Zero(4, 3);
  m.weights.topRows(3) = Eigen::MatrixXd::Identity(3, 3);
  m.weights.row(3).setConstant(bias_weight);
  m.converged.assign(3, true);
  return m;
}

TEST(DecisionValuesTest, Examples) {
  LinearModel zero = basis_model(0.0);
  zero.weights.setZero();
  EXPECT_TRUE(decision_values(zero, SV(3)).isZero());

  const LinearModel m = basis_model(0.25);
  const Eigen::VectorXd s = decision_values(m, sparse(3, {{0, 1.0}}));
  EXPECT_DOUBLE_EQ(s(0), 1.25);
  EXPECT_DOUBLE_EQ(s(1), 0.25);
  EXPECT_DOUBLE_EQ(s(2), 0.25);
  EXPECT_THROW(decision_values(m, SV(4)), std::invalid_argument);
  EXPECT_THROW(predict(m, SV(2)), std::invalid_argument);
}

TEST(DecisionValuesTest, LinearInUnnormalizedInput) {
  std::mt19937_64 rng(31);
  LinearModel m = basis_model(0.0);
  m.weights = Eigen::MatrixXd::Random(4, 3);
  m.weights.row(3).setZero();
  const SV x = sparse(3, {{0, 0.3}, {2, -1.2}});
  const SV scaled = 2.5 * x;
  EXPECT_TRUE(decision_values(m, scaled).isApprox(2.5 * decision_values(m, x)));
}

TEST(PredictTest, ArgmaxWithCanonicalTieBreak) {
  EXPECT_EQ(argmax_first(Eigen::Vector3d(0.2, 0.5, -0.1)), 1);
  EXPECT_EQ(argmax_first(Eigen::Vector3d(0.3, 0.3, 0.1)), 0);
  EXPECT_EQ(argmax_first(Eigen::Vector3d(0.1, 0.3, 0.3)), 1);

  std::mt19937_64 rng(37);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    LinearModel m = basis_model(0.0);
    for (Eigen::Index i = 0; i < m.weights.size(); ++i) m.weights.data()[i] = g(rng);
    const SV x = sparse(3, {{0, g(rng)}, {1, g(rng)}, {2, g(rng)}});
    const Label p = predict(m, x);
    EXPECT_EQ(index_of(p), static_cast<std::size_t>(argmax_first(decision_values(m, x))));
    // A shared constant on every class score leaves the argmax alone.
    m.weights.row(3).array() += g(rng);
    EXPECT_EQ(predict(m, x), p);
  }
}

TEST(ModelIoTest, RoundTripIsExact) {
  const Corpus corpus = synthesize_corpus(12, {15, 15, 15}, 0.4);
  const auto refs = corpus.refs();
  const TrainedPipeline p = train_pipeline(refs, {FeatureSpec(FeatureFamily::kCharNgram, 3)},
                                           Hyperparameters{}, 77);
  const auto path = std::filesystem::temp_directory_path() / "hsd_model_test.json";
  save_model(p.model, path);
  const LinearModel back = load_model(path);
  std::filesystem::remove(path);
  EXPECT_TRUE((back.weights.array() == p.model.weights.array()).all());
  EXPECT_EQ(back.vocab_ref, p.model.vocab_ref);
  EXPECT_EQ(back.seed, 77u);
  EXPECT_EQ(back.classes, p.model.classes);
  for (const auto& inst : corpus.instances()) {
    const SV x = vectorize(inst, p.vocab);
    EXPECT_EQ(predict(back, x), predict(p.model, x));
  }
}

}  // namespace
}  // namespace hsd
