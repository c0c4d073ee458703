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

#ifndef HSD_LINEAR_MODEL_HPP_
#define HSD_LINEAR_MODEL_HPP_

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsd/error.hpp"
#include "hsd/label.hpp"
#include "hsd/parallel.hpp"
#include "hsd/random.hpp"
#include "hsd/svm.hpp"

namespace hsd {

template <typename Scalar>
struct TrainingProblem {
  std::span<const Eigen::SparseVector<Scalar>> vectors;
  std::span<const Label> labels;
  SolverOptions options;
};

// One-vs-rest linear model. Column c of `weights` is the binary weight
// vector of classes[c]; its last row is the bias weight.
template <typename Scalar>
struct LinearModelT {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  std::vector<Label> classes;
  Matrix weights;
  std::string vocab_ref;
  SolverOptions options;
  std::uint64_t seed = 0;
  std::vector<bool> converged;  // per class

  Eigen::Index dim() const { return weights.rows() - 1; }
  bool all_converged() const {
    return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
  }
};

using LinearModel = LinearModelT<double>;

// Trains one binary problem per canonical label (that label +1, the rest
// -1). Labels absent from training still get a (never-winning) vector.
// Throws TrainingError when fewer than two distinct labels are present.
template <typename Scalar>
LinearModelT<Scalar> train_ovr(const TrainingProblem<Scalar>& problem, std::uint64_t seed,
                               int jobs = 1) {
  if (problem.vectors.empty() || problem.vectors.size() != problem.labels.size()) {
    throw std::invalid_argument("training problem needs equal, non-zero numbers of vectors and labels");
  }
  std::array<bool, kNumLabels> present{};
  for (Label l : problem.labels) present[index_of(l)] = true;
  if (std::count(present.begin(), present.end(), true) < 2) {
    throw TrainingError("training set contains a single class");
  }

  LinearModelT<Scalar> model;
  model.classes.assign(kAllLabels.begin(), kAllLabels.end());
  model.options = problem.options;
  model.seed = seed;
  model.weights.resize(problem.vectors.front().size() + 1,
                       static_cast<Eigen::Index>(kNumLabels));
  model.converged.assign(kNumLabels, false);

  std::array<bool, kNumLabels> converged{};
  parallel_for(kNumLabels, jobs, [&](std::size_t c) {
    std::vector<int> y(problem.labels.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = index_of(problem.labels[i]) == c ? 1 : -1;
    }
    auto sol = train_binary<Scalar>(problem.vectors, y, problem.options,
                                    derive_seed(seed, {c}));
    model.weights.col(static_cast<Eigen::Index>(c)) = sol.weights;
    converged[c] = sol.converged;
  });
  for (std::size_t c = 0; c < kNumLabels; ++c) model.converged[c] = converged[c];
  return model;
}

// score_c = w_c . x~, in model.classes order.
template <typename Scalar>
DenseVectorT<Scalar> decision_values(const LinearModelT<Scalar>& model,
                                     const Eigen::SparseVector<Scalar>& x) {
  if (x.size() != model.dim()) {
    throw std::invalid_argument("vector dimension " + std::to_string(x.size()) +
                                " does not match model dimension " +
                                std::to_string(model.dim()));
  }
  const auto bias = static_cast<Scalar>(model.options.bias);
  return model.weights.topRows(model.dim()).transpose() * x +
         bias * model.weights.row(model.dim()).transpose();
}

// Index of the largest score; ties go to the lowest index.
template <typename Derived>
Eigen::Index argmax_first(const Eigen::MatrixBase<Derived>& scores) {
  Eigen::Index best = 0;
  for (Eigen::Index c = 1; c < scores.size(); ++c) {
    if (scores(c) > scores(best)) best = c;
  }
  return best;
}

template <typename Scalar>
Label predict(const LinearModelT<Scalar>& model, const Eigen::SparseVector<Scalar>& x) {
  return model.classes[static_cast<std::size_t>(argmax_first(decision_values(model, x)))];
}

void save_model(const LinearModel& model, const std::filesystem::path& path);
// Throws ParseError / ConfigError on malformed or unsupported documents.
LinearModel load_model(const std::filesystem::path& path);

}  // namespace hsd

#endif  // HSD_LINEAR_MODEL_HPP_
