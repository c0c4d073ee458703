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

#ifndef HSD_SVM_HPP_
#define HSD_SVM_HPP_

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hsd/error.hpp"

namespace hsd {

template <typename Scalar>
using DenseVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// L2-regularized L1-loss (hinge) SVM:
//   min_w  1/2 |w|^2 + C * sum_i max(0, 1 - y_i w.x~_i)
// where x~ is x with the constant `bias` appended.
struct SolverOptions {
  double C = 1.0;
  double bias = 1.0;
  double tolerance = 0.1;  // on the largest projected-gradient violation
  int max_iterations = 1000;  // epochs
};

template <typename Scalar>
struct BinarySolution {
  DenseVectorT<Scalar> weights;  // length dim + 1, bias weight last
  DenseVectorT<Scalar> alpha;    // dual variables, each in [0, C]
  int epochs = 0;
  bool converged = false;  // false when max_iterations ran out
  Scalar max_violation = 0;
};

template <typename Scalar>
struct EpochState {
  int epoch;
  const DenseVectorT<Scalar>& alpha;
  const DenseVectorT<Scalar>& weights;
  Scalar max_violation;
};

struct NoEpochObserver {
  template <typename State>
  void operator()(const State&) const {}
};

// w.x~ for the bias-augmented x.
template <typename Scalar>
Scalar augmented_dot(const DenseVectorT<Scalar>& w, const Eigen::SparseVector<Scalar>& x,
                     Scalar bias) {
  Scalar s = w(w.size() - 1) * bias;
  for (typename Eigen::SparseVector<Scalar>::InnerIterator it(x); it; ++it) {
    s += w(it.index()) * it.value();
  }
  return s;
}

template <typename Scalar>
Scalar primal_objective(const DenseVectorT<Scalar>& w,
                        std::span<const Eigen::SparseVector<Scalar>> xs,
                        std::span<const int> y, const SolverOptions& opt) {
  Scalar loss = 0;
  const auto bias = static_cast<Scalar>(opt.bias);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    loss += std::max(Scalar(0), Scalar(1) - y[i] * augmented_dot(w, xs[i], bias));
  }
  return Scalar(0.5) * w.squaredNorm() + static_cast<Scalar>(opt.C) * loss;
}

// Dual objective sum(alpha) - 1/2 |w(alpha)|^2, with w = sum alpha_i y_i x~_i.
template <typename Scalar>
Scalar dual_objective(const DenseVectorT<Scalar>& alpha, const DenseVectorT<Scalar>& w) {
  return alpha.sum() - Scalar(0.5) * w.squaredNorm();
}

// Dual coordinate descent for the problem above: one dual variable per
// instance, visited in a fresh seeded permutation every epoch. Stops once
// the largest projected-gradient magnitude of an epoch drops below
// opt.tolerance. `observe` is called with the state after every epoch.
//
// Throws NumericError on non-finite feature values, std::invalid_argument
// on malformed input.
template <typename Scalar, typename Observer = NoEpochObserver>
BinarySolution<Scalar> train_binary(std::span<const Eigen::SparseVector<Scalar>> xs,
                                    std::span<const int> y, const SolverOptions& opt,
                                    std::uint64_t seed, Observer&& observe = {}) {
  if (xs.empty() || xs.size() != y.size()) {
    throw std::invalid_argument("binary problem needs equal, non-zero numbers of vectors and labels");
  }
  if (!(opt.C > 0)) throw std::invalid_argument("C must be positive");
  const Eigen::Index dim = xs.front().size();
  const auto n = xs.size();
  const auto C = static_cast<Scalar>(opt.C);
  const auto bias = static_cast<Scalar>(opt.bias);

  std::vector<Scalar> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i].size() != dim) throw std::invalid_argument("vectors differ in dimension");
    if (y[i] != 1 && y[i] != -1) throw std::invalid_argument("binary labels must be +1 or -1");
    Scalar sq = bias * bias;
    for (typename Eigen::SparseVector<Scalar>::InnerIterator it(xs[i]); it; ++it) {
      if (!std::isfinite(it.value())) {
        throw NumericError("non-finite feature value in instance " + std::to_string(i));
      }
      sq += it.value() * it.value();
    }
    diag[i] = sq;
  }

  BinarySolution<Scalar> sol;
  sol.weights = DenseVectorT<Scalar>::Zero(dim + 1);
  sol.alpha = DenseVectorT<Scalar>::Zero(static_cast<Eigen::Index>(n));
  auto& w = sol.weights;
  auto& alpha = sol.alpha;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);

  for (int epoch = 1; epoch <= opt.max_iterations; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    Scalar max_violation = 0;
    for (std::size_t i : order) {
      const Scalar yi = static_cast<Scalar>(y[i]);
      const Scalar grad = yi * augmented_dot(w, xs[i], bias) - Scalar(1);
      Scalar& a = alpha(static_cast<Eigen::Index>(i));
      Scalar projected = grad;
      if (a <= 0) {
        projected = std::min(grad, Scalar(0));
      } else if (a >= C) {
        projected = std::max(grad, Scalar(0));
      }
      max_violation = std::max(max_violation, std::abs(projected));
      if (projected == 0) continue;

      // A zero augmented vector has no curvature; its gradient is -1, so the
      // dual optimum puts the variable at its upper bound.
      const Scalar next = diag[i] > 0 ? std::clamp(a - grad / diag[i], Scalar(0), C) : C;
      const Scalar step = (next - a) * yi;
      a = next;
      if (step == 0) continue;
      for (typename Eigen::SparseVector<Scalar>::InnerIterator it(xs[i]); it; ++it) {
        w(it.index()) += step * it.value();
      }
      w(dim) += step * bias;
    }
    sol.epochs = epoch;
    sol.max_violation = max_violation;
    observe(EpochState<Scalar>{epoch, alpha, w, max_violation});
    if (max_violation < static_cast<Scalar>(opt.tolerance)) {
      sol.converged = true;
      break;
    }
  }
  return sol;
}

}  // namespace hsd

#endif  // HSD_SVM_HPP_
