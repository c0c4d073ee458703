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

#ifndef HSD_TESTS_ORACLES_RANDOM_PROBLEMS_HPP_
#define HSD_TESTS_ORACLES_RANDOM_PROBLEMS_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <random>
#include <vector>

namespace hsd::testing {

struct RandomProblem {
  std::vector<Eigen::SparseVector<double>> xs;
  std::vector<int> y;
  Eigen::MatrixXd dense_augmented;  // rows = instances, last column = bias
};

inline RandomProblem random_problem(std::mt19937_64& rng, int n, int dim, double bias,
                                    double density = 0.3) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RandomProblem p;
  p.dense_augmented = Eigen::MatrixXd::Zero(n, dim + 1);
  for (int i = 0; i < n; ++i) {
    Eigen::SparseVector<double> x(dim);
    for (int j = 0; j < dim; ++j) {
      if (unit(rng) < density) {
        const double v = value(rng);
        x.insertBack(j) = v;
        p.dense_augmented(i, j) = v;
      }
    }
    p.dense_augmented(i, dim) = bias;
    p.xs.push_back(std::move(x));
    p.y.push_back(unit(rng) < 0.5 ? 1 : -1);
  }
  return p;
}

}  // namespace hsd::testing

#endif  // HSD_TESTS_ORACLES_RANDOM_PROBLEMS_HPP_
