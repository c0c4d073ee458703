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

#include <fstream>

#include "hsd/linear_model.hpp"
#include "json.hpp"

namespace hsd {
namespace {
constexpr int kModelFormat = 1;
}

void save_model(const LinearModel& model, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["format_version"] = kModelFormat;
  auto& classes = doc["classes"] = nlohmann::json::array();
  for (Label l : model.classes) classes.push_back(label_name(l));
  doc["C"] = model.options.C;
  doc["bias"] = model.options.bias;
  doc["tolerance"] = model.options.tolerance;
  doc["max_iterations"] = model.options.max_iterations;
  doc["seed"] = model.seed;
  doc["vocab_ref"] = model.vocab_ref;
  doc["dim"] = model.dim();
  doc["converged"] = model.converged;
  auto& weights = doc["weights"] = nlohmann::json::array();
  for (Eigen::Index c = 0; c < model.weights.cols(); ++c) {
    const auto col = model.weights.col(c);
    weights.push_back(std::vector<double>(col.data(), col.data() + col.size()));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << doc.dump() << '\n';
  if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

LinearModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("format_version").get<int>() != kModelFormat) {
      throw ConfigError("unsupported model format_version in '" + path.string() + "'");
    }
    LinearModel model;
    for (const auto& name : doc.at("classes")) {
      auto l = parse_label(name.get<std::string>());
      if (!l) throw ParseError("unknown class '" + name.get<std::string>() + "'", 1);
      model.classes.push_back(*l);
    }
    model.options.C = doc.at("C").get<double>();
    model.options.bias = doc.at("bias").get<double>();
    model.options.tolerance = doc.at("tolerance").get<double>();
    model.options.max_iterations = doc.at("max_iterations").get<int>();
    model.seed = doc.at("seed").get<std::uint64_t>();
    model.vocab_ref = doc.at("vocab_ref").get<std::string>();
    model.converged = doc.at("converged").get<std::vector<bool>>();
    const auto dim = doc.at("dim").get<Eigen::Index>();
    const auto& weights = doc.at("weights");
    if (weights.size() != model.classes.size()) {
      throw ParseError("weight array count differs from class count", 1);
    }
    model.weights.resize(dim + 1, static_cast<Eigen::Index>(weights.size()));
    for (std::size_t c = 0; c < weights.size(); ++c) {
      const auto w = weights[c].get<std::vector<double>>();
      if (static_cast<Eigen::Index>(w.size()) != dim + 1) {
        throw ParseError("weight array length differs from dim + 1", 1);
      }
      model.weights.col(static_cast<Eigen::Index>(c)) =
          Eigen::Map<const Eigen::VectorXd>(w.data(), dim + 1);
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("model '" + path.string() + "': " + e.what(), 1);
  }
}

}  // namespace hsd
