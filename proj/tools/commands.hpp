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

#ifndef HSD_TOOLS_COMMANDS_HPP_
#define HSD_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hsd/corpus.hpp"
#include "hsd/evaluation.hpp"

namespace hsd::cli {

struct ExperimentConfig {
  std::filesystem::path data;
  std::string text_col = "tweet";
  std::string label_col = "class";
  std::map<std::string, Label> label_map = default_label_map();
  // Model list; empty selects the command's default.
  std::string features;
  int k = 10;
  std::uint64_t seed = 42;
  double c = 1.0;
  double bias = 1.0;
  double tolerance = 0.1;
  int max_iter = 1000;
  int min_df = 1;
  std::filesystem::path out = "out";
  int jobs = 1;
  std::string sizes;  // learning-curve sizes, comma separated; empty = default
  std::filesystem::path model;
  std::filesystem::path vocab;
};

// Comma-separated model entries. An entry is "majority", "all" (the
// thirteen standard families in one space), "singles" (each standard
// family as its own model), "grid" (majority, singles, all) or
// "family:order" atoms joined by '+' into one space.
std::vector<ModelSpec> parse_model_list(std::string_view text);

// "raw=LABEL,raw=LABEL". Throws ConfigError.
std::map<std::string, Label> parse_label_map(std::string_view text);

// Throws ConfigError on k < 2, C <= 0 and similar.
void validate(const ExperimentConfig& config);

Hyperparameters hyperparameters(const ExperimentConfig& config);

// Each command returns the process exit status and writes its artifacts
// under config.out only after all computation succeeded.
int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_curve(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_train(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_predict(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hsd::cli

#endif  // HSD_TOOLS_COMMANDS_HPP_
