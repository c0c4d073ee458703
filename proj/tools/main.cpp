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

// hsd: batch front end for the lexical hate-speech baseline.
//
//   hsd evaluate --data labeled_data.csv --features grid --out runs/grid
//   hsd oracle   --data labeled_data.csv --out runs/oracle
//   hsd curve    --data labeled_data.csv --features char:4 --out runs/curve
//   hsd train    --data labeled_data.csv --features char:4 --out runs/model
//   hsd predict  --data new.csv --model runs/model/model.json --vocab runs/model/vocab.json
//
// Every flag may also be given in a key=value file passed with --config;
// flags on the command line take precedence.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace hsd::cli;
  CLI::App app{"Character/word n-gram linear SVM baseline for three-class hate-speech detection"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string label_map;
  app.add_option("--data", cfg.data, "Input CSV (RFC 4180, UTF-8, header row)");
  app.add_option("--text-col", cfg.text_col, "Text column name")->capture_default_str();
  app.add_option("--label-col", cfg.label_col, "Label column name")->capture_default_str();
  app.add_option("--label-map", label_map,
                 "raw=LABEL pairs, comma separated (LABEL is HATE, OFFENSIVE or OK)");
  app.add_option("--features", cfg.features,
                 "Models, comma separated: family:order atoms joined by '+', "
                 "'all', 'singles', 'majority' or 'grid'");
  app.add_option("--k", cfg.k, "Cross-validation folds")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--c", cfg.c, "SVM regularization trade-off C")->capture_default_str();
  app.add_option("--bias", cfg.bias, "Constant appended to every vector")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "Solver stopping tolerance")->capture_default_str();
  app.add_option("--max-iter", cfg.max_iter, "Solver epoch limit")->capture_default_str();
  app.add_option("--min-df", cfg.min_df, "Minimum document frequency")->capture_default_str();
  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Concurrent workers")->capture_default_str();
  app.add_option("--sizes", cfg.sizes, "Learning-curve training sizes, comma separated");
  app.add_option("--model", cfg.model, "Model file for predict (default <out>/model.json)");
  app.add_option("--vocab", cfg.vocab, "Vocabulary file for predict (default <out>/vocab.json)");

  auto* evaluate = app.add_subcommand("evaluate", "Cross-validate each model, write report.json and confusion.csv");
  auto* oracle = app.add_subcommand("oracle", "Oracle accuracy over shared-fold models, write oracle.json");
  auto* curve = app.add_subcommand("curve", "Learning curve, write curve.csv");
  auto* train = app.add_subcommand("train", "Train on the whole dataset, write model.json and vocab.json");
  auto* predict = app.add_subcommand("predict", "Label a CSV with a saved model, write predictions.csv");
  for (auto* sub : {evaluate, oracle, curve, train, predict}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (!label_map.empty()) {
    try {
      cfg.label_map = parse_label_map(label_map);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }

  if (evaluate->parsed()) return cmd_evaluate(cfg, std::cout, std::cerr);
  if (oracle->parsed()) return cmd_oracle(cfg, std::cout, std::cerr);
  if (curve->parsed()) return cmd_curve(cfg, std::cout, std::cerr);
  if (train->parsed()) return cmd_train(cfg, std::cout, std::cerr);
  return cmd_predict(cfg, std::cout, std::cerr);
}
