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

#include "commands.hpp"

#include <cstdio>
#include <exception>
#include <sstream>

#include "hsd/error.hpp"
#include "hsd/linear_model.hpp"
#include "hsd/report_io.hpp"
#include "hsd/vocabulary.hpp"
#include "json.hpp"

namespace hsd::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

ModelSpec combined_standard() {
  return ModelSpec::combined("All features combined", standard_specs());
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> sizes;
  for (auto part : split(text, ',')) {
    part = trim(part);
    try {
      std::size_t used = 0;
      const auto v = std::stoull(std::string(part), &used);
      if (used != part.size() || v == 0) throw std::invalid_argument("size");
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ConfigError("bad learning-curve size '" + std::string(part) + "'");
    }
  }
  return sizes;
}

Corpus load_corpus(const ExperimentConfig& config) {
  CsvColumns cols{config.text_col, config.label_col, config.label_map};
  return load_csv(config.data, cols);
}

nlohmann::json config_json(const ExperimentConfig& config, std::string_view features) {
  nlohmann::json label_map;
  for (const auto& [raw, label] : config.label_map) label_map[raw] = label_name(label);
  return {{"data", config.data.string()},
          {"text_col", config.text_col},
          {"label_col", config.label_col},
          {"label_map", label_map},
          {"features", features},
          {"k", config.k},
          {"seed", config.seed},
          {"C", config.c},
          {"bias", config.bias},
          {"tolerance", config.tolerance},
          {"max_iterations", config.max_iter},
          {"min_df", config.min_df}};
}

nlohmann::json counts_json(const ClassCounts& counts) {
  nlohmann::json j;
  for (Label l : kAllLabels) j[std::string(label_name(l))] = counts[index_of(l)];
  return j;
}

void print_row(std::ostream& out, std::string_view name, double accuracy) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-28s %6s\n", std::string(name).c_str(),
                format_percent(accuracy).c_str());
  out << buf;
}

std::string features_or(const ExperimentConfig& config, std::string_view fallback) {
  return config.features.empty() ? std::string(fallback) : config.features;
}

// Runs body; maps every failure to a diagnostic and exit status 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
}

}  // namespace

std::vector<ModelSpec> parse_model_list(std::string_view text) {
  std::vector<ModelSpec> models;
  for (auto entry : split(text, ',')) {
    entry = trim(entry);
    if (entry.empty()) throw ConfigError("empty entry in feature list '" + std::string(text) + "'");
    if (entry == "majority") {
      models.push_back(ModelSpec::majority_baseline());
    } else if (entry == "all") {
      models.push_back(combined_standard());
    } else if (entry == "singles" || entry == "grid") {
      if (entry == "grid") models.push_back(ModelSpec::majority_baseline());
      for (const auto& s : standard_specs()) models.push_back(ModelSpec::single(s));
      if (entry == "grid") models.push_back(combined_standard());
    } else {
      std::vector<FeatureSpec> specs;
      for (auto atom : split(entry, '+')) specs.push_back(FeatureSpec::parse(trim(atom)));
      if (specs.size() == 1) {
        models.push_back(ModelSpec::single(specs.front()));
      } else {
        models.push_back(ModelSpec::combined(std::string(entry), std::move(specs)));
      }
    }
  }
  return models;
}

std::map<std::string, Label> parse_label_map(std::string_view text) {
  std::map<std::string, Label> map;
  for (auto entry : split(text, ',')) {
    const auto eq = entry.rfind('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("label map entry '" + std::string(entry) + "' is not raw=LABEL");
    }
    const auto label = parse_label(trim(entry.substr(eq + 1)));
    if (!label) {
      throw ConfigError("label map entry '" + std::string(entry) +
                        "' must map to HATE, OFFENSIVE or OK");
    }
    map[std::string(trim(entry.substr(0, eq)))] = *label;
  }
  return map;
}

void validate(const ExperimentConfig& config) {
  if (config.k < 2) throw ConfigError("k must be at least 2");
  if (!(config.c > 0)) throw ConfigError("C must be positive");
  if (!(config.tolerance > 0)) throw ConfigError("tolerance must be positive");
  if (config.max_iter < 1) throw ConfigError("max-iter must be at least 1");
  if (config.min_df < 1) throw ConfigError("min-df must be at least 1");
  if (config.jobs < 1) throw ConfigError("jobs must be at least 1");
}

Hyperparameters hyperparameters(const ExperimentConfig& config) {
  Hyperparameters h;
  h.solver.C = config.c;
  h.solver.bias = config.bias;
  h.solver.tolerance = config.tolerance;
  h.solver.max_iterations = config.max_iter;
  h.min_df = config.min_df;
  h.jobs = config.jobs;
  return h;
}

int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const std::string features = features_or(config, "char:4");
    const auto models = parse_model_list(features);
    const Corpus corpus = load_corpus(config);
    const FoldAssignment folds = stratified_folds(corpus, config.k, config.seed);
    const Hyperparameters hyper = hyperparameters(config);

    std::vector<EvaluationReport> reports;
    out << "Feature                      Accuracy (%)\n";
    for (const auto& m : models) {
      reports.push_back(cross_validate(corpus, m, folds, config.seed, hyper));
      print_row(out, m.name, reports.back().mean_accuracy);
      if (reports.back().unconverged > 0) {
        err << "warning: " << reports.back().unconverged << " binary problems of '" << m.name
            << "' stopped at max-iter before reaching the tolerance\n";
      }
    }

    nlohmann::json doc;
    doc["format_version"] = kReportFormat;
    doc["config"] = config_json(config, features);
    doc["class_counts"] = counts_json(corpus.class_counts());
    auto& arr = doc["models"] = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::ostringstream confusion;
    write_confusion_csv(confusion, reports);

    prepare_out_dir(config.out);
    write_file_atomic(config.out / "report.json", doc.dump(1) + "\n");
    write_file_atomic(config.out / "confusion.csv", confusion.str());
  });
}

int cmd_oracle(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const std::string features = features_or(config, "singles,all");
    const auto models = parse_model_list(features);
    const Corpus corpus = load_corpus(config);
    const FoldAssignment folds = stratified_folds(corpus, config.k, config.seed);
    const Hyperparameters hyper = hyperparameters(config);

    std::vector<std::vector<PredictionRecord>> sets;
    for (const auto& m : models) {
      sets.push_back(cross_validate(corpus, m, folds, config.seed, hyper).records);
    }
    const OracleResult result = oracle(sets);

    out << "Feature                      Accuracy (%)\n";
    nlohmann::json members = nlohmann::json::array();
    double best = 0;
    for (std::size_t i = 0; i < models.size(); ++i) {
      print_row(out, models[i].name, result.member_accuracies[i]);
      members.push_back({{"name", models[i].name}, {"accuracy", result.member_accuracies[i]}});
      best = std::max(best, result.member_accuracies[i]);
    }
    print_row(out, "Oracle", result.accuracy);

    nlohmann::json coverage = nlohmann::json::array();
    for (std::size_t i = 0; i < result.ids.size(); ++i) {
      coverage.push_back({{"id", result.ids[i]}, {"correct_models", result.coverage[i]}});
    }
    nlohmann::json doc;
    doc["format_version"] = kReportFormat;
    doc["config"] = config_json(config, features);
    doc["members"] = std::move(members);
    doc["oracle_accuracy"] = result.accuracy;
    doc["best_member_accuracy"] = best;
    doc["coverage"] = std::move(coverage);

    prepare_out_dir(config.out);
    write_file_atomic(config.out / "oracle.json", doc.dump(1) + "\n");
  });
}

int cmd_curve(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const auto models = parse_model_list(features_or(config, "char:4"));
    if (models.size() != 1) throw ConfigError("curve takes exactly one model");
    const Corpus corpus = load_corpus(config);
    const FoldAssignment folds = stratified_folds(corpus, config.k, config.seed);
    const auto sizes =
        config.sizes.empty() ? default_curve_sizes(folds) : parse_sizes(config.sizes);
    const auto points = learning_curve(corpus, models.front(), sizes, folds, config.seed,
                                       hyperparameters(config));
    std::ostringstream csv;
    write_curve_csv(csv, points);
    out << "size     mean (%)   std (%)\n";
    for (const auto& p : points) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%-8zu %8.2f %9.2f\n", p.size, 100 * p.mean_accuracy,
                    100 * p.std_accuracy);
      out << buf;
    }
    prepare_out_dir(config.out);
    write_file_atomic(config.out / "curve.csv", csv.str());
  });
}

int cmd_train(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const auto models = parse_model_list(features_or(config, "char:4"));
    if (models.size() != 1 || models.front().majority) {
      throw ConfigError("train takes exactly one feature model");
    }
    const Corpus corpus = load_corpus(config);
    const Hyperparameters hyper = hyperparameters(config);
    const InstanceRefs all = corpus.refs();
    const TrainedPipeline pipeline =
        train_pipeline(all, models.front().specs, hyper, config.seed, config.jobs);
    if (!pipeline.model.all_converged()) {
      err << "warning: training stopped at max-iter before reaching the tolerance\n";
    }
    std::size_t hits = 0;
    for (const auto& inst : corpus.instances()) {
      hits += pipeline.predict(inst.text, inst.tokens) == inst.label;
    }
    out << "features: " << models.front().name << "\n"
        << "dimension: " << pipeline.vocab.dim() << "\n"
        << "training accuracy: "
        << format_percent(static_cast<double>(hits) / static_cast<double>(corpus.size()))
        << "%\n";

    prepare_out_dir(config.out);
    const auto model_tmp = config.out / "model.json.tmp";
    const auto vocab_tmp = config.out / "vocab.json.tmp";
    save_model(pipeline.model, model_tmp);
    save_vocabulary(pipeline.vocab, vocab_tmp);
    std::filesystem::rename(model_tmp, config.out / "model.json");
    std::filesystem::rename(vocab_tmp, config.out / "vocab.json");
  });
}

int cmd_predict(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::filesystem::path model_path =
        config.model.empty() ? config.out / "model.json" : config.model;
    const std::filesystem::path vocab_path =
        config.vocab.empty() ? config.out / "vocab.json" : config.vocab;
    const LinearModel model = load_model(model_path);
    const Vocabulary vocab = load_vocabulary(vocab_path);
    if (model.dim() != vocab.dim() || model.vocab_ref != vocab.fingerprint()) {
      throw ConfigError("vocabulary does not match model: model dimension " +
                        std::to_string(model.dim()) + ", vocabulary dimension " +
                        std::to_string(vocab.dim()) + ", model vocab_ref " + model.vocab_ref +
                        ", vocabulary fingerprint " + vocab.fingerprint());
    }
    CsvColumns cols{config.text_col, config.label_col, config.label_map};
    const auto texts = load_texts_csv(config.data, cols);

    std::ostringstream csv;
    csv << "id,predicted,score_HATE,score_OFFENSIVE,score_OK\n";
    std::size_t labeled = 0, hits = 0;
    char buf[160];
    for (const auto& t : texts) {
      const auto scores = decision_values(model, vectorize(vocab, t.text, t.tokens));
      const Label predicted = model.classes[static_cast<std::size_t>(argmax_first(scores))];
      std::snprintf(buf, sizeof buf, "%lld,%s,%.17g,%.17g,%.17g\n",
                    static_cast<long long>(t.id), std::string(label_name(predicted)).c_str(),
                    scores(0), scores(1), scores(2));
      csv << buf;
      if (t.gold) {
        ++labeled;
        hits += *t.gold == predicted;
      }
    }
    out << "predicted " << texts.size() << " texts\n";
    if (labeled > 0) {
      out << "accuracy on " << labeled << " labeled texts: "
          << format_percent(static_cast<double>(hits) / static_cast<double>(labeled)) << "%\n";
    }
    prepare_out_dir(config.out);
    write_file_atomic(config.out / "predictions.csv", csv.str());
  });
}

}  // namespace hsd::cli
