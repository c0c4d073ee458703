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

#include "hsd/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hsd/csv.hpp"
#include "hsd/error.hpp"

namespace hsd {

nlohmann::json to_json(const ConfusionMatrix& cm) {
  return {{"labels", {"HATE", "OFFENSIVE", "OK"}},
          {"counts", cm.counts},
          {"row_normalized", cm.row_normalized}};
}

nlohmann::json to_json(const EvaluationReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    records.push_back({{"id", r.id},
                       {"gold", label_name(r.gold)},
                       {"predicted", label_name(r.predicted)}});
  }
  const auto& h = report.hyperparameters;
  return {{"name", report.name},
          {"specs", report.spec_names},
          {"k", report.k},
          {"seed", report.seed},
          {"hyperparameters",
           {{"C", h.solver.C},
            {"bias", h.solver.bias},
            {"tolerance", h.solver.tolerance},
            {"max_iterations", h.solver.max_iterations},
            {"min_df", h.min_df}}},
          {"fold_accuracies", report.fold_accuracies},
          {"mean_accuracy", report.mean_accuracy},
          {"std_accuracy", report.std_accuracy},
          {"overall_accuracy", report.confusion.accuracy()},
          {"fold_dims", report.fold_dims},
          {"unconverged_binary_problems", report.unconverged},
          {"confusion", to_json(report.confusion)},
          {"records", std::move(records)}};
}

void write_confusion_csv(std::ostream& out, std::span<const EvaluationReport> reports) {
  out << "model,gold,HATE,OFFENSIVE,OK,rate_HATE,rate_OFFENSIVE,rate_OK\n";
  char buf[32];
  for (const auto& r : reports) {
    for (Label g : kAllLabels) {
      const auto gi = index_of(g);
      out << csv_escape(r.name) << ',' << label_name(g);
      for (std::size_t p = 0; p < kNumLabels; ++p) out << ',' << r.confusion.counts[gi][p];
      for (std::size_t p = 0; p < kNumLabels; ++p) {
        std::snprintf(buf, sizeof buf, "%.6f", r.confusion.row_normalized[gi][p]);
        out << ',' << buf;
      }
      out << '\n';
    }
  }
}

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> points) {
  out << "size,mean,std\n";
  char buf[64];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", p.size, p.mean_accuracy, p.std_accuracy);
    out << buf;
  }
}

std::string format_percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", 100.0 * fraction);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw ConfigError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hsd
