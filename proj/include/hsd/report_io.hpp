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

#ifndef HSD_REPORT_IO_HPP_
#define HSD_REPORT_IO_HPP_

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "hsd/evaluation.hpp"
#include "json.hpp"

namespace hsd {

inline constexpr int kReportFormat = 1;

nlohmann::json to_json(const ConfusionMatrix& cm);
nlohmann::json to_json(const EvaluationReport& report);

// model,gold,HATE,OFFENSIVE,OK,rate_HATE,rate_OFFENSIVE,rate_OK
void write_confusion_csv(std::ostream& out, std::span<const EvaluationReport> reports);

// size,mean,std
void write_curve_csv(std::ostream& out, std::span<const CurvePoint> points);

// Accuracy fraction as a percentage with one decimal, e.g. "78.0".
std::string format_percent(double fraction);

// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hsd

#endif  // HSD_REPORT_IO_HPP_
