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

#ifndef HSD_CSV_HPP_
#define HSD_CSV_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace hsd {

// Streaming RFC 4180 reader. Accepts LF or CRLF record terminators, quoted
// fields with embedded commas, newlines and doubled quotes, and a leading
// UTF-8 byte order mark. Throws ParseError on malformed quoting.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in);

  // Next record, or nullopt at end of input. Blank lines are skipped.
  std::optional<std::vector<std::string>> next();

  // 1-based line on which the most recently returned record started.
  std::size_t record_line() const { return record_line_; }

 private:
  int get();
  int peek();

  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
  bool at_start_ = true;
};

// Writes one field, quoting only when needed.
std::string csv_escape(const std::string& field);

}  // namespace hsd

#endif  // HSD_CSV_HPP_
