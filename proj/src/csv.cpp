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

#include "hsd/csv.hpp"

#include "hsd/error.hpp"

namespace hsd {

CsvReader::CsvReader(std::istream& in) : in_(in) {}

int CsvReader::get() {
  int c = in_.get();
  if (c == '\n') ++line_;
  return c;
}

int CsvReader::peek() { return in_.peek(); }

std::optional<std::vector<std::string>> CsvReader::next() {
  if (at_start_) {
    at_start_ = false;
    if (peek() == 0xEF) {
      char bom[3];
      in_.read(bom, 3);
      if (in_.gcount() != 3 || static_cast<unsigned char>(bom[1]) != 0xBB ||
          static_cast<unsigned char>(bom[2]) != 0xBF) {
        throw ParseError("invalid byte order mark", line_);
      }
    }
  }

  // Skip blank lines between records.
  for (;;) {
    int c = peek();
    if (c == '\r') {
      get();
      if (peek() != '\n') throw ParseError("bare carriage return", line_);
      get();
    } else if (c == '\n') {
      get();
    } else {
      break;
    }
  }
  if (peek() == std::char_traits<char>::eof()) return std::nullopt;

  record_line_ = line_;
  std::vector<std::string> fields;
  std::string field;
  for (;;) {
    int c = get();
    if (c == '"' && field.empty()) {
      // Quoted field.
      for (;;) {
        int q = get();
        if (q == std::char_traits<char>::eof()) {
          throw ParseError("unterminated quoted field", record_line_);
        }
        if (q == '"') {
          if (peek() == '"') {
            get();
            field.push_back('"');
          } else {
            break;
          }
        } else {
          field.push_back(static_cast<char>(q));
        }
      }
      int after = peek();
      if (after != ',' && after != '\n' && after != '\r' &&
          after != std::char_traits<char>::eof()) {
        throw ParseError("unexpected character after closing quote", line_);
      }
      continue;
    }
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      continue;
    }
    if (c == '\r') {
      if (peek() != '\n') throw ParseError("bare carriage return", line_);
      continue;
    }
    if (c == '\n' || c == std::char_traits<char>::eof()) {
      fields.push_back(std::move(field));
      return fields;
    }
    if (c == '"') throw ParseError("quote inside unquoted field", line_);
    field.push_back(static_cast<char>(c));
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace hsd
