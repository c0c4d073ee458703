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

#ifndef HSD_ERROR_HPP_
#define HSD_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsd {

// Bad or incomplete configuration (missing column, invalid spec string).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input whose content violates a contract (unmapped label).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class StratificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsd

#endif  // HSD_ERROR_HPP_
