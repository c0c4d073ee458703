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

#ifndef HSD_TEXT_HPP_
#define HSD_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace hsd {

// Normalizes a raw tweet: Unicode case folding, emoji removal, URL removal,
// whitespace collapse and trim. Total and idempotent. Invalid UTF-8
// sequences become U+FFFD.
//
// A URL is a maximal non-whitespace span that starts with "http://",
// "https://" or "www." (case-insensitive). Emoji are the code points in
// U+1F300-1F64F, U+1F680-1F6FF, U+1F900-1F9FF, U+1F1E6-1F1FF,
// U+2600-27BF, U+FE0F and U+200D.
std::string preprocess(std::string_view raw_text);

// Maximal runs of non-whitespace characters, in order.
std::vector<std::string> tokenize(std::string_view text);

bool is_emoji(char32_t cp);

// Byte offsets of every code point start in a UTF-8 string, followed by
// text.size(). A string with n code points yields n + 1 offsets.
std::vector<std::size_t> code_point_offsets(std::string_view text);

}  // namespace hsd

#endif  // HSD_TEXT_HPP_
