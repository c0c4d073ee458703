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

#include "hsd/text.hpp"

#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <array>

namespace hsd {
namespace {

bool is_space(UChar32 cp) { return u_isUWhiteSpace(cp); }

// ASCII prefixes are compared after case folding, so only lowercase forms
// are needed here.
constexpr std::array<std::u32string_view, 3> kUrlPrefixes = {
    U"http://", U"https://", U"www."};

bool url_starts_at(const std::u32string& s, std::size_t pos) {
  for (std::u32string_view prefix : kUrlPrefixes) {
    if (s.size() - pos < prefix.size()) continue;
    bool match = true;
    for (std::size_t j = 0; j < prefix.size(); ++j) {
      char32_t c = s[pos + j];
      if (c >= U'A' && c <= U'Z') c += U'a' - U'A';
      if (c != prefix[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

void append_utf8(std::string& out, char32_t cp) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

bool is_emoji(char32_t cp) {
  return (cp >= 0x1F300 && cp <= 0x1F64F) ||  // symbols, pictographs, emoticons
         (cp >= 0x1F680 && cp <= 0x1F6FF) ||  // transport and map
         (cp >= 0x1F900 && cp <= 0x1F9FF) ||  // supplemental pictographs
         (cp >= 0x1F1E6 && cp <= 0x1F1FF) ||  // regional indicators
         (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols, dingbats
         cp == 0xFE0F || cp == 0x200D;
}

std::string preprocess(std::string_view raw_text) {
  icu::UnicodeString folded = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw_text.data(), static_cast<int32_t>(raw_text.size())));
  folded.foldCase(U_FOLD_CASE_DEFAULT);

  // Folding and emoji removal are per code point, so they commute; URL
  // matching runs afterwards so that removing an emoji can never splice a
  // new URL prefix together on a second pass.
  std::u32string cps;
  cps.reserve(static_cast<std::size_t>(folded.length()));
  for (int32_t i = 0; i < folded.length();) {
    UChar32 cp = folded.char32At(i);
    i += U16_LENGTH(cp);
    if (!is_emoji(static_cast<char32_t>(cp))) cps.push_back(static_cast<char32_t>(cp));
  }

  std::string out;
  out.reserve(raw_text.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < cps.size();) {
    char32_t cp = cps[i];
    if (is_space(static_cast<UChar32>(cp))) {
      pending_space = !out.empty();
      ++i;
      continue;
    }
    if (url_starts_at(cps, i)) {
      while (i < cps.size() && !is_space(static_cast<UChar32>(cps[i]))) ++i;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, cp);
    ++i;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t start = -1;
  for (int32_t i = 0; i < length;) {
    int32_t at = i;
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    if (cp >= 0 && is_space(cp)) {
      if (start >= 0) tokens.emplace_back(text.substr(start, at - start));
      start = -1;
    } else if (start < 0) {
      start = at;
    }
  }
  if (start >= 0) tokens.emplace_back(text.substr(start));
  return tokens;
}

std::vector<std::size_t> code_point_offsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  offsets.reserve(text.size() + 1);
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  for (int32_t i = 0; i < length;) {
    offsets.push_back(static_cast<std::size_t>(i));
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    (void)cp;
  }
  offsets.push_back(text.size());
  return offsets;
}

}  // namespace hsd
