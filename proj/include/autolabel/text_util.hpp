// Copyright 2026 The autolabel Authors.
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

#ifndef AUTOLABEL_TEXT_UTIL_HPP_
#define AUTOLABEL_TEXT_UTIL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace autolabel::text {

// Decodes one code point starting at `i` and advances `i`. Malformed
// sequences yield the lead byte value and advance by one byte.
inline char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> int {
    if (i + k >= s.size()) return -1;
    const auto b = static_cast<unsigned char>(s[i + k]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  for (int k = 1; k < len; ++k) {
    const int c = cont(static_cast<std::size_t>(k));
    if (c < 0) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | static_cast<char32_t>(c);
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

enum class CharClass {
  kSpace,
  kNewline,
  kLetter,
  kDigit,
  kHyphen,
  kApostrophe,
  kSentenceEnd,
  kPunct,
};

inline CharClass classify(char32_t cp) {
  if (cp == U'\n') return CharClass::kNewline;
  if (cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\f' || cp == U'\v')
    return CharClass::kSpace;
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z'))
    return CharClass::kLetter;
  if (cp >= U'0' && cp <= U'9') return CharClass::kDigit;
  if (cp == U'-') return CharClass::kHyphen;
  if (cp == U'\'' || cp == 0x2019 || cp == 0x2018) return CharClass::kApostrophe;
  if (cp == U'.' || cp == U'!' || cp == U'?') return CharClass::kSentenceEnd;
  if (cp < 0x80) return CharClass::kPunct;
  // Unicode spaces.
  if (cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x202F ||
      cp == 0x205F || cp == 0x3000)
    return CharClass::kSpace;
  if (cp == 0x2028 || cp == 0x2029) return CharClass::kNewline;
  if (cp == 0x00B5) return CharClass::kLetter;  // micro sign, as in "µm"
  if ((cp >= 0x00A1 && cp <= 0x00BF) || cp == 0x00D7 || cp == 0x00F7 ||
      (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
      (cp >= 0x2190 && cp <= 0x23FF) || (cp >= 0x25A0 && cp <= 0x27BF) ||
      (cp >= 0x3001 && cp <= 0x303F) || (cp >= 0xFF01 && cp <= 0xFF0F) ||
      cp == 0xFFFD)
    return CharClass::kPunct;
  return CharClass::kLetter;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts,
                        std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

inline std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size();) {
    decode_utf8(s, i);
    ++n;
  }
  return n;
}

// True when every character is an ASCII uppercase letter (acronym shape).
inline bool is_all_upper_letters(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < 'A' || c > 'Z') return false;
  return true;
}

// Letters only, with hyphens allowed strictly between letters.
inline bool is_alphabetic_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool prev_hyphen = true;  // disallows a leading hyphen
  while (i < s.size()) {
    const char32_t cp = decode_utf8(s, i);
    const CharClass cls = classify(cp);
    if (cls == CharClass::kLetter) {
      prev_hyphen = false;
    } else if (cls == CharClass::kHyphen && !prev_hyphen) {
      prev_hyphen = true;
    } else {
      return false;
    }
  }
  return !prev_hyphen;
}

}  // namespace autolabel::text

#endif  // AUTOLABEL_TEXT_UTIL_HPP_
