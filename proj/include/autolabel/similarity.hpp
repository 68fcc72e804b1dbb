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

// String similarities in [0, 1] used to deduplicate extracted keyphrases.
// All of them compare Unicode code points, not bytes.

#ifndef AUTOLABEL_SIMILARITY_HPP_
#define AUTOLABEL_SIMILARITY_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "autolabel/error.hpp"
#include "autolabel/text_util.hpp"

namespace autolabel {

enum class DedupMethod { kLevenshtein, kSequenceMatcher, kJaroWinkler };

inline std::string_view to_string(DedupMethod m) {
  switch (m) {
    case DedupMethod::kLevenshtein: return "LEVENSHTEIN";
    case DedupMethod::kSequenceMatcher: return "SEQUENCE_MATCHER";
    case DedupMethod::kJaroWinkler: return "JARO_WINKLER";
  }
  return "";
}

inline DedupMethod dedup_method_from_string(std::string_view s) {
  if (s == "LEVENSHTEIN") return DedupMethod::kLevenshtein;
  if (s == "SEQUENCE_MATCHER") return DedupMethod::kSequenceMatcher;
  if (s == "JARO_WINKLER") return DedupMethod::kJaroWinkler;
  throw ConfigError("unknown dedup method '" + std::string(s) + "'");
}

namespace detail {

using CodePoints = std::vector<char32_t>;

inline CodePoints code_points(std::string_view s) {
  CodePoints out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) out.push_back(text::decode_utf8(s, i));
  return out;
}

inline std::size_t edit_distance(const CodePoints& a, const CodePoints& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Longest common block of a[alo, ahi) and b[blo, bhi); ties go to the block
// ending earliest in a, then earliest in b.
inline std::tuple<std::size_t, std::size_t, std::size_t> longest_block(
    const CodePoints& a, const CodePoints& b, std::size_t alo, std::size_t ahi,
    std::size_t blo, std::size_t bhi) {
  std::size_t best_i = alo, best_j = blo, best = 0;
  std::vector<std::size_t> prev(bhi - blo + 1, 0), cur(bhi - blo + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      const std::size_t idx = j - blo + 1;
      cur[idx] = a[i] == b[j] ? prev[idx - 1] + 1 : 0;
      if (cur[idx] > best) {
        best = cur[idx];
        best_i = i + 1 - best;
        best_j = j + 1 - best;
      }
    }
    std::swap(prev, cur);
  }
  return {best_i, best_j, best};
}

inline std::size_t matching_characters(const CodePoints& a, const CodePoints& b,
                                       std::size_t alo, std::size_t ahi, std::size_t blo,
                                       std::size_t bhi) {
  if (alo >= ahi || blo >= bhi) return 0;
  const auto [i, j, k] = longest_block(a, b, alo, ahi, blo, bhi);
  if (k == 0) return 0;
  return k + matching_characters(a, b, alo, i, blo, j) +
         matching_characters(a, b, i + k, ahi, j + k, bhi);
}

}  // namespace detail

/// 1 - editDistance / max length.
inline double levenshtein_similarity(std::string_view a, std::string_view b) {
  const auto ca = detail::code_points(a), cb = detail::code_points(b);
  if (ca.empty() && cb.empty()) return 1.0;
  if (ca.empty() || cb.empty()) return 0.0;
  const double d = static_cast<double>(detail::edit_distance(ca, cb));
  return 1.0 - d / static_cast<double>(std::max(ca.size(), cb.size()));
}

/// 2M / (|a| + |b|), M the total size of the recursively found longest common
/// blocks (the ratio computed by a "sequence matcher").
inline double sequence_matcher_similarity(std::string_view a, std::string_view b) {
  const auto ca = detail::code_points(a), cb = detail::code_points(b);
  if (ca.empty() && cb.empty()) return 1.0;
  if (ca.empty() || cb.empty()) return 0.0;
  const std::size_t m = detail::matching_characters(ca, cb, 0, ca.size(), 0, cb.size());
  return 2.0 * static_cast<double>(m) / static_cast<double>(ca.size() + cb.size());
}

inline double jaro_similarity(std::string_view a, std::string_view b) {
  const auto ca = detail::code_points(a), cb = detail::code_points(b);
  if (ca.empty() && cb.empty()) return 1.0;
  if (ca.empty() || cb.empty()) return 0.0;
  const std::size_t longest = std::max(ca.size(), cb.size());
  const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;
  std::vector<bool> a_used(ca.size(), false), b_used(cb.size(), false);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(cb.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (b_used[j] || ca[i] != cb[j]) continue;
      a_used[i] = b_used[j] = true;
      ++matches;
      break;
    }
  }
  if (matches == 0) return 0.0;
  std::size_t half_transpositions = 0;
  for (std::size_t i = 0, j = 0; i < ca.size(); ++i) {
    if (!a_used[i]) continue;
    while (!b_used[j]) ++j;
    if (ca[i] != cb[j]) ++half_transpositions;
    ++j;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(half_transpositions / 2);
  return (m / static_cast<double>(ca.size()) + m / static_cast<double>(cb.size()) +
          (m - t) / m) /
         3.0;
}

/// Jaro similarity with Winkler's prefix boost: scaling 0.1 over a common
/// prefix of up to four characters, applied when Jaro exceeds 0.7.
inline double jaro_winkler_similarity(std::string_view a, std::string_view b) {
  const double j = jaro_similarity(a, b);
  if (j <= 0.7) return j;
  const auto ca = detail::code_points(a), cb = detail::code_points(b);
  std::size_t prefix = 0;
  while (prefix < 4 && prefix < ca.size() && prefix < cb.size() && ca[prefix] == cb[prefix])
    ++prefix;
  return j + static_cast<double>(prefix) * 0.1 * (1.0 - j);
}

inline double similarity(std::string_view a, std::string_view b, DedupMethod method) {
  switch (method) {
    case DedupMethod::kLevenshtein: return levenshtein_similarity(a, b);
    case DedupMethod::kSequenceMatcher: return sequence_matcher_similarity(a, b);
    case DedupMethod::kJaroWinkler: return jaro_winkler_similarity(a, b);
  }
  return 0.0;
}

}  // namespace autolabel

#endif  // AUTOLABEL_SIMILARITY_HPP_
