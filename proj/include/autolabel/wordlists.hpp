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

#ifndef AUTOLABEL_WORDLISTS_HPP_
#define AUTOLABEL_WORDLISTS_HPP_

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autolabel/error.hpp"
#include "autolabel/text_util.hpp"

namespace autolabel {

// Standard English IR stopword list (the 179-word list distributed with the
// NLTK corpora).
inline constexpr std::array<std::string_view, 179> kDefaultStopwords = {
    "i",          "me",         "my",       "myself",  "we",
    "our",        "ours",       "ourselves", "you",    "you're",
    "you've",     "you'll",     "you'd",    "your",    "yours",
    "yourself",   "yourselves", "he",       "him",     "his",
    "himself",    "she",        "she's",    "her",     "hers",
    "herself",    "it",         "it's",     "its",     "itself",
    "they",       "them",       "their",    "theirs",  "themselves",
    "what",       "which",      "who",      "whom",    "this",
    "that",       "that'll",    "these",    "those",   "am",
    "is",         "are",        "was",      "were",    "be",
    "been",       "being",      "have",     "has",     "had",
    "having",     "do",         "does",     "did",     "doing",
    "a",          "an",         "the",      "and",     "but",
    "if",         "or",         "because",  "as",      "until",
    "while",      "of",         "at",       "by",      "for",
    "with",       "about",      "against",  "between", "into",
    "through",    "during",     "before",   "after",   "above",
    "below",      "to",         "from",     "up",      "down",
    "in",         "out",        "on",       "off",     "over",
    "under",      "again",      "further",  "then",    "once",
    "here",       "there",      "when",     "where",   "why",
    "how",        "all",        "any",      "both",    "each",
    "few",        "more",       "most",     "other",   "some",
    "such",       "no",         "nor",      "not",     "only",
    "own",        "same",       "so",       "than",    "too",
    "very",       "s",          "t",        "can",     "will",
    "just",       "don",        "don't",    "should",  "should've",
    "now",        "d",          "ll",       "m",       "o",
    "re",         "ve",         "y",        "ain",     "aren",
    "aren't",     "couldn",     "couldn't", "didn",    "didn't",
    "doesn",      "doesn't",    "hadn",     "hadn't",  "hasn",
    "hasn't",     "haven",      "haven't",  "isn",     "isn't",
    "ma",         "mightn",     "mightn't", "mustn",   "mustn't",
    "needn",      "needn't",    "shan",     "shan't",  "shouldn",
    "shouldn't",  "wasn",       "wasn't",   "weren",   "weren't",
    "won",        "won't",      "wouldn",   "wouldn't",
};

namespace detail {

inline std::vector<std::string> read_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    entries.emplace_back(t);
  }
  return entries;
}

}  // namespace detail

struct StopwordList {
  std::set<std::string, std::less<>> words;
  std::string source_name;

  static StopwordList defaults() {
    StopwordList list;
    list.source_name = "default";
    for (std::string_view w : kDefaultStopwords) list.words.emplace(w);
    return list;
  }

  // One entry per line; entries are lowercased, "#" lines are comments.
  static StopwordList load(const std::filesystem::path& path) {
    StopwordList list;
    list.source_name = path.filename().string();
    for (const std::string& e : detail::read_list_file(path)) {
      if (std::any_of(e.begin(), e.end(),
                      [](char c) { return text::is_space(c); }))
        throw ParseError("stopword entry contains whitespace: '" + e + "'");
      list.words.insert(text::ascii_lower(e));
    }
    return list;
  }

  bool contains(std::string_view word) const {
    return words.find(text::ascii_lower(word)) != words.end();
  }
};

inline bool is_stopword(std::string_view word, const StopwordList& list) {
  return list.contains(word);
}

// Terms sanitization must leave untouched (acronyms, strain names, ...).
// Entries may span several whitespace-separated words.
struct CuratedTermList {
  std::vector<std::string> protected_terms;

  static CuratedTermList load(const std::filesystem::path& path) {
    CuratedTermList list;
    for (std::string& e : detail::read_list_file(path))
      list.protected_terms.push_back(text::join(text::split_whitespace(e), " "));
    return list;
  }
};

}  // namespace autolabel

#endif  // AUTOLABEL_WORDLISTS_HPP_
