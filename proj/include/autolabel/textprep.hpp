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

// Text preparation shared by every stage: sanitization of raw proposal text,
// sentence/token segmentation, and stemming of words and phrases.
//
// Sanitized text uses '\n' as its sentence-break marker. Spaces separate
// tokens inside a sentence; no other whitespace survives sanitization.

#ifndef AUTOLABEL_TEXTPREP_HPP_
#define AUTOLABEL_TEXTPREP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "autolabel/porter.hpp"
#include "autolabel/text_util.hpp"
#include "autolabel/wordlists.hpp"

namespace autolabel {

inline constexpr char kSentenceBreak = '\n';

struct SanitizeOptions {
  // Label and dictionary strings keep numbers ("dsm 1313"); extraction text
  // drops standalone numbers.
  bool keep_numbers = false;
};

namespace detail {

inline const std::regex& url_regex() {
  static const std::regex re(R"((?:[A-Za-z][A-Za-z0-9+.\-]*://|www\.)\S+)");
  return re;
}

inline const std::regex& citation_regex() {
  // "[12]", "[3,4]", "[5-7]" and "(Smith, 2010)", "(Smith et al., 2010; Lee 2012a)".
  static const std::regex re(
      "\\[\\s*\\d+(?:\\s*(?:,|;|-|\xE2\x80\x93)\\s*\\d+)*\\s*\\]"
      "|\\((?:\\s*[A-Z][^()\\d]*?,?\\s*(?:1[89]|20)\\d{2}[a-z]?\\s*;?)+\\s*\\)");
  return re;
}

// Removes URLs and citations, leaving any sentence punctuation that trailed a
// URL in place so the sentence break survives.
inline std::string strip_urls_and_citations(std::string_view raw) {
  std::string text(raw);
  std::string out;
  out.reserve(text.size());
  auto last = text.cbegin();
  for (std::sregex_iterator it(text.begin(), text.end(), url_regex()), end;
       it != end; ++it) {
    out.append(last, (*it)[0].first);
    std::string_view url(&*(*it)[0].first, static_cast<std::size_t>((*it)[0].length()));
    std::size_t keep = url.size();
    while (keep > 0 && (url[keep - 1] == '.' || url[keep - 1] == '!' ||
                        url[keep - 1] == '?' || url[keep - 1] == ',' ||
                        url[keep - 1] == ';' || url[keep - 1] == ')'))
      --keep;
    out.push_back(' ');
    out.append(url.substr(keep));
    last = (*it)[0].second;
  }
  out.append(last, text.cend());
  return std::regex_replace(out, citation_regex(), " ");
}

inline const std::vector<std::string>& non_terminal_abbreviations() {
  static const std::vector<std::string> abbrevs = {
      "e.g.", "i.e.", "al.", "vs.", "cf.", "approx.", "fig.", "figs.",
      "sp.",  "spp.", "ca.", "no.", "dr.", "st.",     "resp.", "var."};
  return abbrevs;
}

struct RawItem {
  std::string token;  // empty for a break
  bool is_break() const { return token.empty(); }
};

inline std::vector<RawItem> split_raw(std::string_view s) {
  std::vector<RawItem> items;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) items.push_back({std::move(cur)});
    cur.clear();
  };
  for (std::size_t i = 0; i < s.size();) {
    const std::size_t start = i;
    const char32_t cp = text::decode_utf8(s, i);
    const text::CharClass cls = text::classify(cp);
    if (cls == text::CharClass::kNewline) {
      flush();
      items.push_back({});
    } else if (cls == text::CharClass::kSpace) {
      flush();
    } else {
      cur.append(s.substr(start, i - start));
    }
  }
  flush();
  return items;
}

inline bool is_closing(char32_t cp) {
  return cp == U')' || cp == U']' || cp == U'}' || cp == U'"' || cp == U'\'' ||
         cp == 0x201D || cp == 0x2019 || cp == 0x00BB;
}

// Whether the token ends a sentence: trailing closers stripped, the last
// character is '.', '!' or '?', and the token is not a known abbreviation.
inline bool ends_sentence(std::string_view token) {
  std::vector<char32_t> cps;
  for (std::size_t i = 0; i < token.size();) cps.push_back(text::decode_utf8(token, i));
  while (!cps.empty() && is_closing(cps.back())) cps.pop_back();
  if (cps.empty()) return false;
  const char32_t last = cps.back();
  if (last == 0x2026) return true;  // ellipsis
  if (text::classify(last) != text::CharClass::kSentenceEnd) return false;
  if (last == U'.') {
    const std::string lower = text::ascii_lower(token);
    for (const std::string& a : non_terminal_abbreviations())
      if (lower == a) return false;
  }
  return true;
}

// Splits a token into its retained pieces: letters and digits, hyphens only
// between two alphanumerics, possessive "'s" dropped, other apostrophes
// deleted, any other punctuation acting as a separator.
inline std::vector<std::string> clean_token(std::string_view token,
                                            bool keep_numbers) {
  struct Cp {
    char32_t cp;
    text::CharClass cls;
  };
  std::vector<Cp> cps;
  for (std::size_t i = 0; i < token.size();) {
    const char32_t cp = text::decode_utf8(token, i);
    cps.push_back({cp, text::classify(cp)});
  }
  auto alnum = [&](std::size_t k) {
    return k < cps.size() && (cps[k].cls == text::CharClass::kLetter ||
                              cps[k].cls == text::CharClass::kDigit);
  };
  std::vector<std::string> pieces;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    const bool numeric = std::all_of(cur.begin(), cur.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
    if (!numeric || keep_numbers) pieces.push_back(cur);
    cur.clear();
  };
  for (std::size_t k = 0; k < cps.size(); ++k) {
    switch (cps[k].cls) {
      case text::CharClass::kLetter:
      case text::CharClass::kDigit:
        text::append_utf8(cur, cps[k].cp);
        break;
      case text::CharClass::kHyphen:
        if (k > 0 && alnum(k - 1) && alnum(k + 1))
          cur.push_back('-');
        else
          flush();
        break;
      case text::CharClass::kApostrophe: {
        const bool possessive = k + 1 < cps.size() &&
                                (cps[k + 1].cp == U's' || cps[k + 1].cp == U'S') &&
                                !alnum(k + 2);
        if (possessive) ++k;
        break;
      }
      default:
        flush();
        break;
    }
  }
  flush();
  return pieces;
}

class ProtectedIndex {
 public:
  explicit ProtectedIndex(const CuratedTermList& list) {
    for (const std::string& term : list.protected_terms) {
      std::vector<std::string> words = text::split_whitespace(term);
      if (words.empty()) continue;
      by_first_.emplace(words.front(), terms_.size());
      terms_.push_back(std::move(words));
    }
  }

  bool empty() const { return terms_.empty(); }

  struct Match {
    std::size_t length = 0;  // raw tokens consumed
    const std::vector<std::string>* words = nullptr;
    std::string trailing;  // text after the term in its last token
  };

  // Longest protected term starting at items[i]; length 0 when none.
  Match match_at(const std::vector<RawItem>& items, std::size_t i) const {
    Match best;
    if (terms_.empty() || items[i].is_break()) return best;
    const std::string& first = items[i].token;
    std::vector<std::string> keys = {first, strip_edges(first, true, false),
                                     strip_edges(first, true, true)};
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const std::string& key : keys) {
      auto [lo, hi] = by_first_.equal_range(key);
      for (auto it = lo; it != hi; ++it) {
        const auto& words = terms_[it->second];
        std::string trailing;
        if (matches(items, i, words, trailing) &&
            (words.size() > best.length ||
             (words.size() == best.length && trailing.size() < best.trailing.size()))) {
          best.length = words.size();
          best.words = &words;
          best.trailing = std::move(trailing);
        }
      }
    }
    return best;
  }

 private:
  static std::string strip_edges(std::string_view s, bool leading, bool trailing) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // byte spans per cp
    std::vector<text::CharClass> classes;
    for (std::size_t i = 0; i < s.size();) {
      const std::size_t b = i;
      classes.push_back(text::classify(text::decode_utf8(s, i)));
      spans.emplace_back(b, i);
    }
    auto edge = [](text::CharClass c) {
      return c == text::CharClass::kPunct || c == text::CharClass::kApostrophe ||
             c == text::CharClass::kSentenceEnd;
    };
    std::size_t lo = 0, hi = classes.size();
    if (leading)
      while (lo < hi && edge(classes[lo])) ++lo;
    if (trailing)
      while (hi > lo && edge(classes[hi - 1])) --hi;
    if (lo >= hi) return {};
    return std::string(s.substr(spans[lo].first, spans[hi - 1].second - spans[lo].first));
  }

  static bool matches(const std::vector<RawItem>& items, std::size_t i,
                      const std::vector<std::string>& words, std::string& trailing) {
    if (i + words.size() > items.size()) return false;
    for (std::size_t w = 0; w < words.size(); ++w) {
      const RawItem& item = items[i + w];
      if (item.is_break()) return false;
      std::string_view tok = item.token;
      const bool is_first = w == 0;
      const bool is_last = w + 1 == words.size();
      if (tok == words[w]) {
        if (is_last) trailing.clear();
        continue;
      }
      if (!is_first && !is_last) return false;
      const std::string lead = is_first ? strip_edges(tok, true, false) : std::string(tok);
      if (lead == words[w]) {
        if (is_last) trailing.clear();
        continue;
      }
      if (!is_last) return false;
      // Last word may carry trailing punctuation.
      if (lead.size() > words[w].size() && lead.compare(0, words[w].size(), words[w]) == 0) {
        const std::string rest = lead.substr(words[w].size());
        if (strip_edges(rest, true, false).empty()) {
          trailing = rest;
          continue;
        }
      }
      return false;
    }
    return true;
  }

  std::vector<std::vector<std::string>> terms_;
  std::unordered_multimap<std::string, std::size_t> by_first_;
};

}  // namespace detail

/// Removes URLs, citations, standalone numbers and punctuation; sentence-final
/// punctuation becomes `kSentenceBreak`, and whitespace collapses to single
/// spaces. Tokens matching `protected_terms` are copied verbatim. Idempotent.
inline std::string sanitize(std::string_view raw,
                            const CuratedTermList& protected_terms = {},
                            SanitizeOptions options = {}) {
  const std::vector<detail::RawItem> items =
      detail::split_raw(detail::strip_urls_and_citations(raw));
  const detail::ProtectedIndex index(protected_terms);

  std::string out;
  bool sentence_open = false;  // current sentence has at least one token
  auto emit = [&](std::string_view token) {
    if (sentence_open) out.push_back(' ');
    out.append(token);
    sentence_open = true;
  };
  auto brk = [&] {
    if (!sentence_open) return;
    out.push_back(kSentenceBreak);
    sentence_open = false;
  };

  for (std::size_t i = 0; i < items.size();) {
    if (items[i].is_break()) {
      brk();
      ++i;
      continue;
    }
    if (!index.empty()) {
      const auto m = index.match_at(items, i);
      if (m.length > 0) {
        for (const std::string& w : *m.words) emit(w);
        if (!m.trailing.empty() && detail::ends_sentence(m.trailing)) brk();
        i += m.length;
        continue;
      }
    }
    const std::string& tok = items[i].token;
    for (const std::string& piece : detail::clean_token(tok, options.keep_numbers))
      emit(piece);
    if (detail::ends_sentence(tok)) brk();
    ++i;
  }
  return out;
}

/// One token of a segmented document.
struct Token {
  std::string surface;
  std::string lower;
  std::string stem;
  std::uint32_t sentence = 0;
  std::uint32_t position = 0;  // index within the sentence
  std::uint32_t offset = 0;    // index within the document
};

using Sentence = std::vector<Token>;

/// Splits sanitized text into sentences at `kSentenceBreak` and into tokens at
/// whitespace. Empty sentences are dropped so sentence indices stay
/// contiguous.
inline std::vector<Sentence> segment(std::string_view clean_text) {
  std::vector<Sentence> sentences;
  std::uint32_t offset = 0;
  std::size_t start = 0;
  while (start <= clean_text.size()) {
    std::size_t end = clean_text.find(kSentenceBreak, start);
    if (end == std::string_view::npos) end = clean_text.size();
    std::vector<std::string> words =
        text::split_whitespace(clean_text.substr(start, end - start));
    if (!words.empty()) {
      Sentence sentence;
      sentence.reserve(words.size());
      const auto index = static_cast<std::uint32_t>(sentences.size());
      for (std::size_t p = 0; p < words.size(); ++p) {
        Token t;
        t.lower = text::ascii_lower(words[p]);
        t.stem = stem(t.lower);
        t.surface = std::move(words[p]);
        t.sentence = index;
        t.position = static_cast<std::uint32_t>(p);
        t.offset = offset++;
        sentence.push_back(std::move(t));
      }
      sentences.push_back(std::move(sentence));
    }
    start = end + 1;
  }
  return sentences;
}

/// Lowercases, splits on whitespace, stems every word and rejoins with single
/// spaces.
inline std::string stem_phrase(std::string_view phrase) {
  std::vector<std::string> words = text::split_whitespace(phrase);
  for (std::string& w : words) w = stem(text::ascii_lower(w));
  return text::join(words, " ");
}

/// Normalizes a label or dictionary string with the same token rules as
/// document text, numbers kept, sentence breaks flattened to spaces.
inline std::string normalize_phrase(std::string_view phrase,
                                    const CuratedTermList& protected_terms = {}) {
  const std::string clean =
      sanitize(phrase, protected_terms, SanitizeOptions{.keep_numbers = true});
  return text::join(text::split_whitespace(clean), " ");
}

struct Document {
  std::int64_t proposal_id = 0;
  std::string raw_text;
  std::string clean_text;
  std::vector<Sentence> sentences;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const Sentence& s : sentences) n += s.size();
    return n;
  }
};

inline Document make_document(std::int64_t proposal_id, std::string raw_text,
                              const CuratedTermList& protected_terms = {}) {
  Document doc;
  doc.proposal_id = proposal_id;
  doc.clean_text = sanitize(raw_text, protected_terms);
  doc.raw_text = std::move(raw_text);
  doc.sentences = segment(doc.clean_text);
  return doc;
}

/// Builds a document from already-sanitized text.
inline Document document_from_clean(std::int64_t proposal_id, std::string clean_text,
                                    std::string raw_text = {}) {
  Document doc;
  doc.proposal_id = proposal_id;
  doc.raw_text = std::move(raw_text);
  doc.clean_text = std::move(clean_text);
  doc.sentences = segment(doc.clean_text);
  return doc;
}

}  // namespace autolabel

#endif  // AUTOLABEL_TEXTPREP_HPP_
