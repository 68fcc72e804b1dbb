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

// Brute-force reference implementations used only by tests. They are
// written straight from the formulas, favouring obviousness over speed, and
// share nothing with the library beyond tokenized input.

#ifndef AUTOLABEL_TESTS_SUPPORT_ORACLES_HPP_
#define AUTOLABEL_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "autolabel/ontoannot.hpp"
#include "autolabel/textprep.hpp"
#include "autolabel/yake.hpp"

namespace oracle {

using autolabel::DedupMethod;
using autolabel::Document;

// ---------------------------------------------------------------------------
// String similarity (ASCII inputs).

inline double levenshtein(const std::string& a, const std::string& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return 1.0 - static_cast<double>(d[a.size()][b.size()]) /
                   static_cast<double>(std::max(a.size(), b.size()));
}

// Longest common block, earliest start in a, then in b; matched characters
// counted recursively on both sides.
inline std::size_t blocks(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty()) return 0;
  std::size_t bi = 0, bj = 0, bk = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = 0;
      while (i + k < a.size() && j + k < b.size() && a[i + k] == b[j + k]) ++k;
      if (k > bk) {
        bi = i;
        bj = j;
        bk = k;
      }
    }
  if (bk == 0) return 0;
  return bk + blocks(a.substr(0, bi), b.substr(0, bj)) +
         blocks(a.substr(bi + bk), b.substr(bj + bk));
}

inline double sequence_matcher(const std::string& a, const std::string& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  return 2.0 * static_cast<double>(blocks(a, b)) / static_cast<double>(a.size() + b.size());
}

inline double jaro(const std::string& s1, const std::string& s2) {
  if (s1.empty() && s2.empty()) return 1.0;
  if (s1.empty() || s2.empty()) return 0.0;
  const int range = std::max(0, static_cast<int>(std::max(s1.size(), s2.size())) / 2 - 1);
  std::vector<int> m1(s1.size(), 0), m2(s2.size(), 0);
  int m = 0;
  for (int i = 0; i < static_cast<int>(s1.size()); ++i) {
    for (int j = std::max(0, i - range);
         j <= std::min(static_cast<int>(s2.size()) - 1, i + range); ++j) {
      if (!m2[static_cast<std::size_t>(j)] && s1[static_cast<std::size_t>(i)] ==
                                                  s2[static_cast<std::size_t>(j)]) {
        m1[static_cast<std::size_t>(i)] = m2[static_cast<std::size_t>(j)] = 1;
        ++m;
        break;
      }
    }
  }
  if (m == 0) return 0.0;
  std::string a, b;
  for (std::size_t i = 0; i < s1.size(); ++i)
    if (m1[i]) a.push_back(s1[i]);
  for (std::size_t j = 0; j < s2.size(); ++j)
    if (m2[j]) b.push_back(s2[j]);
  int t = 0;
  for (std::size_t k = 0; k < a.size(); ++k) t += a[k] != b[k];
  t /= 2;
  return (static_cast<double>(m) / static_cast<double>(s1.size()) +
          static_cast<double>(m) / static_cast<double>(s2.size()) +
          static_cast<double>(m - t) / static_cast<double>(m)) /
         3.0;
}

inline double jaro_winkler(const std::string& a, const std::string& b) {
  const double j = jaro(a, b);
  if (j <= 0.7) return j;
  int l = 0;
  while (l < 4 && l < static_cast<int>(std::min(a.size(), b.size())) &&
         a[static_cast<std::size_t>(l)] == b[static_cast<std::size_t>(l)])
    ++l;
  return j + 0.1 * l * (1.0 - j);
}

inline double similarity(const std::string& a, const std::string& b, DedupMethod m) {
  switch (m) {
    case DedupMethod::kLevenshtein: return levenshtein(a, b);
    case DedupMethod::kSequenceMatcher: return sequence_matcher(a, b);
    case DedupMethod::kJaroWinkler: return jaro_winkler(a, b);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Keyphrase extraction.

struct Word {
  std::string surface, lower;
  int sentence, position, offset;
};

inline bool alphabetic(const std::string& s) {
  static const std::regex re("^[A-Za-z]+(-[A-Za-z]+)*$");
  return std::regex_match(s, re);
}

inline bool upper(char c) { return c >= 'A' && c <= 'Z'; }

struct Scored {
  std::string phrase;
  double score;
  int first;
};

// Flattens a document to word records so nothing of the library's feature
// code is reused.
inline std::vector<std::vector<Word>> words_of(const Document& doc) {
  std::vector<std::vector<Word>> out;
  int offset = 0;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    std::vector<Word> sent;
    for (std::size_t p = 0; p < doc.sentences[s].size(); ++p) {
      const std::string& surface = doc.sentences[s][p].surface;
      std::string lower = surface;
      for (char& c : lower)
        if (upper(c)) c = static_cast<char>(c - 'A' + 'a');
      sent.push_back({surface, lower, static_cast<int>(s), static_cast<int>(p), offset++});
    }
    out.push_back(sent);
  }
  return out;
}

inline std::map<std::string, double> term_scores(const Document& doc, int window,
                                                 const std::set<std::string>& stop) {
  const auto sents = words_of(doc);
  auto content = [&](const Word& w) { return alphabetic(w.lower) && !stop.count(w.lower); };
  std::set<std::string> vocab;
  for (const auto& s : sents)
    for (const Word& w : s)
      if (content(w)) vocab.insert(w.lower);
  std::map<std::string, double> score;
  if (vocab.empty()) return score;

  std::map<std::string, int> tf;
  for (const auto& s : sents)
    for (const Word& w : s)
      if (content(w)) ++tf[w.lower];
  double mean = 0;
  int max_tf = 0;
  for (const auto& [w, c] : tf) {
    mean += c;
    max_tf = std::max(max_tf, c);
  }
  mean /= static_cast<double>(tf.size());
  double sq = 0;
  for (const auto& [w, c] : tf) sq += (c - mean) * (c - mean);
  const double stdev = std::sqrt(sq / static_cast<double>(tf.size()));

  for (const std::string& term : vocab) {
    int n_upper = 0, n_proper = 0;
    std::vector<int> sids;
    std::vector<std::string> left, right;
    for (const auto& s : sents) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Word& w = s[i];
        if (w.lower != term || !content(w)) continue;
        const bool caps = std::all_of(w.surface.begin(), w.surface.end(),
                                      [](char c) { return upper(c) || c == '-'; });
        if (caps)
          ++n_upper;
        else if (w.position > 0 && upper(w.surface[0]))
          ++n_proper;
        if (std::find(sids.begin(), sids.end(), w.sentence) == sids.end())
          sids.push_back(w.sentence);
        for (int k = 1; k <= window; ++k) {
          if (static_cast<int>(i) - k >= 0) left.push_back(s[i - static_cast<std::size_t>(k)].lower);
          if (i + static_cast<std::size_t>(k) < s.size()) right.push_back(s[i + static_cast<std::size_t>(k)].lower);
        }
      }
    }
    std::sort(sids.begin(), sids.end());
    const std::size_t n = sids.size();
    const double median =
        n % 2 ? sids[n / 2] : (static_cast<double>(sids[n / 2 - 1]) + sids[n / 2]) / 2.0;
    auto spread = [](const std::vector<std::string>& v) {
      if (v.empty()) return 0.0;
      return static_cast<double>(std::set<std::string>(v.begin(), v.end()).size()) /
             static_cast<double>(v.size());
    };
    const double t = tf[term];
    const double cas = std::max(n_upper, n_proper) / (1.0 + std::log(t));
    const double pos = std::log(std::log(3.0 + median));
    const double freq = t / (mean + stdev);
    const double rel = 1.0 + (spread(left) + spread(right)) * t / max_tf;
    const double dif = static_cast<double>(n) / static_cast<double>(sents.size());
    score[term] = (rel * pos) / (cas + freq / rel + dif / rel);
  }
  return score;
}

inline std::vector<Scored> ranked(const Document& doc, int ngram, int window,
                                  const std::set<std::string>& stop) {
  const auto sents = words_of(doc);
  const auto s_w = term_scores(doc, window, stop);
  std::map<std::string, std::pair<int, int>> cands;  // phrase -> (tf, first)
  std::map<std::string, std::vector<std::string>> parts;
  for (const auto& s : sents)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (int len = 1; len <= ngram && i + static_cast<std::size_t>(len) <= s.size(); ++len) {
        bool ok = true;
        std::string phrase;
        std::vector<std::string> ws;
        for (int k = 0; k < len; ++k) {
          const Word& w = s[i + static_cast<std::size_t>(k)];
          ok = ok && alphabetic(w.lower) && !stop.count(w.lower);
          phrase += (k ? " " : "") + w.lower;
          ws.push_back(w.lower);
        }
        if (!ok) continue;
        auto [it, fresh] = cands.emplace(phrase, std::make_pair(0, s[i].offset));
        ++it->second.first;
        parts[phrase] = ws;
      }
  std::vector<Scored> out;
  for (const auto& [phrase, tf_first] : cands) {
    double prod = 1, sum = 0;
    for (const std::string& w : parts[phrase]) {
      prod *= s_w.at(w);
      sum += s_w.at(w);
    }
    out.push_back({phrase, prod / (tf_first.first * (1.0 + sum)), tf_first.second});
  }
  std::sort(out.begin(), out.end(), [](const Scored& a, const Scored& b) {
    return std::tie(a.score, a.first, a.phrase) < std::tie(b.score, b.first, b.phrase);
  });
  return out;
}

inline std::vector<Scored> extract(const Document& doc, const autolabel::YakeConfig& c,
                                   const std::set<std::string>& stop) {
  std::vector<Scored> kept;
  for (const Scored& s : ranked(doc, c.ngram, c.window, stop)) {
    if (kept.size() == c.top_n) break;
    if (std::all_of(kept.begin(), kept.end(), [&](const Scored& k) {
          return similarity(s.phrase, k.phrase, c.dedup_method) < c.dedup_threshold;
        }))
      kept.push_back(s);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Dictionary matching: try every start left to right and every length from
// the longest down; accept the first hit and jump past it.

struct Span {
  std::size_t sentence, begin, end;
  std::string stemmed;
  friend bool operator==(const Span&, const Span&) = default;
};

inline std::vector<Span> naive_annotate(const Document& doc,
                                        const std::set<std::vector<std::string>>& entries) {
  std::size_t longest = 0;
  for (const auto& e : entries) longest = std::max(longest, e.size());
  std::vector<Span> out;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sent = doc.sentences[s];
    std::size_t i = 0;
    while (i < sent.size()) {
      std::size_t hit = 0;
      for (std::size_t len = std::min(longest, sent.size() - i); len >= 1; --len) {
        std::vector<std::string> window;
        for (std::size_t k = i; k < i + len; ++k) window.push_back(sent[k].stem);
        if (entries.count(window)) {
          hit = len;
          std::string joined;
          for (const std::string& w : window) joined += (joined.empty() ? "" : " ") + w;
          out.push_back({s, i, i + len, joined});
          break;
        }
      }
      i += hit ? hit : 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Metrics by direct counting.

struct Prf {
  double p, r, f;
};

inline Prf brute_prf(const std::vector<std::string>& extracted_stems,
                     const std::vector<std::string>& label_stems, std::size_t n) {
  std::vector<std::string> top(extracted_stems.begin(),
                               extracted_stems.begin() +
                                   static_cast<std::ptrdiff_t>(std::min(n, extracted_stems.size())));
  std::set<std::string> e(top.begin(), top.end()), l(label_stems.begin(), label_stems.end());
  double hits = 0;
  for (const std::string& x : e) hits += l.count(x);
  const double p = e.empty() ? 0 : hits / static_cast<double>(e.size());
  const double r = l.empty() ? 0 : hits / static_cast<double>(l.size());
  const double f = p + r == 0 ? 0 : 2 * p * r / (p + r);
  return {p, r, f};
}

}  // namespace oracle

#endif  // AUTOLABEL_TESTS_SUPPORT_ORACLES_HPP_
