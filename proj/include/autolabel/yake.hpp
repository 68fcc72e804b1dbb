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

// Statistical keyphrase extraction in the style of YAKE. Every content word
// gets a score from five local features (casing, position, frequency,
// context relatedness, sentence spread); candidate n-grams combine their word
// scores; near-duplicate candidates are removed greedily. Lower is better.
//
// Word features, for a content word w with tf occurrences:
//   Cas  = max(tf_upper, tf_proper) / (1 + ln tf)
//   Pos  = ln(ln(3 + median of the sentence ids containing w))
//   Freq = tf / (mean_tf + stdev_tf)            over all content words
//   Rel  = 1 + (DL + DR) * tf / max_tf
//   Dif  = |sentences containing w| / total sentences
//   S(w) = Rel * Pos / (Cas + Freq / Rel + Dif / Rel)
// where DL (DR) is distinct / total tokens seen within `window` positions to
// the left (right) of w inside its sentence, 0 without any. A candidate scores
//   S(kw) = prod S(w) / (tf(kw) * (1 + sum S(w))).

#ifndef AUTOLABEL_YAKE_HPP_
#define AUTOLABEL_YAKE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "autolabel/error.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/similarity.hpp"
#include "autolabel/textprep.hpp"

namespace autolabel {

inline const StopwordList& default_stopwords() {
  static const StopwordList list = StopwordList::defaults();
  return list;
}

struct YakeConfig {
  int ngram = 1;
  int window = 1;
  DedupMethod dedup_method = DedupMethod::kSequenceMatcher;
  double dedup_threshold = 0.9;
  std::size_t top_n = 10;

  void validate() const {
    if (ngram < 1 || ngram > 3) throw ConfigError("ngram must be 1, 2 or 3");
    if (window < 1 || window > 3) throw ConfigError("window must be 1, 2 or 3");
    if (!(dedup_threshold > 0.0 && dedup_threshold <= 1.0))
      throw ConfigError("dedup_threshold must be in (0, 1]");
    if (top_n == 0) throw ConfigError("top_n must be positive");
  }

  friend bool operator==(const YakeConfig&, const YakeConfig&) = default;
};

struct TermFeatures {
  std::size_t tf = 0;
  std::size_t tf_upper = 0;
  std::size_t tf_proper = 0;
  std::set<std::uint32_t> sentence_ids;
  std::map<std::string, std::size_t> left;   // neighbor -> co-occurrences
  std::map<std::string, std::size_t> right;
  double cas = 0, pos = 0, freq = 0, rel = 0, dif = 0, score = 0;
};

namespace detail {

inline bool is_content_word(const Token& t, const StopwordList& stopwords) {
  return text::is_alphabetic_token(t.lower) && !stopwords.contains(t.lower);
}

inline bool has_letter(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

inline bool all_caps(std::string_view s) {
  return has_letter(s) && std::none_of(s.begin(), s.end(),
                                       [](char c) { return c >= 'a' && c <= 'z'; });
}

inline double median(const std::set<std::uint32_t>& ids) {
  std::vector<std::uint32_t> v(ids.begin(), ids.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return static_cast<double>(v[n / 2]);
  return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
}

inline double diversity(const std::map<std::string, std::size_t>& neighbors) {
  std::size_t total = 0;
  for (const auto& [w, c] : neighbors) total += c;
  return total == 0 ? 0.0
                    : static_cast<double>(neighbors.size()) / static_cast<double>(total);
}

}  // namespace detail

/// Features and score for every content word of `doc` (lowercase key).
/// Stopwords and non-alphabetic tokens get no entry but count as neighbors.
inline std::map<std::string, TermFeatures> compute_term_features(
    const Document& doc, int window, const StopwordList& stopwords = default_stopwords()) {
  std::map<std::string, TermFeatures> features;
  for (const Sentence& sentence : doc.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const Token& t = sentence[i];
      if (!detail::is_content_word(t, stopwords)) continue;
      TermFeatures& f = features[t.lower];
      ++f.tf;
      if (detail::all_caps(t.surface)) {
        ++f.tf_upper;
      } else if (i > 0 && t.surface[0] >= 'A' && t.surface[0] <= 'Z') {
        ++f.tf_proper;
      }
      f.sentence_ids.insert(t.sentence);
      const std::size_t w = static_cast<std::size_t>(window);
      for (std::size_t k = i > w ? i - w : 0; k < i; ++k) ++f.left[sentence[k].lower];
      for (std::size_t k = i + 1; k <= i + w && k < sentence.size(); ++k)
        ++f.right[sentence[k].lower];
    }
  }
  if (features.empty()) return features;

  const double n = static_cast<double>(features.size());
  double sum = 0;
  std::size_t max_tf = 0;
  for (const auto& [word, f] : features) {
    sum += static_cast<double>(f.tf);
    max_tf = std::max(max_tf, f.tf);
  }
  const double mean = sum / n;
  double var = 0;
  for (const auto& [word, f] : features) {
    const double d = static_cast<double>(f.tf) - mean;
    var += d * d;
  }
  const double stdev = std::sqrt(var / n);
  const double total_sentences = static_cast<double>(doc.sentences.size());

  for (auto& [word, f] : features) {
    const double tf = static_cast<double>(f.tf);
    f.cas = static_cast<double>(std::max(f.tf_upper, f.tf_proper)) / (1.0 + std::log(tf));
    f.pos = std::log(std::log(3.0 + detail::median(f.sentence_ids)));
    f.freq = tf / (mean + stdev);
    f.rel = 1.0 + (detail::diversity(f.left) + detail::diversity(f.right)) * tf /
                      static_cast<double>(max_tf);
    f.dif = static_cast<double>(f.sentence_ids.size()) / total_sentences;
    f.score = (f.rel * f.pos) / (f.cas + f.freq / f.rel + f.dif / f.rel);
  }
  return features;
}

struct Candidate {
  std::string phrase;  // lowercase words joined by single spaces
  std::vector<std::string> words;
  std::size_t tf = 0;
  std::uint32_t first_offset = 0;  // document token offset of first occurrence
};

/// Every contiguous run of 1..ngram content words inside a sentence, in order
/// of first occurrence. A run containing a stopword or a non-alphabetic token
/// is not a candidate.
inline std::vector<Candidate> generate_candidates(const Document& doc, int ngram,
                                                  const StopwordList& stopwords =
                                                      default_stopwords()) {
  if (ngram < 1 || ngram > 3) throw ConfigError("ngram must be 1, 2 or 3");
  std::vector<Candidate> candidates;
  std::unordered_map<std::string, std::size_t> index;
  for (const Sentence& sentence : doc.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      std::string phrase;
      for (std::size_t len = 1; len <= static_cast<std::size_t>(ngram) &&
                                i + len <= sentence.size();
           ++len) {
        const Token& t = sentence[i + len - 1];
        if (!detail::is_content_word(t, stopwords)) break;
        if (len > 1) phrase.push_back(' ');
        phrase += t.lower;
        auto [it, inserted] = index.emplace(phrase, candidates.size());
        if (inserted) {
          Candidate c;
          c.phrase = phrase;
          for (std::size_t k = i; k < i + len; ++k) c.words.push_back(sentence[k].lower);
          c.first_offset = sentence[i].offset;
          candidates.push_back(std::move(c));
        }
        ++candidates[it->second].tf;
      }
    }
  }
  return candidates;
}

struct ScoredCandidate {
  Candidate candidate;
  double score = 0;
};

/// Scores candidates and sorts ascending; ties go to the earlier first
/// occurrence, then to the lexicographically smaller phrase.
inline std::vector<ScoredCandidate> score_candidates(
    const std::vector<Candidate>& candidates,
    const std::map<std::string, TermFeatures>& features) {
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    double prod = 1.0, sum = 0.0;
    for (const std::string& w : c.words) {
      auto it = features.find(w);
      if (it == features.end()) throw Error("no term score for '" + w + "'");
      prod *= it->second.score;
      sum += it->second.score;
    }
    scored.push_back({c, prod / (static_cast<double>(c.tf) * (1.0 + sum))});
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.candidate.first_offset != b.candidate.first_offset)
      return a.candidate.first_offset < b.candidate.first_offset;
    return a.candidate.phrase < b.candidate.phrase;
  });
  return scored;
}

struct Keyword {
  std::string surface;
  std::string stemmed;
  double score = 0;
  std::size_t rank = 0;  // 1-based

  friend bool operator==(const Keyword&, const Keyword&) = default;
};

/// Walks `scored` best first, keeping a candidate only when its similarity to
/// every kept one is below `threshold`; stops after `top_n` kept.
inline std::vector<Keyword> deduplicate_and_take(const std::vector<ScoredCandidate>& scored,
                                                 DedupMethod method, double threshold,
                                                 std::size_t top_n) {
  std::vector<Keyword> kept;
  for (const ScoredCandidate& s : scored) {
    if (kept.size() >= top_n) break;
    bool distinct = true;
    for (const Keyword& k : kept) {
      if (similarity(s.candidate.phrase, k.surface, method) >= threshold) {
        distinct = false;
        break;
      }
    }
    if (!distinct) continue;
    kept.push_back({s.candidate.phrase, stem_phrase(s.candidate.phrase), s.score,
                    kept.size() + 1});
  }
  return kept;
}

/// Scored candidate list for one (ngram, window) setting; the dedup step is
/// separate so parameter sweeps can reuse it.
inline std::vector<ScoredCandidate> rank_candidates(const Document& doc, int ngram, int window,
                                                    const StopwordList& stopwords =
                                                        default_stopwords()) {
  return score_candidates(generate_candidates(doc, ngram, stopwords),
                          compute_term_features(doc, window, stopwords));
}

inline std::vector<Keyword> extract(const Document& doc, const YakeConfig& config,
                                    const StopwordList& stopwords = default_stopwords()) {
  config.validate();
  return deduplicate_and_take(rank_candidates(doc, config.ngram, config.window, stopwords),
                              config.dedup_method, config.dedup_threshold, config.top_n);
}

inline Json to_json(const Keyword& k) {
  return {{"surface", k.surface}, {"stemmed", k.stemmed}, {"score", k.score}, {"rank", k.rank}};
}

inline Keyword keyword_from_json(const Json& j) {
  return {j.at("surface").get<std::string>(), j.at("stemmed").get<std::string>(),
          j.at("score").get<double>(), j.at("rank").get<std::size_t>()};
}

inline Json to_json(const YakeConfig& c) {
  return {{"ngram", c.ngram},
          {"window", c.window},
          {"dedup_method", to_string(c.dedup_method)},
          {"dedup_threshold", c.dedup_threshold},
          {"top_n", c.top_n}};
}

}  // namespace autolabel

#endif  // AUTOLABEL_YAKE_HPP_
