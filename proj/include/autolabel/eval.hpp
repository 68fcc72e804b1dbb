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

#ifndef AUTOLABEL_EVAL_HPP_
#define AUTOLABEL_EVAL_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "autolabel/error.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/yake.hpp"

namespace autolabel {

struct EvalMetrics {
  std::size_t n = 0;  // cutoff
  std::size_t matched = 0;
  std::size_t extracted = 0;
  std::size_t labels = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  bool evaluable = true;  // false when the document has no labels
  std::size_t documents = 1;  // evaluable documents behind an average
};

struct MatchResult {
  std::size_t matched = 0;
  std::size_t extracted = 0;  // distinct stemmed keywords
  std::vector<std::string> pairs;  // stemmed strings found on both sides
};

/// Exact match on stemmed strings; duplicates on either side count once.
inline MatchResult exact_match(const std::vector<Keyword>& keywords, const LabelSet& labels) {
  std::set<std::string> kw;
  for (const Keyword& k : keywords) kw.insert(k.stemmed);
  std::set<std::string> lab;
  for (const Label& l : labels.labels) lab.insert(l.stemmed);
  MatchResult r;
  r.extracted = kw.size();
  std::set_intersection(kw.begin(), kw.end(), lab.begin(), lab.end(),
                        std::back_inserter(r.pairs));
  r.matched = r.pairs.size();
  return r;
}

/// Precision = matched / extracted, recall = matched / labels, F1 their
/// harmonic mean (0 when either is 0). A document without labels is marked
/// not evaluable.
inline EvalMetrics compute_metrics(std::size_t matched, std::size_t extracted,
                                   std::size_t labels, std::size_t n) {
  if (matched > extracted || matched > labels)
    throw Error("matched count exceeds extracted or label count");
  EvalMetrics m;
  m.n = n;
  m.matched = matched;
  m.extracted = extracted;
  m.labels = labels;
  if (labels == 0) {
    m.evaluable = false;
    m.documents = 0;
    return m;
  }
  m.precision = extracted == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(extracted);
  m.recall = static_cast<double>(matched) / static_cast<double>(labels);
  m.f1 = (m.precision == 0.0 || m.recall == 0.0)
             ? 0.0
             : 2.0 / (1.0 / m.recall + 1.0 / m.precision);
  return m;
}

/// Evaluates the first `n` keywords of a ranked list.
inline EvalMetrics evaluate_at(const std::vector<Keyword>& ranked, const LabelSet& labels,
                               std::size_t n) {
  const std::vector<Keyword> top(ranked.begin(),
                                 ranked.begin() + static_cast<std::ptrdiff_t>(
                                                      std::min(n, ranked.size())));
  const MatchResult r = exact_match(top, labels);
  return compute_metrics(r.matched, r.extracted, labels.size(), n);
}

/// Unweighted mean of P, R and F1 over evaluable documents; counts are summed.
inline EvalMetrics macro_average(const std::vector<EvalMetrics>& per_document) {
  EvalMetrics avg;
  avg.documents = 0;
  double p = 0, r = 0, f = 0;
  for (const EvalMetrics& m : per_document) {
    if (!m.evaluable) continue;
    avg.n = m.n;
    avg.matched += m.matched;
    avg.extracted += m.extracted;
    avg.labels += m.labels;
    p += m.precision;
    r += m.recall;
    f += m.f1;
    ++avg.documents;
  }
  if (avg.documents == 0) throw Error("no evaluable documents to average");
  const double d = static_cast<double>(avg.documents);
  avg.precision = p / d;
  avg.recall = r / d;
  avg.f1 = f / d;
  return avg;
}

inline Json to_json(const EvalMetrics& m) {
  return {{"cutoff", m.n},         {"precision", m.precision}, {"recall", m.recall},
          {"f1", m.f1},            {"matched", m.matched},     {"extracted", m.extracted},
          {"labels", m.labels},    {"documents", m.documents}};
}

}  // namespace autolabel

#endif  // AUTOLABEL_EVAL_HPP_
