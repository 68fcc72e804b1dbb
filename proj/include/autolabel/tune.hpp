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

#ifndef AUTOLABEL_TUNE_HPP_
#define AUTOLABEL_TUNE_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <vector>

#include "autolabel/error.hpp"
#include "autolabel/eval.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/yake.hpp"

namespace autolabel {

struct SweepSpace {
  std::vector<int> ngrams = {1, 2, 3};
  std::vector<int> windows = {1, 2, 3};
  std::vector<DedupMethod> methods = {DedupMethod::kLevenshtein,
                                      DedupMethod::kSequenceMatcher,
                                      DedupMethod::kJaroWinkler};
  std::vector<double> thresholds = {0.6, 0.7, 0.8, 0.9, 0.95};
};

/// Cartesian product of the space: ngram-major, then window, method,
/// threshold.
inline std::vector<YakeConfig> grid(const SweepSpace& space, std::size_t top_n = 10) {
  if (space.ngrams.empty() || space.windows.empty() || space.methods.empty() ||
      space.thresholds.empty())
    throw ConfigError("every sweep parameter needs at least one value");
  std::vector<YakeConfig> configs;
  for (int n : space.ngrams)
    for (int w : space.windows)
      for (DedupMethod m : space.methods)
        for (double t : space.thresholds) {
          YakeConfig c{n, w, m, t, top_n};
          c.validate();
          configs.push_back(c);
        }
  return configs;
}

struct LeaderboardEntry {
  YakeConfig config;
  EvalMetrics metrics;
};

struct SweepResult {
  std::size_t cutoff = 0;
  std::vector<LeaderboardEntry> leaderboard;  // grid order
  std::size_t best_index = 0;
  bool tie_break_applied = false;

  const LeaderboardEntry& best() const { return leaderboard.at(best_index); }
};

namespace detail {

// Preference among configs with equal F1: smaller ngram, window, method enum,
// threshold.
inline auto config_key(const YakeConfig& c) {
  return std::make_tuple(c.ngram, c.window, static_cast<int>(c.dedup_method), c.dedup_threshold);
}

inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

inline void select_best(SweepResult& result) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.leaderboard.size(); ++i) {
    const auto& cand = result.leaderboard[i];
    const auto& cur = result.leaderboard[best];
    if (cand.metrics.f1 > cur.metrics.f1 ||
        (cand.metrics.f1 == cur.metrics.f1 && config_key(cand.config) < config_key(cur.config)))
      best = i;
  }
  result.best_index = best;
  const double f1 = result.leaderboard[best].metrics.f1;
  result.tie_break_applied =
      std::count_if(result.leaderboard.begin(), result.leaderboard.end(),
                    [&](const LeaderboardEntry& e) { return e.metrics.f1 == f1; }) > 1;
}

}  // namespace detail

/// Exhaustive grid search, one SweepResult per cutoff. Only documents with a
/// label set take part; documents whose set is empty drop out of the averages.
/// Cells may run on `threads` workers; results are merged in grid order.
inline std::vector<SweepResult> sweep_cutoffs(const std::vector<Document>& docs,
                                              const std::map<ProposalId, LabelSet>& labels,
                                              const SweepSpace& space,
                                              const std::vector<std::size_t>& cutoffs,
                                              const StopwordList& stopwords = default_stopwords(),
                                              unsigned threads = 1) {
  if (cutoffs.empty()) throw ConfigError("no cutoffs to sweep");
  for (std::size_t n : cutoffs)
    if (n == 0) throw ConfigError("cutoffs must be positive");
  const std::vector<YakeConfig> configs = grid(space);

  std::vector<const Document*> used;
  std::vector<const LabelSet*> used_labels;
  for (const Document& d : docs) {
    auto it = labels.find(d.proposal_id);
    if (it == labels.end()) continue;
    used.push_back(&d);
    used_labels.push_back(&it->second);
  }

  // Candidate rankings depend only on (ngram, window); compute each once.
  std::vector<std::pair<int, int>> settings;
  for (const YakeConfig& c : configs)
    if (std::find(settings.begin(), settings.end(), std::make_pair(c.ngram, c.window)) ==
        settings.end())
      settings.emplace_back(c.ngram, c.window);
  std::vector<std::vector<std::vector<ScoredCandidate>>> ranked(
      settings.size(), std::vector<std::vector<ScoredCandidate>>(used.size()));
  detail::parallel_for(settings.size() * used.size(), threads, [&](std::size_t k) {
    const std::size_t s = k / used.size(), d = k % used.size();
    ranked[s][d] = rank_candidates(*used[d], settings[s].first, settings[s].second, stopwords);
  });

  const std::size_t max_n = *std::max_element(cutoffs.begin(), cutoffs.end());
  std::vector<SweepResult> results(cutoffs.size());
  for (std::size_t c = 0; c < cutoffs.size(); ++c) {
    results[c].cutoff = cutoffs[c];
    results[c].leaderboard.resize(configs.size());
  }
  detail::parallel_for(configs.size(), threads, [&](std::size_t i) {
    const YakeConfig& cfg = configs[i];
    const std::size_t s = static_cast<std::size_t>(
        std::find(settings.begin(), settings.end(), std::make_pair(cfg.ngram, cfg.window)) -
        settings.begin());
    std::vector<std::vector<EvalMetrics>> per_doc(cutoffs.size());
    for (std::size_t d = 0; d < used.size(); ++d) {
      // Dedup is greedy in rank order, so the top-n list is a prefix of the
      // top-max_n list.
      const std::vector<Keyword> kws =
          deduplicate_and_take(ranked[s][d], cfg.dedup_method, cfg.dedup_threshold, max_n);
      for (std::size_t c = 0; c < cutoffs.size(); ++c)
        per_doc[c].push_back(evaluate_at(kws, *used_labels[d], cutoffs[c]));
    }
    for (std::size_t c = 0; c < cutoffs.size(); ++c) {
      YakeConfig with_n = cfg;
      with_n.top_n = cutoffs[c];
      results[c].leaderboard[i] = {with_n, macro_average(per_doc[c])};
    }
  });
  for (SweepResult& r : results) detail::select_best(r);
  return results;
}

inline SweepResult sweep(const std::vector<Document>& docs,
                         const std::map<ProposalId, LabelSet>& labels, const SweepSpace& space,
                         std::size_t cutoff, const StopwordList& stopwords = default_stopwords(),
                         unsigned threads = 1) {
  return sweep_cutoffs(docs, labels, space, {cutoff}, stopwords, threads).front();
}

}  // namespace autolabel

#endif  // AUTOLABEL_TUNE_HPP_
