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

// Ontology-derived labels. Term lists exported from ontologies are pruned by
// branch, matched against the stemmed tokens of each document, filtered for
// short words, and finally thresholded by corpus document frequency.

#ifndef AUTOLABEL_ONTOANNOT_HPP_
#define AUTOLABEL_ONTOANNOT_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autolabel/corpus.hpp"
#include "autolabel/error.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/textprep.hpp"

namespace autolabel {

struct OntologyTerm {
  std::string surface;
  std::string curie;
  std::string ontology;
  std::string branch;

  friend bool operator==(const OntologyTerm&, const OntologyTerm&) = default;
};

/// Ontology name -> branches to keep. An ontology that is absent, or listed
/// with no branches, contributes nothing; the branch "*" keeps every branch.
class BranchAllowlist {
 public:
  BranchAllowlist() = default;
  explicit BranchAllowlist(std::map<std::string, std::set<std::string>> allowed)
      : allowed_(std::move(allowed)) {}

  void allow(const std::string& ontology, const std::string& branch) {
    allowed_[ontology].insert(branch);
  }
  void exclude(const std::string& ontology) { allowed_[ontology].clear(); }

  bool allows(const std::string& ontology, const std::string& branch) const {
    auto it = allowed_.find(ontology);
    if (it == allowed_.end()) return false;
    return it->second.count("*") > 0 || it->second.count(branch) > 0;
  }

  const std::map<std::string, std::set<std::string>>& entries() const { return allowed_; }

 private:
  std::map<std::string, std::set<std::string>> allowed_;
};

/// Exact multi-word index over stemmed term token sequences (a token trie).
class TermDictionary {
 public:
  struct Entry {
    std::vector<std::string> stems;
    std::vector<OntologyTerm> terms;  // every allowed term with these stems
  };

  /// Indexes the allowed subset of `terms`. Terms whose surface normalizes to
  /// nothing are ignored.
  static TermDictionary build(const std::vector<OntologyTerm>& terms,
                              const BranchAllowlist& allowlist,
                              const CuratedTermList& protected_terms = {}) {
    TermDictionary dict;
    dict.nodes_.emplace_back();
    for (const OntologyTerm& t : terms) {
      if (!allowlist.allows(t.ontology, t.branch)) {
        ++dict.pruned_;
        continue;
      }
      std::vector<std::string> stems =
          text::split_whitespace(stem_phrase(normalize_phrase(t.surface, protected_terms)));
      if (stems.empty()) continue;
      std::size_t node = 0;
      for (const std::string& s : stems) {
        auto it = dict.nodes_[node].next.find(s);
        if (it == dict.nodes_[node].next.end()) {
          dict.nodes_.emplace_back();
          it = dict.nodes_[node].next.emplace(s, dict.nodes_.size() - 1).first;
        }
        node = it->second;
      }
      if (dict.nodes_[node].entry < 0) {
        dict.nodes_[node].entry = static_cast<int>(dict.entries_.size());
        dict.entries_.push_back({std::move(stems), {}});
      }
      dict.entries_[static_cast<std::size_t>(dict.nodes_[node].entry)].terms.push_back(t);
      dict.max_length_ = std::max(
          dict.max_length_,
          dict.entries_[static_cast<std::size_t>(dict.nodes_[node].entry)].stems.size());
    }
    return dict;
  }

  /// Length of the longest entry that prefixes `stems[begin..end)`, with the
  /// entry index; length 0 when none.
  std::pair<std::size_t, int> longest_prefix(const std::vector<std::string>& stems,
                                             std::size_t begin, std::size_t end) const {
    std::size_t node = 0;
    std::pair<std::size_t, int> best{0, -1};
    for (std::size_t i = begin; i < end; ++i) {
      auto it = nodes_[node].next.find(stems[i]);
      if (it == nodes_[node].next.end()) break;
      node = it->second;
      if (nodes_[node].entry >= 0) best = {i - begin + 1, nodes_[node].entry};
    }
    return best;
  }

  const Entry& entry(int index) const { return entries_.at(static_cast<std::size_t>(index)); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t pruned() const { return pruned_; }
  std::size_t max_length() const { return max_length_; }

 private:
  struct Node {
    std::map<std::string, std::size_t, std::less<>> next;
    int entry = -1;
  };
  std::vector<Node> nodes_;
  std::vector<Entry> entries_;
  std::size_t pruned_ = 0;
  std::size_t max_length_ = 0;
};

struct DictionaryLoad {
  TermDictionary dictionary;
  std::size_t rows = 0;
  std::size_t malformed = 0;
};

/// Reads tab-separated `surface, curie, ontology, branch` rows from every
/// file; "#" lines are comments. Rows outside the allowlist are pruned before
/// indexing. Throws ConfigError when nothing survives.
inline DictionaryLoad load_dictionary(const std::vector<std::filesystem::path>& paths,
                                      const BranchAllowlist& allowlist,
                                      const CuratedTermList& protected_terms = {}) {
  std::vector<OntologyTerm> terms;
  DictionaryLoad load;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw MissingFileError(path.string());
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
      ++load.rows;
      std::vector<std::string> cols;
      std::size_t start = 0;
      while (true) {
        const std::size_t tab = line.find('\t', start);
        cols.emplace_back(text::trim(std::string_view(line).substr(start, tab - start)));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      if (cols.size() != 4 || cols[0].empty() || cols[1].empty() || cols[2].empty()) {
        ++load.malformed;
        continue;
      }
      terms.push_back({cols[0], cols[1], cols[2], cols[3]});
    }
  }
  load.dictionary = TermDictionary::build(terms, allowlist, protected_terms);
  if (load.dictionary.empty())
    throw ConfigError("term dictionary is empty after branch pruning");
  return load;
}

inline DictionaryLoad load_dictionary(const std::filesystem::path& path,
                                      const BranchAllowlist& allowlist,
                                      const CuratedTermList& protected_terms = {}) {
  return load_dictionary(std::vector<std::filesystem::path>{path}, allowlist, protected_terms);
}

struct MatchedTerm {
  OntologyTerm term;  // first dictionary term with the matched stems
  std::string surface_in_doc;
  std::string stemmed;
  std::uint32_t sentence = 0;
  std::uint32_t begin = 0;  // token span [begin, end) within the sentence
  std::uint32_t end = 0;
};

/// Leftmost-longest, non-overlapping dictionary matches over each sentence's
/// stemmed tokens. Matches never cross sentence boundaries; repeated terms
/// produce one match per position.
inline std::vector<MatchedTerm> annotate(const Document& doc, const TermDictionary& dict) {
  std::vector<MatchedTerm> matches;
  std::vector<std::string> stems;
  for (const Sentence& sentence : doc.sentences) {
    stems.clear();
    for (const Token& t : sentence) stems.push_back(t.stem);
    std::size_t i = 0;
    while (i < stems.size()) {
      const auto [len, entry] = dict.longest_prefix(stems, i, stems.size());
      if (len == 0) {
        ++i;
        continue;
      }
      MatchedTerm m;
      m.term = dict.entry(entry).terms.front();
      std::vector<std::string> surfaces;
      for (std::size_t k = i; k < i + len; ++k) surfaces.push_back(sentence[k].surface);
      m.surface_in_doc = text::join(surfaces, " ");
      m.stemmed = text::join(dict.entry(entry).stems, " ");
      m.sentence = sentence[i].sentence;
      m.begin = static_cast<std::uint32_t>(i);
      m.end = static_cast<std::uint32_t>(i + len);
      matches.push_back(std::move(m));
      i += len;
    }
  }
  return matches;
}

/// Drops matches shorter than three characters unless written as an all-caps
/// acronym ("DNA" survives, "ph" and "pH" do not).
inline std::vector<MatchedTerm> filter_short(const std::vector<MatchedTerm>& matches) {
  std::vector<MatchedTerm> kept;
  for (const MatchedTerm& m : matches)
    if (text::utf8_length(m.surface_in_doc) >= 3 || text::is_all_upper_letters(m.surface_in_doc))
      kept.push_back(m);
  return kept;
}

/// Drops matches made only of stopwords.
inline std::vector<MatchedTerm> filter_stopword_only(const std::vector<MatchedTerm>& matches,
                                                     const StopwordList& stopwords) {
  std::vector<MatchedTerm> kept;
  for (const MatchedTerm& m : matches) {
    bool all_stop = true;
    for (const std::string& w : text::split_whitespace(m.surface_in_doc))
      all_stop = all_stop && stopwords.contains(w);
    if (!all_stop) kept.push_back(m);
  }
  return kept;
}

struct DfTable {
  std::map<std::string, std::size_t> counts;  // stemmed term -> documents
  std::size_t corpus_size = 0;

  std::size_t count(const std::string& stemmed) const {
    auto it = counts.find(stemmed);
    return it == counts.end() ? 0 : it->second;
  }
  // Unknown terms report 0.
  double df(const std::string& stemmed) const {
    return corpus_size == 0 ? 0.0
                            : static_cast<double>(count(stemmed)) /
                                  static_cast<double>(corpus_size);
  }
};

/// Document counts over a corpus; every key of `matches_per_document` is a
/// document, including those without matches.
inline DfTable build_df(const std::map<ProposalId, std::vector<MatchedTerm>>& matches_per_document) {
  if (matches_per_document.empty()) throw ConfigError("DF needs at least one document");
  DfTable table;
  table.corpus_size = matches_per_document.size();
  for (const auto& [id, matches] : matches_per_document) {
    std::set<std::string> present;
    for (const MatchedTerm& m : matches) present.insert(m.stemmed);
    for (const std::string& t : present) ++table.counts[t];
  }
  return table;
}

/// Largest document count a term may have and still pass `threshold`:
/// ceil(threshold * D), so 1% of 184 documents admits terms in up to two.
inline std::size_t max_document_count(double threshold, std::size_t corpus_size) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw ConfigError("DF threshold must be in (0, 1], got " + std::to_string(threshold));
  const double v = threshold * static_cast<double>(corpus_size);
  const double r = std::round(v);
  // Products like 0.07 * 100 land a hair above the integer they denote.
  if (std::fabs(v - r) < 1e-9) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(v));
}

/// Keeps matches whose term occurs in at most ceil(threshold * D) documents,
/// deduplicated by stemmed form.
inline LabelSet apply_threshold(ProposalId proposal_id, const std::vector<MatchedTerm>& matches,
                                const DfTable& df, double threshold) {
  const std::size_t limit = max_document_count(threshold, df.corpus_size);
  LabelSet set;
  set.proposal_id = proposal_id;
  for (const MatchedTerm& m : matches) {
    const std::size_t c = df.count(m.stemmed);
    if (c == 0 || c > limit) continue;
    set.add({m.surface_in_doc, stem_phrase(m.surface_in_doc), Provenance::kOntology,
             {m.term.curie}});
  }
  return set;
}

inline Json to_json(const MatchedTerm& m) {
  return {{"surface", m.surface_in_doc}, {"stemmed", m.stemmed},
          {"curie", m.term.curie},       {"ontology", m.term.ontology},
          {"branch", m.term.branch},     {"sentence", m.sentence},
          {"begin", m.begin},            {"end", m.end}};
}

}  // namespace autolabel

#endif  // AUTOLABEL_ONTOANNOT_HPP_
