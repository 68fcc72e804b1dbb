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

// Publication-derived labels: proposals are joined to the publications that
// cite their ID, and the publications' keywords become labels wherever they
// occur in the proposal text.

#ifndef AUTOLABEL_LINKAGE_HPP_
#define AUTOLABEL_LINKAGE_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autolabel/corpus.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/textprep.hpp"

namespace autolabel {

enum class KeywordSource { kWosAuthor, kPubmedAuthor, kMesh };

inline std::string_view to_string(KeywordSource s) {
  switch (s) {
    case KeywordSource::kWosAuthor: return "WOS_AUTHOR";
    case KeywordSource::kPubmedAuthor: return "PUBMED_AUTHOR";
    case KeywordSource::kMesh: return "MESH";
  }
  return "";
}

inline KeywordSource keyword_source_from_string(std::string_view s) {
  if (s == "WOS_AUTHOR") return KeywordSource::kWosAuthor;
  if (s == "PUBMED_AUTHOR") return KeywordSource::kPubmedAuthor;
  if (s == "MESH") return KeywordSource::kMesh;
  throw ParseError("unknown keyword source '" + std::string(s) + "'");
}

struct RawKeyword {
  std::string text;
  KeywordSource source = KeywordSource::kWosAuthor;
  std::string publication_id;

  friend bool operator==(const RawKeyword&, const RawKeyword&) = default;
};

/// Trims the keyword and, for MeSH headings, drops qualifier subterms after
/// '/'. Returns an empty string when nothing remains.
inline std::string clean_keyword_text(std::string_view text, KeywordSource source) {
  if (source == KeywordSource::kMesh) text = text.substr(0, text.find('/'));
  return std::string(text::trim(text));
}

/// Keywords per publication, immutable once loaded.
class KeywordStore {
 public:
  void add(const std::string& publication_id, KeywordSource source,
           const std::vector<std::string>& keywords) {
    auto& list = by_publication_[publication_id];
    for (const std::string& k : keywords) {
      std::string t = clean_keyword_text(k, source);
      if (!t.empty()) list.push_back({std::move(t), source, publication_id});
    }
  }

  // One record per line: {"publication_id", "source", "keywords": [...]}.
  static KeywordStore load(const std::filesystem::path& path) {
    KeywordStore store;
    for (const Json& j : jsonl::read(path)) {
      try {
        store.add(j.at("publication_id").get<std::string>(),
                  keyword_source_from_string(j.at("source").get<std::string>()),
                  j.at("keywords").get<std::vector<std::string>>());
      } catch (const Json::exception& e) {
        throw ParseError(path.string() + ": bad keyword record: " + e.what());
      }
    }
    return store;
  }

  const std::vector<RawKeyword>* find(const std::string& publication_id) const {
    auto it = by_publication_.find(publication_id);
    return it == by_publication_.end() ? nullptr : &it->second;
  }

  std::size_t publication_count() const { return by_publication_.size(); }

 private:
  std::map<std::string, std::vector<RawKeyword>> by_publication_;
};

struct LinkResult {
  // Every proposal, with the publications that reference it in file order.
  std::map<ProposalId, std::vector<PublicationRecord>> by_proposal;
  // Publications whose proposal_id matches no loaded proposal.
  std::vector<PublicationRecord> orphans;

  std::size_t linked_proposals() const {
    std::size_t n = 0;
    for (const auto& [id, pubs] : by_proposal) n += pubs.empty() ? 0 : 1;
    return n;
  }
  std::size_t linked_publications() const {
    std::size_t n = 0;
    for (const auto& [id, pubs] : by_proposal) n += pubs.size();
    return n;
  }
};

inline LinkResult link(const std::vector<ProposalRecord>& proposals,
                       const std::vector<PublicationRecord>& publications) {
  LinkResult result;
  for (const ProposalRecord& p : proposals) result.by_proposal[p.proposal_id];
  for (const PublicationRecord& pub : publications) {
    auto it = result.by_proposal.find(pub.proposal_id);
    if (it == result.by_proposal.end())
      result.orphans.push_back(pub);
    else
      it->second.push_back(pub);
  }
  return result;
}

struct CollectResult {
  std::vector<RawKeyword> keywords;
  std::size_t missing_publications = 0;  // absent from the store
};

/// Union of the keywords of `publication_ids`; identical (text, source) pairs
/// collapse to their first occurrence.
inline CollectResult collect_keywords(const std::vector<std::string>& publication_ids,
                                      const KeywordStore& store) {
  CollectResult result;
  std::set<std::pair<std::string, KeywordSource>> seen;
  for (const std::string& id : publication_ids) {
    const std::vector<RawKeyword>* kws = store.find(id);
    if (!kws) {
      ++result.missing_publications;
      continue;
    }
    for (const RawKeyword& k : *kws)
      if (seen.emplace(k.text, k.source).second) result.keywords.push_back(k);
  }
  return result;
}

/// Whether `stems` occurs as a contiguous run of token stems inside one
/// sentence of `doc`.
inline bool contains_stem_run(const Document& doc, const std::vector<std::string>& stems) {
  if (stems.empty()) return false;
  for (const Sentence& s : doc.sentences) {
    if (s.size() < stems.size()) continue;
    for (std::size_t i = 0; i + stems.size() <= s.size(); ++i) {
      std::size_t k = 0;
      while (k < stems.size() && s[i + k].stem == stems[k]) ++k;
      if (k == stems.size()) return true;
    }
  }
  return false;
}

/// Keeps the keywords whose stemmed form occurs in `doc`, deduplicated by
/// stemmed form with their source tags merged.
inline LabelSet filter_present(const std::vector<RawKeyword>& keywords, const Document& doc,
                               const CuratedTermList& protected_terms = {}) {
  LabelSet set;
  set.proposal_id = doc.proposal_id;
  for (const RawKeyword& k : keywords) {
    std::string surface = normalize_phrase(k.text, protected_terms);
    if (surface.empty()) continue;
    std::string stemmed = stem_phrase(surface);
    if (!contains_stem_run(doc, text::split_whitespace(stemmed))) continue;
    set.add({std::move(surface), std::move(stemmed), Provenance::kLinkage,
             {std::string(to_string(k.source))}});
  }
  return set;
}

}  // namespace autolabel

#endif  // AUTOLABEL_LINKAGE_HPP_
