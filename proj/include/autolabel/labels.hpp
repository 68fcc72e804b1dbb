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

#ifndef AUTOLABEL_LABELS_HPP_
#define AUTOLABEL_LABELS_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autolabel/corpus.hpp"
#include "autolabel/error.hpp"
#include "json.hpp"

namespace autolabel {

using Json = nlohmann::ordered_json;

enum class Provenance { kLinkage, kOntology };

inline std::string_view to_string(Provenance p) {
  return p == Provenance::kLinkage ? "LINKAGE" : "ONTOLOGY";
}

inline Provenance provenance_from_string(std::string_view s) {
  if (s == "LINKAGE") return Provenance::kLinkage;
  if (s == "ONTOLOGY") return Provenance::kOntology;
  throw ParseError("unknown provenance '" + std::string(s) + "'");
}

struct Label {
  std::string surface;
  std::string stemmed;
  Provenance provenance = Provenance::kLinkage;
  // Keyword source tags for linkage labels, CURIEs for ontology labels.
  std::set<std::string> sources;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Derived ground-truth labels for one document, unique by stemmed form and
/// kept in first-seen order.
struct LabelSet {
  ProposalId proposal_id = 0;
  std::vector<Label> labels;

  // Adds `label`, or merges its sources into an existing entry with the same
  // stemmed form. Returns true when a new entry was created.
  bool add(Label label) {
    for (Label& existing : labels) {
      if (existing.stemmed == label.stemmed) {
        existing.sources.insert(label.sources.begin(), label.sources.end());
        return false;
      }
    }
    labels.push_back(std::move(label));
    return true;
  }

  bool contains(std::string_view stemmed) const {
    return std::any_of(labels.begin(), labels.end(),
                       [&](const Label& l) { return l.stemmed == stemmed; });
  }

  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

inline Json to_json(const LabelSet& set) {
  Json labels = Json::array();
  for (const Label& l : set.labels) {
    labels.push_back({{"surface", l.surface},
                      {"stemmed", l.stemmed},
                      {"provenance", to_string(l.provenance)},
                      {"sources", l.sources}});
  }
  return {{"proposal_id", set.proposal_id}, {"labels", std::move(labels)}};
}

inline LabelSet label_set_from_json(const Json& j) {
  LabelSet set;
  set.proposal_id = j.at("proposal_id").get<ProposalId>();
  for (const Json& l : j.at("labels")) {
    Label label;
    label.surface = l.at("surface").get<std::string>();
    label.stemmed = l.at("stemmed").get<std::string>();
    label.provenance = provenance_from_string(l.at("provenance").get<std::string>());
    if (l.contains("sources"))
      for (const Json& s : l.at("sources")) label.sources.insert(s.get<std::string>());
    set.labels.push_back(std::move(label));
  }
  return set;
}

namespace jsonl {

inline std::vector<Json> read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path.string());
  std::vector<Json> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    try {
      records.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

inline std::string line(const Json& record) { return record.dump() + "\n"; }

}  // namespace jsonl

inline std::map<ProposalId, LabelSet> read_label_sets(const std::filesystem::path& path) {
  std::map<ProposalId, LabelSet> sets;
  for (const Json& j : jsonl::read(path)) {
    LabelSet s = label_set_from_json(j);
    sets[s.proposal_id] = std::move(s);
  }
  return sets;
}

}  // namespace autolabel

#endif  // AUTOLABEL_LABELS_HPP_
