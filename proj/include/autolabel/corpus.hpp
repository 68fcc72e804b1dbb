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

#ifndef AUTOLABEL_CORPUS_HPP_
#define AUTOLABEL_CORPUS_HPP_

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autolabel/csv.hpp"
#include "autolabel/error.hpp"
#include "autolabel/text_util.hpp"

namespace autolabel {

using ProposalId = std::int64_t;

inline std::optional<ProposalId> parse_proposal_id(std::string_view s) {
  s = text::trim(s);
  if (s.empty()) return std::nullopt;
  ProposalId v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Text-bearing proposal columns, in the order they are joined.
inline const std::vector<std::string>& default_semantic_fields() {
  static const std::vector<std::string> fields = {
      "title",           "description",        "justification",
      "community interest", "summary of work", "sample preparation",
      "utilization",     "DOE mission"};
  return fields;
}

struct FieldMap {
  std::string id_column = "proposal_id";
  std::vector<std::string> semantic_fields = default_semantic_fields();
};

struct ProposalRecord {
  ProposalId proposal_id = 0;
  // Every source column except the ID, in source order.
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string* field(std::string_view name) const {
    for (const auto& [k, v] : fields)
      if (k == name) return &v;
    return nullptr;
  }

  friend bool operator==(const ProposalRecord&, const ProposalRecord&) = default;
};

struct PublicationRecord {
  std::string publication_id;
  ProposalId proposal_id = 0;
  std::string title;

  friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;
};

struct ProposalLoad {
  std::vector<ProposalRecord> records;
  std::vector<std::string> columns;  // header, including the ID column
  std::size_t data_rows = 0;
  std::size_t skipped_bad_id = 0;
};

struct PublicationLoad {
  std::vector<PublicationRecord> records;
  std::size_t dropped = 0;  // non-numeric proposal_id or empty publication_id
};

namespace detail {

inline bool blank_row(const csv::Row& row) {
  return row.size() == 1 && text::trim(row[0]).empty();
}

inline std::optional<std::size_t> find_column(const csv::Row& header,
                                              std::string_view name) {
  const std::string want = text::ascii_lower(text::trim(name));
  for (std::size_t i = 0; i < header.size(); ++i)
    if (text::ascii_lower(text::trim(header[i])) == want) return i;
  return std::nullopt;
}

}  // namespace detail

inline ProposalLoad load_proposals(const std::filesystem::path& path,
                                   const FieldMap& field_map = {}) {
  const std::vector<csv::Row> rows = csv::read_file(path);
  if (rows.empty()) throw ParseError(path.string() + ": missing header row");
  const csv::Row& header = rows.front();
  const auto id_col = detail::find_column(header, field_map.id_column);
  if (!id_col)
    throw ConfigError(path.string() + ": missing column '" + field_map.id_column + "'");
  for (const std::string& f : field_map.semantic_fields)
    if (!detail::find_column(header, f))
      throw ConfigError(path.string() + ": missing column '" + f + "'");

  ProposalLoad load;
  load.columns.reserve(header.size());
  for (const std::string& h : header) load.columns.emplace_back(text::trim(h));
  std::map<ProposalId, int> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (detail::blank_row(row)) continue;
    ++load.data_rows;
    if (row.size() > header.size())
      throw ParseError(path.string() + ": row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " cells, header has " +
                       std::to_string(header.size()));
    const std::optional<ProposalId> id =
        *id_col < row.size() ? parse_proposal_id(row[*id_col]) : std::nullopt;
    if (!id) {
      ++load.skipped_bad_id;
      continue;
    }
    ProposalRecord rec;
    rec.proposal_id = *id;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c == *id_col) continue;
      rec.fields.emplace_back(load.columns[c], c < row.size() ? row[c] : std::string());
    }
    ++seen[*id];
    load.records.push_back(std::move(rec));
  }
  std::string dups;
  for (const auto& [id, n] : seen)
    if (n > 1) dups += (dups.empty() ? "" : ", ") + std::to_string(id);
  if (!dups.empty())
    throw ParseError(path.string() + ": duplicate proposal_id values: " + dups);
  return load;
}

struct AssembledText {
  std::string text;
  bool skippable = false;  // every semantic field was empty
};

/// Joins the non-empty semantic fields with '\n' in the given order.
inline AssembledText assemble_text(const ProposalRecord& record,
                                   const std::vector<std::string>& semantic_fields =
                                       default_semantic_fields()) {
  AssembledText out;
  for (const std::string& name : semantic_fields) {
    const std::string* value = record.field(name);
    if (!value) {
      const std::string want = text::ascii_lower(name);
      for (const auto& [k, v] : record.fields)
        if (text::ascii_lower(k) == want) value = &v;
    }
    if (!value)
      throw ConfigError("proposal " + std::to_string(record.proposal_id) +
                        ": no field '" + name + "'");
    if (text::trim(*value).empty()) continue;
    if (!out.text.empty()) out.text.push_back('\n');
    out.text += *value;
  }
  out.skippable = out.text.empty();
  return out;
}

inline PublicationLoad load_publications(const std::filesystem::path& path) {
  const std::vector<csv::Row> rows = csv::read_file(path);
  if (rows.empty()) throw ParseError(path.string() + ": missing header row");
  const auto pub_col = detail::find_column(rows[0], "publication_id");
  const auto prop_col = detail::find_column(rows[0], "proposal_id");
  const auto title_col = detail::find_column(rows[0], "title");
  if (!pub_col) throw ConfigError(path.string() + ": missing column 'publication_id'");
  if (!prop_col) throw ConfigError(path.string() + ": missing column 'proposal_id'");

  PublicationLoad load;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (detail::blank_row(row)) continue;
    auto cell = [&](std::optional<std::size_t> c) -> std::string {
      return c && *c < row.size() ? std::string(text::trim(row[*c])) : std::string();
    };
    const std::string pub = cell(pub_col);
    const std::optional<ProposalId> id = parse_proposal_id(cell(prop_col));
    if (pub.empty() || !id) {
      ++load.dropped;
      continue;
    }
    load.records.push_back({pub, *id, cell(title_col)});
  }
  return load;
}

inline void write_proposals(std::ostream& out, const std::vector<ProposalRecord>& records,
                            const std::vector<std::string>& columns,
                            const std::string& id_column = "proposal_id") {
  out << csv::format_row(columns);
  for (const ProposalRecord& rec : records) {
    csv::Row row;
    for (const std::string& col : columns) {
      if (col == id_column) {
        row.push_back(std::to_string(rec.proposal_id));
      } else {
        const std::string* v = rec.field(col);
        row.push_back(v ? *v : std::string());
      }
    }
    out << csv::format_row(row);
  }
}

inline void write_publications(std::ostream& out,
                               const std::vector<PublicationRecord>& records) {
  out << csv::format_row({"publication_id", "proposal_id", "title"});
  for (const PublicationRecord& p : records)
    out << csv::format_row({p.publication_id, std::to_string(p.proposal_id), p.title});
}

}  // namespace autolabel

#endif  // AUTOLABEL_CORPUS_HPP_
