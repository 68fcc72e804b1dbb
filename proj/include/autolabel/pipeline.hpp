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

// Config-driven pipeline. Each command reads the artifacts of the stages
// before it from the output directory and rewrites its own outputs; all
// intermediate files are line-delimited JSON or tab-separated tables.
//
//   prepare      proposals.csv             -> documents.jsonl
//   link-labels  documents + publications  -> labels_linkage.jsonl
//   onto-labels  documents + dictionaries  -> labels_ontology*.jsonl
//   extract      documents                 -> keywords.jsonl
//   evaluate     keywords + labels         -> eval_<source>.{tsv,jsonl}
//   tune         documents + labels        -> leaderboard_<source>.tsv
//   report       all of the above          -> report_*.tsv

#ifndef AUTOLABEL_PIPELINE_HPP_
#define AUTOLABEL_PIPELINE_HPP_

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "autolabel/corpus.hpp"
#include "autolabel/error.hpp"
#include "autolabel/eval.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/linkage.hpp"
#include "autolabel/ontoannot.hpp"
#include "autolabel/textprep.hpp"
#include "autolabel/tune.hpp"
#include "autolabel/yake.hpp"

namespace autolabel::pipeline {

namespace fs = std::filesystem;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "prepare", "link-labels", "onto-labels", "extract", "evaluate", "tune", "report"};
  return names;
}

struct PipelineConfig {
  fs::path proposals;
  fs::path publications;
  fs::path keyword_store;
  std::vector<fs::path> dictionaries;
  std::optional<fs::path> stopwords;
  std::optional<fs::path> curated_terms;
  fs::path output_dir = "out";

  FieldMap field_map;
  BranchAllowlist allowlist;
  double df_threshold = 0.01;
  std::vector<double> df_thresholds = {0.01, 0.02, 0.05, 0.10, 0.20, 0.25, 0.50, 1.0};
  // "all" documents, or only those with linked publications.
  std::string ontology_corpus = "all";
  std::vector<std::size_t> cutoffs = {5, 10, 20};
  YakeConfig yake;
  SweepSpace sweep;
  std::vector<std::string> label_sources = {"linkage", "ontology"};
  unsigned threads = 1;

  std::size_t max_cutoff() const { return *std::max_element(cutoffs.begin(), cutoffs.end()); }
};

namespace detail {

class Diagnostics {
 public:
  void add(const std::string& field, const std::string& message) {
    problems_.push_back(field + ": " + message);
  }
  void raise_if_any() const {
    if (problems_.empty()) return;
    std::string msg = "invalid config";
    for (const std::string& p : problems_) msg += "\n  " + p;
    throw ConfigError(msg);
  }

 private:
  std::vector<std::string> problems_;
};

template <typename T>
void read_field(const Json& j, const char* key, T& out, Diagnostics& diag) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const Json::exception& e) {
    diag.add(key, std::string("wrong type (") + e.what() + ")");
  }
}

inline YakeConfig parse_yake(const Json& j, Diagnostics& diag) {
  YakeConfig c;
  try {
    if (j.contains("ngram")) c.ngram = j.at("ngram").get<int>();
    if (j.contains("window")) c.window = j.at("window").get<int>();
    if (j.contains("dedup_method"))
      c.dedup_method = dedup_method_from_string(j.at("dedup_method").get<std::string>());
    if (j.contains("dedup_threshold")) c.dedup_threshold = j.at("dedup_threshold").get<double>();
    if (j.contains("top_n")) c.top_n = j.at("top_n").get<std::size_t>();
    c.validate();
  } catch (const std::exception& e) {
    diag.add("yake", e.what());
  }
  return c;
}

inline SweepSpace parse_sweep(const Json& j, Diagnostics& diag) {
  SweepSpace s;
  try {
    if (j.contains("ngram")) s.ngrams = j.at("ngram").get<std::vector<int>>();
    if (j.contains("window")) s.windows = j.at("window").get<std::vector<int>>();
    if (j.contains("dedup_method")) {
      s.methods.clear();
      for (const Json& m : j.at("dedup_method"))
        s.methods.push_back(dedup_method_from_string(m.get<std::string>()));
    }
    if (j.contains("dedup_threshold"))
      s.thresholds = j.at("dedup_threshold").get<std::vector<double>>();
    (void)grid(s);
  } catch (const std::exception& e) {
    diag.add("sweep", e.what());
  }
  return s;
}

inline std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string threshold_tag(double threshold) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", threshold * 100.0);
  return buf;
}

inline void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

inline void require(const fs::path& path) {
  if (!fs::exists(path)) throw MissingFileError(path.string());
}

}  // namespace detail

/// Reads a JSON config. Relative paths resolve against the config's
/// directory. Every problem found is reported in a single ConfigError.
inline PipelineConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not found: " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  auto resolve = [&](const std::string& p) {
    const fs::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  detail::Diagnostics diag;
  PipelineConfig cfg;
  std::string s;
  auto path_field = [&](const char* key, fs::path& out) {
    s.clear();
    detail::read_field(j, key, s, diag);
    if (!s.empty()) out = resolve(s);
  };
  path_field("proposals", cfg.proposals);
  path_field("publications", cfg.publications);
  path_field("keyword_store", cfg.keyword_store);
  path_field("output_dir", cfg.output_dir);
  if (!j.contains("output_dir")) cfg.output_dir = resolve("out");
  for (const char* key : {"stopwords", "curated_terms"}) {
    fs::path p;
    path_field(key, p);
    if (!p.empty()) (std::string(key) == "stopwords" ? cfg.stopwords : cfg.curated_terms) = p;
  }
  std::vector<std::string> dicts;
  detail::read_field(j, "dictionaries", dicts, diag);
  for (const std::string& d : dicts) cfg.dictionaries.push_back(resolve(d));

  detail::read_field(j, "id_column", cfg.field_map.id_column, diag);
  detail::read_field(j, "semantic_fields", cfg.field_map.semantic_fields, diag);
  if (cfg.field_map.semantic_fields.empty())
    diag.add("semantic_fields", "needs at least one column");

  if (j.contains("branch_allowlist")) {
    std::map<std::string, std::set<std::string>> allow;
    detail::read_field(j, "branch_allowlist", allow, diag);
    cfg.allowlist = BranchAllowlist(std::move(allow));
  }

  detail::read_field(j, "df_threshold", cfg.df_threshold, diag);
  detail::read_field(j, "df_thresholds", cfg.df_thresholds, diag);
  for (double t : cfg.df_thresholds)
    if (!(t > 0.0 && t <= 1.0)) diag.add("df_thresholds", "value " + std::to_string(t) + " outside (0, 1]");
  if (!(cfg.df_threshold > 0.0 && cfg.df_threshold <= 1.0))
    diag.add("df_threshold", "must be in (0, 1]");

  detail::read_field(j, "ontology_corpus", cfg.ontology_corpus, diag);
  if (cfg.ontology_corpus != "all" && cfg.ontology_corpus != "linked")
    diag.add("ontology_corpus", "must be \"all\" or \"linked\"");

  detail::read_field(j, "cutoffs", cfg.cutoffs, diag);
  if (cfg.cutoffs.empty()) diag.add("cutoffs", "needs at least one value");
  for (std::size_t c : cfg.cutoffs)
    if (c == 0) diag.add("cutoffs", "values must be positive");
  if (cfg.cutoffs.empty()) cfg.cutoffs = {10};

  if (j.contains("yake")) cfg.yake = detail::parse_yake(j.at("yake"), diag);
  if (j.contains("sweep")) cfg.sweep = detail::parse_sweep(j.at("sweep"), diag);

  detail::read_field(j, "label_sources", cfg.label_sources, diag);
  for (const std::string& src : cfg.label_sources)
    if (src != "linkage" && src != "ontology")
      diag.add("label_sources", "unknown source '" + src + "'");
  detail::read_field(j, "threads", cfg.threads, diag);
  if (cfg.threads == 0) cfg.threads = 1;

  auto check_exists = [&](const char* field, const fs::path& p) {
    if (!p.empty() && !fs::exists(p)) diag.add(field, "file not found: " + p.string());
  };
  check_exists("proposals", cfg.proposals);
  check_exists("publications", cfg.publications);
  check_exists("keyword_store", cfg.keyword_store);
  for (const fs::path& d : cfg.dictionaries) check_exists("dictionaries", d);
  if (cfg.stopwords) check_exists("stopwords", *cfg.stopwords);
  if (cfg.curated_terms) check_exists("curated_terms", *cfg.curated_terms);
  diag.raise_if_any();
  return cfg;
}

/// Artifact file names inside the output directory.
struct Artifacts {
  fs::path dir;

  fs::path documents() const { return dir / "documents.jsonl"; }
  fs::path prepare_report() const { return dir / "prepare_report.json"; }
  fs::path linkage_labels() const { return dir / "labels_linkage.jsonl"; }
  fs::path linkage_report() const { return dir / "linkage_report.json"; }
  fs::path ontology_matches() const { return dir / "ontology_matches.jsonl"; }
  fs::path ontology_df() const { return dir / "ontology_df.tsv"; }
  fs::path ontology_labels() const { return dir / "labels_ontology.jsonl"; }
  fs::path ontology_labels_at(double t) const {
    return dir / ("labels_ontology_t" + detail::threshold_tag(t) + ".jsonl");
  }
  fs::path ontology_thresholds() const { return dir / "ontology_thresholds.tsv"; }
  fs::path ontology_report() const { return dir / "ontology_report.json"; }
  fs::path keywords() const { return dir / "keywords.jsonl"; }
  fs::path labels(const std::string& source) const {
    return source == "linkage" ? linkage_labels() : ontology_labels();
  }
  fs::path eval_table(const std::string& s) const { return dir / ("eval_" + s + ".tsv"); }
  fs::path eval_records(const std::string& s) const { return dir / ("eval_" + s + ".jsonl"); }
  fs::path eval_documents(const std::string& s) const {
    return dir / ("eval_" + s + "_documents.jsonl");
  }
  fs::path leaderboard(const std::string& s) const { return dir / ("leaderboard_" + s + ".tsv"); }
  fs::path winners(const std::string& s) const { return dir / ("tune_" + s + "_winners.jsonl"); }
  fs::path label_frequency(const std::string& s) const { return dir / ("report_label_frequency_" + s + ".tsv"); }
  fs::path ngram_summary() const { return dir / "report_ngram_summary.tsv"; }
  fs::path scores_table() const { return dir / "report_scores.tsv"; }
  fs::path threshold_table() const { return dir / "report_threshold_sweep.tsv"; }
};

/// Per-run overrides from the command line.
struct Overrides {
  std::optional<std::size_t> top_n;
  std::optional<double> threshold;
  std::optional<unsigned> threads;
};

class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config, Overrides overrides = {})
      : cfg_(std::move(config)), out_{cfg_.output_dir} {
    if (overrides.threshold) {
      if (!(*overrides.threshold > 0.0 && *overrides.threshold <= 1.0))
        throw ConfigError("--threshold must be in (0, 1]");
      cfg_.df_threshold = *overrides.threshold;
    }
    if (overrides.top_n) {
      if (*overrides.top_n == 0) throw ConfigError("--top-n must be positive");
      cfg_.yake.top_n = *overrides.top_n;
      top_n_override_ = true;
    }
    if (overrides.threads) cfg_.threads = std::max(1u, *overrides.threads);
    stopwords_ = cfg_.stopwords ? StopwordList::load(*cfg_.stopwords) : StopwordList::defaults();
    if (cfg_.curated_terms) curated_ = CuratedTermList::load(*cfg_.curated_terms);
  }

  const PipelineConfig& config() const { return cfg_; }
  const Artifacts& artifacts() const { return out_; }

  void run(const std::string& command) {
    if (command == "prepare") return prepare();
    if (command == "link-labels") return link_labels();
    if (command == "onto-labels") return onto_labels();
    if (command == "extract") return extract_keywords();
    if (command == "evaluate") return evaluate();
    if (command == "tune") return tune();
    if (command == "report") return report();
    throw ConfigError("unknown command '" + command + "'");
  }

  void prepare() {
    if (cfg_.proposals.empty()) throw ConfigError("proposals: required by prepare");
    const ProposalLoad load = load_proposals(cfg_.proposals, cfg_.field_map);
    std::string docs;
    std::size_t skippable = 0;
    for (const ProposalRecord& rec : load.records) {
      const AssembledText text = assemble_text(rec, cfg_.field_map.semantic_fields);
      if (text.skippable) {
        ++skippable;
        continue;
      }
      docs += jsonl::line({{"proposal_id", rec.proposal_id},
                           {"raw_text", text.text},
                           {"clean_text", sanitize(text.text, curated_)}});
    }
    detail::write_file(out_.documents(), docs);
    detail::write_file(out_.prepare_report(),
                       jsonl::line({{"data_rows", load.data_rows},
                                    {"records", load.records.size()},
                                    {"skipped_bad_id", load.skipped_bad_id},
                                    {"skippable_documents", skippable},
                                    {"documents", load.records.size() - skippable}}));
  }

  void link_labels() {
    if (cfg_.proposals.empty()) throw ConfigError("proposals: required by link-labels");
    if (cfg_.publications.empty()) throw ConfigError("publications: required by link-labels");
    if (cfg_.keyword_store.empty()) throw ConfigError("keyword_store: required by link-labels");
    const std::map<ProposalId, Document> docs = load_documents_by_id();
    const ProposalLoad proposals = load_proposals(cfg_.proposals, cfg_.field_map);
    const PublicationLoad pubs = load_publications(cfg_.publications);
    const KeywordStore store = KeywordStore::load(cfg_.keyword_store);
    const LinkResult linked = link(proposals.records, pubs.records);

    std::string out;
    std::size_t missing = 0, total_labels = 0, without_text = 0, labeled = 0;
    for (const auto& [id, list] : linked.by_proposal) {
      if (list.empty()) continue;
      auto doc = docs.find(id);
      if (doc == docs.end()) {
        ++without_text;
        continue;
      }
      std::vector<std::string> ids;
      for (const PublicationRecord& p : list) ids.push_back(p.publication_id);
      const CollectResult collected = collect_keywords(ids, store);
      missing += collected.missing_publications;
      const LabelSet set = filter_present(collected.keywords, doc->second, curated_);
      total_labels += set.size();
      labeled += set.empty() ? 0 : 1;
      out += jsonl::line(to_json(set));
    }
    detail::write_file(out_.linkage_labels(), out);
    detail::write_file(out_.linkage_report(),
                       jsonl::line({{"proposals", proposals.records.size()},
                                    {"publications", pubs.records.size()},
                                    {"dropped_publication_rows", pubs.dropped},
                                    {"proposals_with_publications", linked.linked_proposals()},
                                    {"linked_publications", linked.linked_publications()},
                                    {"orphan_publications", linked.orphans.size()},
                                    {"publications_missing_from_store", missing},
                                    {"linked_proposals_without_text", without_text},
                                    {"proposals_with_labels", labeled},
                                    {"total_labels", total_labels}}));
  }

  void onto_labels() {
    if (cfg_.dictionaries.empty()) throw ConfigError("dictionaries: required by onto-labels");
    std::vector<Document> docs = load_documents();
    if (cfg_.ontology_corpus == "linked") {
      detail::require(out_.linkage_labels());
      const auto linked = read_label_sets(out_.linkage_labels());
      std::erase_if(docs, [&](const Document& d) { return !linked.count(d.proposal_id); });
    }
    const DictionaryLoad dict = load_dictionary(cfg_.dictionaries, cfg_.allowlist, curated_);

    std::map<ProposalId, std::vector<MatchedTerm>> matches;
    std::string match_lines;
    std::size_t total_matches = 0;
    for (const Document& d : docs) {
      std::vector<MatchedTerm> m =
          filter_stopword_only(filter_short(annotate(d, dict.dictionary)), stopwords_);
      Json arr = Json::array();
      for (const MatchedTerm& t : m) arr.push_back(to_json(t));
      match_lines += jsonl::line({{"proposal_id", d.proposal_id}, {"matches", std::move(arr)}});
      total_matches += m.size();
      matches[d.proposal_id] = std::move(m);
    }
    if (matches.empty()) throw Error("no documents to annotate");
    const DfTable df = build_df(matches);

    std::string df_lines = "stemmed\tdocuments\tdf\n";
    for (const auto& [term, count] : df.counts)
      df_lines += term + "\t" + std::to_string(count) + "\t" + detail::fixed(df.df(term)) + "\n";

    std::vector<double> thresholds = cfg_.df_thresholds;
    thresholds.push_back(cfg_.df_threshold);
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    std::string summary =
        "threshold\tmax_documents\tavg_labels_pre_stemming\tavg_labels\ttotal_labels\n";
    for (double t : thresholds) {
      std::string lines;
      std::size_t total = 0, total_surfaces = 0;
      for (const auto& [id, m] : matches) {
        const LabelSet set = apply_threshold(id, m, df, t);
        total += set.size();
        total_surfaces += distinct_surfaces(m, df, t);
        lines += jsonl::line(to_json(set));
      }
      detail::write_file(out_.ontology_labels_at(t), lines);
      if (t == cfg_.df_threshold) detail::write_file(out_.ontology_labels(), lines);
      const double n = static_cast<double>(matches.size());
      summary += detail::threshold_tag(t) + "\t" +
                 std::to_string(max_document_count(t, df.corpus_size)) + "\t" +
                 detail::fixed(static_cast<double>(total_surfaces) / n, 2) + "\t" +
                 detail::fixed(static_cast<double>(total) / n, 2) + "\t" +
                 std::to_string(total) + "\n";
    }
    detail::write_file(out_.ontology_matches(), match_lines);
    detail::write_file(out_.ontology_df(), df_lines);
    detail::write_file(out_.ontology_thresholds(), summary);
    detail::write_file(out_.ontology_report(),
                       jsonl::line({{"documents", df.corpus_size},
                                    {"dictionary_rows", dict.rows},
                                    {"malformed_rows", dict.malformed},
                                    {"pruned_terms", dict.dictionary.pruned()},
                                    {"indexed_entries", dict.dictionary.size()},
                                    {"total_matches", total_matches},
                                    {"distinct_terms", df.counts.size()},
                                    {"baseline_threshold", cfg_.df_threshold}}));
  }

  void extract_keywords() {
    const std::vector<Document> docs = load_documents();
    YakeConfig yc = cfg_.yake;
    if (!top_n_override_) yc.top_n = std::max(yc.top_n, cfg_.max_cutoff());
    std::vector<std::string> lines(docs.size());
    tune_detail_parallel(docs.size(), [&](std::size_t i) {
      Json kws = Json::array();
      for (const Keyword& k : extract(docs[i], yc, stopwords_)) kws.push_back(to_json(k));
      lines[i] = jsonl::line(
          {{"proposal_id", docs[i].proposal_id}, {"config", to_json(yc)}, {"keywords", kws}});
    });
    std::string out;
    for (const std::string& l : lines) out += l;
    detail::write_file(out_.keywords(), out);
  }

  void evaluate() {
    detail::require(out_.keywords());
    const std::map<ProposalId, std::vector<Keyword>> keywords = load_keywords();
    for (const std::string& source : cfg_.label_sources) {
      detail::require(out_.labels(source));
      const auto labels = read_label_sets(out_.labels(source));
      std::string table = "cutoff\tprecision\trecall\tf1\n";
      std::string records, doc_lines;
      for (std::size_t n : cfg_.cutoffs) {
        std::vector<EvalMetrics> per_doc;
        for (const auto& [id, set] : labels) {
          auto it = keywords.find(id);
          static const std::vector<Keyword> none;
          const std::vector<Keyword>& kws = it == keywords.end() ? none : it->second;
          const EvalMetrics m = evaluate_at(kws, set, n);
          per_doc.push_back(m);
          Json row = to_json(m);
          row["proposal_id"] = id;
          row["evaluable"] = m.evaluable;
          const std::vector<Keyword> top(kws.begin(),
                                         kws.begin() + static_cast<std::ptrdiff_t>(
                                                           std::min(n, kws.size())));
          row["matched_pairs"] = exact_match(top, set).pairs;
          doc_lines += jsonl::line(row);
        }
        const EvalMetrics avg = macro_average(per_doc);
        table += std::to_string(n) + "\t" + detail::fixed(avg.precision, 3) + "\t" +
                 detail::fixed(avg.recall, 3) + "\t" + detail::fixed(avg.f1, 3) + "\n";
        Json rec = to_json(avg);
        rec["source"] = source;
        records += jsonl::line(rec);
      }
      detail::write_file(out_.eval_table(source), table);
      detail::write_file(out_.eval_records(source), records);
      detail::write_file(out_.eval_documents(source), doc_lines);
    }
  }

  void tune() {
    const std::vector<Document> docs = load_documents();
    for (const std::string& source : cfg_.label_sources) {
      detail::require(out_.labels(source));
      const auto labels = read_label_sets(out_.labels(source));
      const std::vector<SweepResult> results =
          sweep_cutoffs(docs, labels, cfg_.sweep, cfg_.cutoffs, stopwords_, cfg_.threads);
      std::string table =
          "ngram\twindow\tdedup_method\tdedup_threshold\tcutoff\tprecision\trecall\tf1\n";
      std::string winners;
      for (const SweepResult& r : results) {
        for (const LeaderboardEntry& e : r.leaderboard) {
          table += std::to_string(e.config.ngram) + "\t" + std::to_string(e.config.window) +
                   "\t" + std::string(to_string(e.config.dedup_method)) + "\t" +
                   detail::fixed(e.config.dedup_threshold, 2) + "\t" +
                   std::to_string(r.cutoff) + "\t" + detail::fixed(e.metrics.precision) +
                   "\t" + detail::fixed(e.metrics.recall) + "\t" +
                   detail::fixed(e.metrics.f1) + "\n";
        }
        const LeaderboardEntry& best = r.best();
        winners += jsonl::line({{"source", source},
                                {"cutoff", r.cutoff},
                                {"config", to_json(best.config)},
                                {"precision", best.metrics.precision},
                                {"recall", best.metrics.recall},
                                {"f1", best.metrics.f1},
                                {"tie_break_applied", r.tie_break_applied}});
      }
      detail::write_file(out_.leaderboard(source), table);
      detail::write_file(out_.winners(source), winners);
    }
  }

  void report() {
    // Label frequency lists and n-gram summary.
    std::string ngram = "source\tngram\tlabels\tpercent\n";
    std::string scores = "source\tcutoff\tprecision\trecall\tf1\n";
    for (const std::string& source : cfg_.label_sources) {
      detail::require(out_.labels(source));
      const auto labels = read_label_sets(out_.labels(source));
      detail::write_file(out_.label_frequency(source), frequency_table(labels));
      std::map<std::size_t, std::size_t> lengths;
      std::size_t total = 0;
      for (const auto& [id, set] : labels)
        for (const Label& l : set.labels) {
          ++lengths[text::split_whitespace(l.stemmed).size()];
          ++total;
        }
      for (const auto& [len, count] : lengths)
        ngram += source + "\t" + std::to_string(len) + "\t" + std::to_string(count) + "\t" +
                 detail::fixed(100.0 * static_cast<double>(count) / static_cast<double>(total), 1) +
                 "\n";

      detail::require(out_.eval_records(source));
      for (const Json& rec : jsonl::read(out_.eval_records(source)))
        scores += source + "\t" + std::to_string(rec.at("cutoff").get<std::size_t>()) + "\t" +
                  detail::fixed(rec.at("precision").get<double>(), 3) + "\t" +
                  detail::fixed(rec.at("recall").get<double>(), 3) + "\t" +
                  detail::fixed(rec.at("f1").get<double>(), 3) + "\n";
    }
    detail::write_file(out_.ngram_summary(), ngram);
    detail::write_file(out_.scores_table(), scores);

    if (std::find(cfg_.label_sources.begin(), cfg_.label_sources.end(), "ontology") !=
        cfg_.label_sources.end())
      detail::write_file(out_.threshold_table(), threshold_table());
  }

 private:
  template <typename F>
  void tune_detail_parallel(std::size_t n, F&& body) {
    autolabel::detail::parallel_for(n, cfg_.threads, body);
  }

  std::vector<Document> load_documents() const {
    detail::require(out_.documents());
    std::vector<Document> docs;
    for (const Json& j : jsonl::read(out_.documents()))
      docs.push_back(document_from_clean(j.at("proposal_id").get<ProposalId>(),
                                         j.at("clean_text").get<std::string>(),
                                         j.at("raw_text").get<std::string>()));
    return docs;
  }

  std::map<ProposalId, Document> load_documents_by_id() const {
    std::map<ProposalId, Document> out;
    for (Document& d : load_documents()) {
      const ProposalId id = d.proposal_id;
      out.emplace(id, std::move(d));
    }
    return out;
  }

  std::map<ProposalId, std::vector<Keyword>> load_keywords() const {
    std::map<ProposalId, std::vector<Keyword>> out;
    for (const Json& j : jsonl::read(out_.keywords())) {
      std::vector<Keyword> kws;
      for (const Json& k : j.at("keywords")) kws.push_back(keyword_from_json(k));
      out[j.at("proposal_id").get<ProposalId>()] = std::move(kws);
    }
    return out;
  }

  static std::size_t distinct_surfaces(const std::vector<MatchedTerm>& matches,
                                       const DfTable& df, double threshold) {
    const std::size_t limit = max_document_count(threshold, df.corpus_size);
    std::set<std::string> surfaces;
    for (const MatchedTerm& m : matches) {
      const std::size_t c = df.count(m.stemmed);
      if (c > 0 && c <= limit) surfaces.insert(text::ascii_lower(m.surface_in_doc));
    }
    return surfaces.size();
  }

  // Ten most and ten least common stemmed labels by number of documents.
  static std::string frequency_table(const std::map<ProposalId, LabelSet>& labels) {
    std::map<std::string, std::size_t> freq;
    for (const auto& [id, set] : labels)
      for (const Label& l : set.labels) ++freq[l.stemmed];
    std::vector<std::pair<std::string, std::size_t>> by_count(freq.begin(), freq.end());
    std::stable_sort(by_count.begin(), by_count.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::string out = "group\trank\tlabel\tdocuments\n";
    const std::size_t k = std::min<std::size_t>(10, by_count.size());
    for (std::size_t i = 0; i < k; ++i)
      out += "most\t" + std::to_string(i + 1) + "\t" + by_count[i].first + "\t" +
             std::to_string(by_count[i].second) + "\n";
    std::stable_sort(by_count.begin(), by_count.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    for (std::size_t i = 0; i < k; ++i)
      out += "least\t" + std::to_string(i + 1) + "\t" + by_count[i].first + "\t" +
             std::to_string(by_count[i].second) + "\n";
    return out;
  }

  // F1 at every cutoff for each DF threshold, using the extracted keywords.
  std::string threshold_table() const {
    detail::require(out_.keywords());
    detail::require(out_.ontology_thresholds());
    const auto keywords = load_keywords();
    std::map<std::string, std::string> avg_pre;
    {
      std::ifstream in(out_.ontology_thresholds());
      std::string line;
      std::getline(in, line);
      while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string tag, max_docs, pre;
        std::getline(row, tag, '\t');
        std::getline(row, max_docs, '\t');
        std::getline(row, pre, '\t');
        avg_pre[tag] = pre;
      }
    }
    std::vector<double> thresholds = cfg_.df_thresholds;
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    std::string out = "threshold\tavg_labels_pre_stemming";
    for (std::size_t n : cfg_.cutoffs) out += "\tf1@" + std::to_string(n);
    out += "\n";
    for (double t : thresholds) {
      detail::require(out_.ontology_labels_at(t));
      const auto labels = read_label_sets(out_.ontology_labels_at(t));
      const std::string tag = detail::threshold_tag(t);
      out += tag + "\t" + (avg_pre.count(tag) ? avg_pre[tag] : std::string("NA"));
      for (std::size_t n : cfg_.cutoffs) {
        std::vector<EvalMetrics> per_doc;
        for (const auto& [id, set] : labels) {
          auto it = keywords.find(id);
          per_doc.push_back(
              evaluate_at(it == keywords.end() ? std::vector<Keyword>{} : it->second, set, n));
        }
        const bool any = std::any_of(per_doc.begin(), per_doc.end(),
                                     [](const EvalMetrics& m) { return m.evaluable; });
        out += "\t" + (any ? detail::fixed(macro_average(per_doc).f1, 3) : std::string("NA"));
      }
      out += "\n";
    }
    return out;
  }

  PipelineConfig cfg_;
  Artifacts out_;
  StopwordList stopwords_;
  CuratedTermList curated_;
  bool top_n_override_ = false;
};

}  // namespace autolabel::pipeline

#endif  // AUTOLABEL_PIPELINE_HPP_
