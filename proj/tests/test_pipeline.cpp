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

#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>

#include "autolabel/autolabel.hpp"
#include "catch_amalgamated.hpp"
#include "support/test_util.hpp"

namespace fs = std::filesystem;
using namespace autolabel;
using testutil::TempDir;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + AUTOLABEL_CLI + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path copy_fixture(const TempDir& dir) {
  for (const auto& e : fs::directory_iterator(AUTOLABEL_FIXTURE_DIR))
    if (e.is_regular_file()) fs::copy_file(e.path(), dir / e.path().filename().string());
  return dir / "config.json";
}

std::string cfg_arg(const fs::path& config) { return "--config \"" + config.string() + "\""; }

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    files[e.path().filename().string()] = testutil::read_file(e.path());
  return files;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("cli: full run on the bundled fixture writes every artifact") {
  TempDir dir("pipe_all");
  const fs::path config = copy_fixture(dir);
  REQUIRE(run_cli("all " + cfg_arg(config)) == 0);
  REQUIRE(run_cli("tune " + cfg_arg(config)) == 0);
  const fs::path out = dir / "out";
  for (const char* name :
       {"documents.jsonl", "prepare_report.json", "labels_linkage.jsonl", "linkage_report.json",
        "ontology_matches.jsonl", "ontology_df.tsv", "labels_ontology.jsonl",
        "labels_ontology_t1.jsonl", "labels_ontology_t100.jsonl", "ontology_thresholds.tsv",
        "ontology_report.json", "keywords.jsonl", "eval_linkage.tsv", "eval_linkage.jsonl",
        "eval_ontology.tsv", "leaderboard_linkage.tsv", "leaderboard_ontology.tsv",
        "tune_linkage_winners.jsonl", "report_label_frequency_linkage.tsv", "report_ngram_summary.tsv",
        "report_scores.tsv", "report_threshold_sweep.tsv"})
    CHECK(fs::exists(out / name));

  const Json prep = Json::parse(testutil::read_file(out / "prepare_report.json"));
  CHECK(prep.at("documents") == 11);
  CHECK(prep.at("skippable_documents") == 1);
  const Json link = Json::parse(testutil::read_file(out / "linkage_report.json"));
  CHECK(link.at("proposals_with_publications") == 7);
  CHECK(link.at("orphan_publications") == 1);
  CHECK(link.at("dropped_publication_rows") == 1);

  // Leaderboard: header plus one row per grid cell and cutoff.
  const auto rows = csv::parse(testutil::read_file(out / "leaderboard_linkage.tsv"), '\t');
  REQUIRE(!rows.empty());
  CHECK(rows[0] == csv::Row{"ngram", "window", "dedup_method", "dedup_threshold", "cutoff",
                            "precision", "recall", "f1"});
  std::map<std::string, std::size_t> per_cutoff;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 8);
    ++per_cutoff[rows[i][4]];
  }
  CHECK(per_cutoff == std::map<std::string, std::size_t>{{"5", 135}, {"10", 135}, {"20", 135}});

  const std::string scores = testutil::read_file(out / "report_scores.tsv");
  CHECK(scores.rfind("source\tcutoff\tprecision\trecall\tf1\n", 0) == 0);
  CHECK(count_lines(scores) == 7);
  CHECK(count_lines(testutil::read_file(out / "report_threshold_sweep.tsv")) == 9);
}

TEST_CASE("cli: reruns are byte-identical") {
  TempDir a("pipe_a"), b("pipe_b");
  const fs::path ca = copy_fixture(a), cb = copy_fixture(b);
  REQUIRE(run_cli("all " + cfg_arg(ca)) == 0);
  REQUIRE(run_cli("all --threads 3 " + cfg_arg(cb)) == 0);
  const auto first = snapshot(a / "out");
  CHECK(first == snapshot(b / "out"));
  REQUIRE(run_cli("all " + cfg_arg(ca)) == 0);
  CHECK(first == snapshot(a / "out"));
}

TEST_CASE("cli: missing upstream artifact exits 3") {
  TempDir dir("pipe_missing");
  const fs::path config = copy_fixture(dir);
  CHECK(run_cli("evaluate " + cfg_arg(config)) == 3);
  REQUIRE(run_cli("prepare " + cfg_arg(config)) == 0);
  REQUIRE(run_cli("link-labels " + cfg_arg(config)) == 0);
  REQUIRE(run_cli("onto-labels " + cfg_arg(config)) == 0);
  CHECK(run_cli("evaluate " + cfg_arg(config)) == 3);
  CHECK(run_cli("report " + cfg_arg(config)) == 3);
  fs::remove(dir / "keyword_store.jsonl");
  CHECK(run_cli("prepare " + cfg_arg(config)) != 0);
}

TEST_CASE("cli: configuration errors exit 2") {
  TempDir dir("pipe_bad");
  const fs::path config = copy_fixture(dir);
  Json cfg = Json::parse(testutil::read_file(config));
  cfg["df_threshold"] = 1.5;
  testutil::write_file(config, cfg.dump());
  CHECK(run_cli("prepare " + cfg_arg(config)) == 2);
  cfg["df_threshold"] = 0.01;
  cfg["cutoffs"] = Json::array();
  testutil::write_file(config, cfg.dump());
  CHECK(run_cli("prepare " + cfg_arg(config)) == 2);
  testutil::write_file(config, "{ not json");
  CHECK(run_cli("prepare " + cfg_arg(config)) == 2);
  CHECK(run_cli("no-such-command " + cfg_arg(config)) == 2);
  CHECK(run_cli("prepare") == 2);
}

TEST_CASE("cli: --top-n bounds the extracted list") {
  TempDir dir("pipe_topn");
  const fs::path config = copy_fixture(dir);
  REQUIRE(run_cli("prepare " + cfg_arg(config)) == 0);
  REQUIRE(run_cli("extract --top-n 3 " + cfg_arg(config)) == 0);
  std::istringstream in(testutil::read_file(dir / "out" / "keywords.jsonl"));
  std::string line;
  std::size_t docs = 0;
  while (std::getline(in, line)) {
    ++docs;
    CHECK(Json::parse(line).at("keywords").size() <= 3);
  }
  CHECK(docs == 11);
}

TEST_CASE("cli: generated full-scale fixture links as constructed") {
  TempDir dir("pipe_gen");
  REQUIRE(run_cli("make-fixture --seed 11 --out \"" + dir.path().string() + "\"") == 0);
  const fs::path config = dir / "config.json";
  REQUIRE(run_cli("prepare " + cfg_arg(config)) == 0);
  REQUIRE(run_cli("link-labels " + cfg_arg(config)) == 0);
  const Json link = Json::parse(testutil::read_file(dir / "out" / "linkage_report.json"));
  CHECK(link.at("proposals_with_publications") == 184);
  CHECK(link.at("linked_publications") == 337);
  CHECK(link.at("publications") == 488);
}
