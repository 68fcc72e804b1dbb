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

// autolabel: command-line driver for the labeling and evaluation pipeline.
//
//   autolabel <command> --config pipeline.json [--top-n N] [--threshold T]
//   autolabel all --config pipeline.json
//   autolabel make-fixture --seed 7 --out DIR
//
// Exit codes: 0 success, 1 internal, 2 config, 3 missing artifact.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "autolabel/autolabel.hpp"

namespace {

namespace fs = std::filesystem;
using namespace autolabel;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMissing = 3;

struct Options {
  std::string config;
  std::optional<std::size_t> top_n;
  std::optional<double> threshold;
  std::optional<unsigned> threads;
  unsigned seed = 7;
  std::string out = "fixture";
};

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

// Writes the full-scale synthetic corpus plus a config that runs on it.
void make_fixture(const Options& opt) {
  const fixture::LinkageFixture fx = fixture::make_linkage_fixture(opt.seed);
  const fs::path dir(opt.out);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "proposals.csv", std::ios::binary);
    write_proposals(out, fx.proposals, fx.columns);
  }
  {
    std::ofstream out(dir / "publications.csv", std::ios::binary);
    write_publications(out, fx.publications);
  }
  std::string store;
  for (const fixture::StoreRecord& r : fx.store_records)
    store += jsonl::line({{"publication_id", r.publication_id},
                          {"source", to_string(r.source)},
                          {"keywords", r.keywords}});
  write_text(dir / "keyword_store.jsonl", store);
  std::string dict = "# surface\tcurie\tontology\tbranch\n";
  for (const OntologyTerm& t : fx.terms)
    dict += t.surface + "\t" + t.curie + "\t" + t.ontology + "\t" + t.branch + "\n";
  write_text(dir / "dictionary.tsv", dict);
  Json cfg = {{"proposals", "proposals.csv"},
              {"publications", "publications.csv"},
              {"keyword_store", "keyword_store.jsonl"},
              {"dictionaries", {"dictionary.tsv"}},
              {"branch_allowlist", {{"FXO", {"organism", "process", "environment"}}}},
              {"output_dir", "out"},
              {"ontology_corpus", "linked"}};
  write_text(dir / "config.json", cfg.dump(2) + "\n");
  std::cout << "wrote " << fx.proposals.size() << " proposals, " << fx.publications.size()
            << " publications (" << fx.shape.linked_proposals << " linked proposals, "
            << fx.shape.linked_publications << " linked publications, "
            << fx.expected_labels() << " planted labels) to " << dir.string() << "\n";
}

void run_pipeline(const std::string& command, const Options& opt) {
  if (opt.config.empty()) throw ConfigError("--config is required");
  pipeline::Pipeline p(pipeline::load_config(opt.config),
                       {opt.top_n, opt.threshold, opt.threads});
  if (command == "all") {
    for (const std::string& c : pipeline::commands()) {
      if (c == "tune") continue;  // explicit only; it is the slow stage
      p.run(c);
    }
    return;
  }
  p.run(command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automated keyphrase labeling and evaluation pipeline"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", opt.config, "pipeline config (JSON)")->required();
    sub->add_option("--top-n", opt.top_n, "keywords to extract per document");
    sub->add_option("--threshold", opt.threshold, "baseline document-frequency threshold");
    sub->add_option("--threads", opt.threads, "worker threads");
    sub->add_option("--seed", opt.seed, "seed for randomized fixtures");
  };
  std::string chosen;
  for (const std::string& c : pipeline::commands()) {
    CLI::App* sub = app.add_subcommand(c, "run the " + c + " stage");
    add_common(sub);
    sub->callback([&chosen, c] { chosen = c; });
  }
  CLI::App* all = app.add_subcommand("all", "prepare through report, without tune");
  add_common(all);
  all->callback([&chosen] { chosen = "all"; });
  CLI::App* mk = app.add_subcommand("make-fixture", "write a synthetic full-scale corpus");
  mk->add_option("--seed", opt.seed, "generator seed");
  mk->add_option("--out", opt.out, "output directory");
  mk->callback([&chosen] { chosen = "make-fixture"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (chosen == "make-fixture")
      make_fixture(opt);
    else
      run_pipeline(chosen, opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const MissingFileError& e) {
    std::cerr << "missing artifact: " << e.path() << "\n";
    return kExitMissing;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
