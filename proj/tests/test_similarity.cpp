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

#include <random>
#include <string>

#include "autolabel/similarity.hpp"
#include "catch_amalgamated.hpp"
#include "support/oracles.hpp"

using namespace autolabel;
using Catch::Matchers::WithinAbs;

namespace {
const DedupMethod kAll[] = {DedupMethod::kLevenshtein, DedupMethod::kSequenceMatcher,
                            DedupMethod::kJaroWinkler};
}

TEST_CASE("similarity: identical and empty strings") {
  for (DedupMethod m : kAll) {
    CHECK(similarity("genome", "genome", m) == 1.0);
    CHECK(similarity("", "", m) == 1.0);
    CHECK(similarity("", "x", m) == 0.0);
    CHECK(similarity("x", "", m) == 0.0);
  }
}

TEST_CASE("similarity: analytic and reference values") {
  CHECK_THAT(levenshtein_similarity("abc", "abd"), WithinAbs(1.0 - 1.0 / 3.0, 1e-12));
  CHECK_THAT(jaro_winkler_similarity("martha", "marhta"), WithinAbs(0.9611, 5e-5));
  CHECK_THAT(jaro_similarity("martha", "marhta"), WithinAbs(0.9444, 5e-5));
  CHECK_THAT(jaro_winkler_similarity("dwayne", "duane"), WithinAbs(0.84, 5e-5));
  CHECK_THAT(jaro_winkler_similarity("dixon", "dicksonx"), WithinAbs(0.8133, 5e-5));
  // Ratios reported by Python's difflib.SequenceMatcher with autojunk off.
  CHECK_THAT(sequence_matcher_similarity("abcd", "bcde"), WithinAbs(0.75, 1e-12));
  CHECK_THAT(sequence_matcher_similarity("genome", "genomes"), WithinAbs(12.0 / 13.0, 1e-12));
  CHECK_THAT(sequence_matcher_similarity("soil carbon", "carbon soil"), WithinAbs(12.0 / 22.0, 1e-12));
  CHECK_THAT(sequence_matcher_similarity("microbial community", "community"),
             WithinAbs(18.0 / 28.0, 1e-12));
  CHECK_THAT(sequence_matcher_similarity("abxcd", "abcd"), WithinAbs(8.0 / 9.0, 1e-12));
}

TEST_CASE("similarity: sequence matcher depends on argument order") {
  CHECK_THAT(sequence_matcher_similarity("soil fixation e-coli", "fixation soil soil"),
             WithinAbs(12.0 / 19.0, 1e-12));
  CHECK_THAT(sequence_matcher_similarity("fixation soil soil", "soil fixation e-coli"),
             WithinAbs(11.0 / 19.0, 1e-12));
}

TEST_CASE("similarity: code points, not bytes") {
  CHECK(levenshtein_similarity("\xC3\xA9", "e") == 0.0);
  CHECK_THAT(levenshtein_similarity("caf\xC3\xA9", "cafe"), WithinAbs(0.75, 1e-12));
  CHECK_THAT(sequence_matcher_similarity("caf\xC3\xA9", "cafe"), WithinAbs(0.75, 1e-12));
}

TEST_CASE("similarity: agrees with brute-force definitions and stays in range") {
  std::mt19937 rng(51);
  const std::string alphabet = "abcde ";
  for (int i = 0; i < 3000; ++i) {
    std::string a, b;
    for (std::size_t k = rng() % 12; k > 0; --k) a.push_back(alphabet[rng() % alphabet.size()]);
    for (std::size_t k = rng() % 12; k > 0; --k) b.push_back(alphabet[rng() % alphabet.size()]);
    for (DedupMethod m : kAll) {
      const double s = similarity(a, b, m);
      INFO(a << " | " << b << " | " << to_string(m));
      CHECK(s >= 0.0);
      CHECK(s <= 1.0);
      CHECK_THAT(s, WithinAbs(oracle::similarity(a, b, m), 1e-12));
      if (m != DedupMethod::kSequenceMatcher) CHECK_THAT(s, WithinAbs(similarity(b, a, m), 1e-12));
    }
  }
}

TEST_CASE("dedup method names round-trip") {
  for (DedupMethod m : kAll) CHECK(dedup_method_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(dedup_method_from_string("COSINE"), ConfigError);
}
