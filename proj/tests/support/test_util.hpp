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

#ifndef AUTOLABEL_TESTS_SUPPORT_TEST_UTIL_HPP_
#define AUTOLABEL_TESTS_SUPPORT_TEST_UTIL_HPP_

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

namespace testutil {

namespace fs = std::filesystem;

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("autolabel_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Random prose over a small vocabulary: mixed case, stopwords, hyphenated and
// alphanumeric tokens, numbers and sentence punctuation. Sized in tokens.
inline std::string random_prose(std::mt19937& rng, std::size_t tokens) {
  static const std::vector<std::string> vocab = {
      "genome", "Genome", "GENOME", "soil", "Soil", "carbon", "cycling", "microbial",
      "community", "Community", "DNA", "RNA", "sequencing", "methane", "seep", "archaea",
      "nitrogen", "fixation", "root", "nodule", "cell", "wall", "cell-wall", "co2",
      "the", "of", "and", "in", "to", "a", "for", "with", "is", "by", "was", "it",
      "switchgrass", "drought", "lignin", "fungi", "2019", "42", "pH", "E-coli", "x"};
  static const std::vector<std::string> enders = {".", "!", "?", ",", ";", ""};
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  std::uniform_int_distribution<std::size_t> end(0, enders.size() - 1);
  std::bernoulli_distribution punct(0.15);
  std::string out;
  for (std::size_t i = 0; i < tokens; ++i) {
    if (i) out += ' ';
    out += vocab[word(rng)];
    if (punct(rng)) out += enders[end(rng)];
  }
  return out;
}

}  // namespace testutil

#endif  // AUTOLABEL_TESTS_SUPPORT_TEST_UTIL_HPP_
