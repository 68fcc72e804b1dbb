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

// Optional PubMed E-utilities client. The offline keyword store is the normal
// input path; this fetcher fills a store from efetch XML through a caller
// supplied transport, so no network code lives in the library.

#ifndef AUTOLABEL_PUBMED_HPP_
#define AUTOLABEL_PUBMED_HPP_

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "autolabel/error.hpp"
#include "autolabel/linkage.hpp"
#include "autolabel/text_util.hpp"

namespace autolabel::pubmed {

inline constexpr std::string_view kEfetchUrl =
    "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/efetch.fcgi?db=pubmed&retmode=xml&id=";

struct HttpResponse {
  int status = 0;
  std::string body;
};

// GET `url`; throws on connection failure.
using Transport = std::function<HttpResponse(const std::string& url)>;

struct PublicationKeywords {
  std::string publication_id;
  std::vector<RawKeyword> keywords;
};

namespace detail {

namespace pt = boost::property_tree;

// Element text including the text of nested inline markup (<i>, <sup>...).
inline std::string inner_text(const pt::ptree& node) {
  std::string out = node.get_value<std::string>();
  for (const auto& [name, child] : node) {
    if (name == "<xmlattr>" || name == "<xmlcomment>") continue;
    out += inner_text(child);
  }
  return out;
}

inline std::string collapsed_text(const pt::ptree& node) {
  return text::join(text::split_whitespace(inner_text(node)), " ");
}

inline void walk(const pt::ptree& node, const std::string& pmid,
                 std::vector<RawKeyword>& out) {
  for (const auto& [name, child] : node) {
    if (name == "Keyword") {
      std::string t = clean_keyword_text(collapsed_text(child), KeywordSource::kPubmedAuthor);
      if (!t.empty()) out.push_back({std::move(t), KeywordSource::kPubmedAuthor, pmid});
    } else if (name == "MeshHeading") {
      if (auto d = child.get_child_optional("DescriptorName")) {
        std::string t = clean_keyword_text(collapsed_text(*d), KeywordSource::kMesh);
        if (!t.empty()) out.push_back({std::move(t), KeywordSource::kMesh, pmid});
      }
    } else {
      walk(child, pmid, out);
    }
  }
}

}  // namespace detail

/// Extracts author keywords and MeSH descriptors from an efetch payload.
inline PublicationKeywords parse_efetch_xml(const std::string& pmid, const std::string& xml) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(xml);
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("PMID " + pmid + ": malformed efetch payload: " + e.message());
  }
  PublicationKeywords result{pmid, {}};
  detail::walk(tree, pmid, result.keywords);
  return result;
}

inline PublicationKeywords fetch_pubmed_keywords(const std::string& pmid,
                                                 const Transport& transport) {
  HttpResponse resp;
  try {
    resp = transport(std::string(kEfetchUrl) + pmid);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw RetryableError("PMID " + pmid + ": transport failure: " + e.what(), 0);
  }
  if (resp.status != 200)
    throw RetryableError("PMID " + pmid + ": HTTP " + std::to_string(resp.status),
                         resp.status);
  return parse_efetch_xml(pmid, resp.body);
}

/// Issues requests one at a time, at least `spacing` apart.
class PoliteFetcher {
 public:
  using Clock = std::chrono::steady_clock;
  using Sleeper = std::function<void(Clock::duration)>;

  PoliteFetcher(Transport transport, Clock::duration spacing,
                Sleeper sleeper = [](Clock::duration d) { std::this_thread::sleep_for(d); })
      : transport_(std::move(transport)), spacing_(spacing), sleep_(std::move(sleeper)) {}

  PublicationKeywords fetch(const std::string& pmid) {
    if (last_) {
      const auto elapsed = Clock::now() - *last_;
      if (elapsed < spacing_) sleep_(spacing_ - elapsed);
    }
    last_ = Clock::now();
    return fetch_pubmed_keywords(pmid, transport_);
  }

  // Fetches every PMID into `store`; retryable failures are skipped and
  // returned.
  std::vector<std::string> fill(const std::vector<std::string>& pmids, KeywordStore& store) {
    std::vector<std::string> failed;
    for (const std::string& pmid : pmids) {
      try {
        PublicationKeywords pk = fetch(pmid);
        std::vector<std::string> author, mesh;
        for (const RawKeyword& k : pk.keywords)
          (k.source == KeywordSource::kMesh ? mesh : author).push_back(k.text);
        store.add(pmid, KeywordSource::kPubmedAuthor, author);
        store.add(pmid, KeywordSource::kMesh, mesh);
      } catch (const RetryableError&) {
        failed.push_back(pmid);
      }
    }
    return failed;
  }

 private:
  Transport transport_;
  Clock::duration spacing_;
  Sleeper sleep_;
  std::optional<Clock::time_point> last_;
};

}  // namespace autolabel::pubmed

#endif  // AUTOLABEL_PUBMED_HPP_
