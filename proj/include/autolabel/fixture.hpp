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

// Seeded synthetic corpora with known ground truth. Words are pseudo-words
// built from consonant-vowel syllables over the vowels 'a' and 'o'; no Porter
// rule fires on them, so surface, lowercase and stem coincide and every
// count below is fixed by construction rather than by the pipeline.

#ifndef AUTOLABEL_FIXTURE_HPP_
#define AUTOLABEL_FIXTURE_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "autolabel/corpus.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/linkage.hpp"
#include "autolabel/ontoannot.hpp"
#include "autolabel/textprep.hpp"

namespace autolabel::fixture {

using Rng = std::mt19937;

/// Distinct pseudo-words, 2 to 4 syllables each.
class Lexicon {
 public:
  Lexicon(Rng& rng, std::size_t count) {
    static constexpr char kConsonants[] = "bdfgklmnprtvz";
    static constexpr char kVowels[] = "ao";
    std::uniform_int_distribution<int> syl(2, 4), cons(0, 12), vow(0, 1);
    std::set<std::string> seen;
    while (words_.size() < count) {
      std::string w;
      for (int s = syl(rng); s > 0; --s) {
        w.push_back(kConsonants[cons(rng)]);
        w.push_back(kVowels[vow(rng)]);
      }
      if (seen.insert(w).second) words_.push_back(std::move(w));
    }
  }

  const std::string& operator[](std::size_t i) const { return words_.at(i); }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::vector<std::string> words_;
};

namespace detail {

inline const std::vector<std::string>& glue_words() {
  static const std::vector<std::string> words = {"the", "of",   "and", "in", "to",
                                                 "a",   "for",  "with", "on", "is",
                                                 "by",  "from", "this", "we", "are"};
  return words;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

// A sentence of filler where content words mostly alternate with glue words.
// `phrases` are inserted verbatim, fenced by glue words on both sides.
inline std::string sentence(Rng& rng, const std::vector<std::string>& filler,
                            const std::vector<std::string>& phrases, std::size_t length,
                            double adjacent_content = 0.3) {
  std::vector<std::string> tokens;
  std::bernoulli_distribution adjacent(adjacent_content);
  while (tokens.size() < length) {
    tokens.push_back(pick(rng, filler));
    if (adjacent(rng)) tokens.push_back(pick(rng, filler));
    tokens.push_back(pick(rng, glue_words()));
  }
  for (const std::string& p : phrases) {
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, tokens.size())(rng);
    const std::vector<std::string> insert = {pick(rng, glue_words()), p,
                                             pick(rng, glue_words())};
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(at), insert.begin(),
                  insert.end());
  }
  tokens.front() = capitalize(tokens.front());
  return text::join(tokens, " ") + ".";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Full-scale linkage corpus.

struct LinkageShape {
  std::size_t proposals = 2143;
  std::size_t publications = 488;
  std::size_t linked_proposals = 184;
  std::size_t linked_publications = 337;
};

struct StoreRecord {
  std::string publication_id;
  KeywordSource source;
  std::vector<std::string> keywords;
};

struct LinkageFixture {
  LinkageShape shape;
  std::vector<std::string> columns;
  std::vector<ProposalRecord> proposals;
  std::vector<PublicationRecord> publications;
  std::vector<StoreRecord> store_records;
  // Phrases planted in each linked proposal and carried by its publications;
  // each is a distinct stem sequence, so these are exactly its labels.
  std::map<ProposalId, std::set<std::string>> planted;
  // Terms for an ontology dictionary over the same vocabulary.
  std::vector<OntologyTerm> terms;

  std::size_t expected_labels() const {
    std::size_t n = 0;
    for (const auto& [id, p] : planted) n += p.size();
    return n;
  }

  KeywordStore store() const {
    KeywordStore s;
    for (const StoreRecord& r : store_records) s.add(r.publication_id, r.source, r.keywords);
    return s;
  }
};

inline LinkageFixture make_linkage_fixture(unsigned seed, LinkageShape shape = {}) {
  if (shape.linked_proposals > shape.proposals ||
      shape.linked_publications < shape.linked_proposals ||
      shape.linked_publications > shape.publications)
    throw ConfigError("inconsistent fixture shape");
  Rng rng(seed);
  const Lexicon lex(rng, 1400);
  // Disjoint partitions: filler text, plantable topics, decoys never in text.
  const std::vector<std::string> filler(lex.words().begin(), lex.words().begin() + 600);
  const std::vector<std::string> topics(lex.words().begin() + 600, lex.words().begin() + 1200);
  const std::vector<std::string> decoys(lex.words().begin() + 1200, lex.words().end());

  LinkageFixture fx;
  fx.shape = shape;
  fx.columns = {"proposal_id", "program", "year"};
  for (const std::string& f : default_semantic_fields()) fx.columns.push_back(f);

  std::vector<ProposalId> ids;
  for (std::size_t i = 0; i < shape.proposals; ++i)
    ids.push_back(static_cast<ProposalId>(500000 + 7 * i));
  std::vector<ProposalId> shuffled = ids;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const std::vector<ProposalId> linked(shuffled.begin(),
                                       shuffled.begin() +
                                           static_cast<std::ptrdiff_t>(shape.linked_proposals));

  // Publications per linked proposal: one each, the rest spread at random.
  std::map<ProposalId, std::size_t> pub_count;
  for (ProposalId id : linked) pub_count[id] = 1;
  for (std::size_t k = shape.linked_proposals; k < shape.linked_publications; ++k)
    ++pub_count[detail::pick(rng, linked)];

  // Planted phrases: unigrams, bigrams and "x of y" trigrams over distinct
  // topic words.
  auto make_phrases = [&](std::size_t count) {
    std::vector<std::string> out;
    std::set<std::string> used;
    std::uniform_int_distribution<int> kind(0, 9);
    while (out.size() < count) {
      const int k = kind(rng);
      std::vector<std::string> words;
      const std::size_t n = k < 5 ? 1 : 2;
      while (words.size() < n) {
        const std::string& w = detail::pick(rng, topics);
        if (used.insert(w).second) words.push_back(w);
      }
      out.push_back(k == 9 ? words[0] + " of " + words[1] : text::join(words, " "));
    }
    return out;
  };

  std::uniform_int_distribution<std::size_t> sentence_len(8, 16);
  auto text_block = [&](std::size_t sentences, std::vector<std::string> phrases) {
    std::vector<std::vector<std::string>> per(sentences);
    for (std::string& p : phrases)
      per[std::uniform_int_distribution<std::size_t>(0, sentences - 1)(rng)].push_back(p);
    std::vector<std::string> out;
    for (std::size_t s = 0; s < sentences; ++s)
      out.push_back(detail::sentence(rng, filler, per[s], sentence_len(rng)));
    return text::join(out, " ");
  };

  const std::set<ProposalId> linked_set(linked.begin(), linked.end());
  std::size_t pub_serial = 0;
  auto next_pub_id = [&] { return std::to_string(31000000 + 37 * pub_serial++); };
  std::vector<PublicationRecord> pubs;
  std::uniform_int_distribution<int> year(2010, 2020);

  for (ProposalId id : ids) {
    ProposalRecord rec;
    rec.proposal_id = id;
    const bool is_linked = linked_set.count(id) > 0;
    std::vector<std::string> planted;
    if (is_linked) planted = make_phrases(std::uniform_int_distribution<std::size_t>(2, 9)(rng));
    // Title carries nothing planted; the rest spread over the other fields.
    std::vector<std::vector<std::string>> per_field(default_semantic_fields().size());
    for (const std::string& p : planted)
      per_field[std::uniform_int_distribution<std::size_t>(1, per_field.size() - 1)(rng)]
          .push_back(p);
    rec.fields.emplace_back("program", detail::pick(rng, std::vector<std::string>{
                                                             "CSP", "FICUS", "ETOP"}));
    rec.fields.emplace_back("year", std::to_string(year(rng)));
    for (std::size_t f = 0; f < per_field.size(); ++f) {
      const std::string& name = default_semantic_fields()[f];
      std::string value;
      if (f == 0) {
        value = detail::sentence(rng, topics, {}, 6, 0.6);
        value.pop_back();
      } else if (!(f >= 5 && per_field[f].empty() && rng() % 3 == 0)) {
        value = text_block(std::uniform_int_distribution<std::size_t>(1, 4)(rng), per_field[f]);
      }
      rec.fields.emplace_back(name, std::move(value));
    }
    fx.proposals.push_back(std::move(rec));
    if (!is_linked) continue;

    fx.planted[id] = std::set<std::string>(planted.begin(), planted.end());
    // Each publication carries a slice of the planted phrases plus decoys;
    // together they cover every planted phrase.
    const std::size_t n_pubs = pub_count[id];
    std::vector<std::vector<std::string>> carried(n_pubs);
    for (std::size_t i = 0; i < planted.size(); ++i) carried[i % n_pubs].push_back(planted[i]);
    for (std::size_t i = 0; i < planted.size(); ++i)
      if (rng() % 4 == 0)
        carried[std::uniform_int_distribution<std::size_t>(0, n_pubs - 1)(rng)].push_back(
            planted[i]);
    for (auto& c : carried) {
      const std::string pub_id = next_pub_id();
      pubs.push_back({pub_id, id, detail::sentence(rng, filler, {}, 8, 0.5)});
      std::vector<std::string> wos, pubmed, mesh;
      for (const std::string& p : c) {
        switch (rng() % 3) {
          case 0: wos.push_back(p); break;
          case 1: pubmed.push_back(detail::capitalize(p)); break;
          default: mesh.push_back(detail::capitalize(p) + "/genetics"); break;
        }
      }
      for (int d = static_cast<int>(rng() % 3); d >= 0; --d) {
        std::string decoy = detail::pick(rng, decoys);
        if (rng() % 2) decoy += " " + detail::pick(rng, topics);
        (d % 2 ? wos : mesh).push_back(std::move(decoy));
      }
      if (!wos.empty()) fx.store_records.push_back({pub_id, KeywordSource::kWosAuthor, wos});
      if (!pubmed.empty())
        fx.store_records.push_back({pub_id, KeywordSource::kPubmedAuthor, pubmed});
      if (!mesh.empty()) fx.store_records.push_back({pub_id, KeywordSource::kMesh, mesh});
    }
  }

  // Orphans reference proposal IDs outside the loaded table.
  for (std::size_t k = shape.linked_publications; k < shape.publications; ++k) {
    const std::string pub_id = next_pub_id();
    pubs.push_back({pub_id, static_cast<ProposalId>(900000 + k),
                    detail::sentence(rng, filler, {}, 8, 0.5)});
    fx.store_records.push_back(
        {pub_id, KeywordSource::kWosAuthor, {detail::pick(rng, topics)}});
  }
  std::shuffle(pubs.begin(), pubs.end(), rng);
  fx.publications = std::move(pubs);

  static const std::vector<std::string> branches = {"organism", "process", "environment",
                                                    "method"};
  for (std::size_t i = 0; i < topics.size(); i += 3) {
    std::string surface = topics[i];
    if (i % 2 == 0) surface += " " + topics[(i + 1) % topics.size()];
    fx.terms.push_back({surface, "FX:" + std::to_string(1000000 + i), "FXO",
                        branches[i % branches.size()]});
  }
  return fx;
}

// ---------------------------------------------------------------------------
// Document-frequency corpus: term i occurs in exactly doc_counts[i] of the
// documents.

struct DfCorpus {
  std::vector<Document> documents;
  std::vector<OntologyTerm> terms;
  std::map<std::string, std::size_t> doc_counts;  // surface -> documents
};

inline DfCorpus make_df_corpus(unsigned seed, std::size_t documents = 184) {
  Rng rng(seed);
  const Lexicon lex(rng, 500);
  const std::vector<std::string> filler(lex.words().begin(), lex.words().begin() + 300);
  std::vector<std::size_t> counts = {1, 1, 2, 2, 2, 3, 3, 4, 5, 9, 10, 18, 19, 37, 38,
                                     46, 47, 91, 92, 93, 150, documents};
  std::uniform_int_distribution<std::size_t> any(1, documents);
  while (counts.size() < 60) counts.push_back(any(rng));

  DfCorpus c;
  std::vector<std::vector<std::string>> planted(documents);
  for (std::size_t t = 0; t < counts.size(); ++t) {
    const std::string& surface = lex[300 + t];
    c.terms.push_back({surface, "DF:" + std::to_string(t), "DFO", "root"});
    c.doc_counts[surface] = counts[t];
    std::vector<std::size_t> order(documents);
    for (std::size_t d = 0; d < documents; ++d) order[d] = d;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < counts[t]; ++k) planted[order[k]].push_back(surface);
  }
  for (std::size_t d = 0; d < documents; ++d) {
    std::shuffle(planted[d].begin(), planted[d].end(), rng);
    std::vector<std::string> sentences;
    for (std::size_t i = 0; i < planted[d].size() || sentences.size() < 3; i += 3) {
      std::vector<std::string> chunk;
      for (std::size_t k = i; k < std::min(i + 3, planted[d].size()); ++k)
        chunk.push_back(planted[d][k]);
      sentences.push_back(detail::sentence(rng, filler, chunk, 10));
    }
    c.documents.push_back(make_document(static_cast<ProposalId>(d + 1), text::join(sentences, " ")));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Keyphrase corpus with a controlled share of bigram labels.

struct LabeledCorpus {
  std::vector<Document> documents;
  std::map<ProposalId, LabelSet> labels;
};

/// Each document carries `labels_per_doc` key phrases, a `bigram_share` of
/// them two-word, each repeated in several sentences and fenced by glue
/// words; the rest is filler.
inline LabeledCorpus make_ngram_corpus(unsigned seed, double bigram_share,
                                       std::size_t documents = 40,
                                       std::size_t labels_per_doc = 8) {
  Rng rng(seed);
  const Lexicon lex(rng, 400 + documents * labels_per_doc * 2);
  const std::vector<std::string> filler(lex.words().begin(), lex.words().begin() + 400);
  const std::size_t bigrams =
      static_cast<std::size_t>(std::lround(bigram_share * static_cast<double>(labels_per_doc)));
  std::size_t next = 400;
  LabeledCorpus c;
  std::uniform_int_distribution<std::size_t> repeats(2, 5), sentences(10, 16), len(8, 14);
  for (std::size_t d = 0; d < documents; ++d) {
    const ProposalId id = static_cast<ProposalId>(d + 1);
    LabelSet set;
    set.proposal_id = id;
    std::vector<std::string> phrases;
    for (std::size_t k = 0; k < labels_per_doc; ++k) {
      std::string p = lex[next++];
      if (k < bigrams) p += " " + lex[next++];
      phrases.push_back(p);
      set.add({p, stem_phrase(p), Provenance::kLinkage, {"FIXTURE"}});
    }
    const std::size_t n_sent = sentences(rng);
    std::vector<std::vector<std::string>> per(n_sent);
    for (const std::string& p : phrases)
      for (std::size_t r = repeats(rng); r > 0; --r)
        per[std::uniform_int_distribution<std::size_t>(0, n_sent - 1)(rng)].push_back(p);
    std::vector<std::string> out;
    for (std::size_t s = 0; s < n_sent; ++s)
      out.push_back(detail::sentence(rng, filler, per[s], len(rng)));
    c.documents.push_back(make_document(id, text::join(out, " ")));
    c.labels[id] = std::move(set);
  }
  return c;
}

}  // namespace autolabel::fixture

#endif  // AUTOLABEL_FIXTURE_HPP_
