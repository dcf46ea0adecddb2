// Copyright 2026 The isadl Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "isadl/preprocess.hpp"
#include "test_util.hpp"

using namespace isadl;
using testutil::lexicon;

namespace {

std::vector<SimpleSentence> extract(const std::string& s, int idx = 0) {
  return extract_triples(tag(s, lexicon()), lexicon(), idx);
}

std::vector<std::string> extract_texts(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& e : extract(s)) out.push_back(e.text());
  return out;
}

SimpleSentence norm_one(const std::string& s,
                        const CanonicalObjects& canon = {}) {
  auto simples = extract(s);
  REQUIRE(simples.size() == 1);
  return normalize(singularize(simples[0], lexicon()), lexicon(), canon);
}

}  // namespace

TEST_CASE("compound sentence expands to six simple sentences") {
  auto texts = extract_texts(
      "John and Joe, who are intelligent students, are student body and "
      "greek house members");
  REQUIRE(texts.size() == 6);
  CHECK(texts[0] == "John are intelligent students");
  CHECK(texts[1] == "Joe are intelligent students");
  CHECK(texts[2] == "John are student body members");
  CHECK(texts[3] == "John are greek house members");
  CHECK(texts[4] == "Joe are student body members");
  CHECK(texts[5] == "Joe are greek house members");
}

TEST_CASE("disjunctive subject with plural clause yields three sentences") {
  auto texts = extract_texts(
      "Either John or Joe, who are good students, is student body member");
  REQUIRE(texts.size() == 3);
  CHECK(texts[0] == "John are good students");
  CHECK(texts[1] == "Joe are good students");
  CHECK(texts[2] == "either John or Joe is student body member");
}

TEST_CASE("disjunctive subject with singular clause stays compound") {
  auto texts = extract_texts(
      "Either John or Joe, who is good student, is student body member");
  REQUIRE(texts.size() == 2);
  CHECK(texts[0] == "either John or Joe is good student");
  CHECK(texts[1] == "either John or Joe is student body member");
}

TEST_CASE("adjectival secondary-subject clause splits with merged modifier") {
  auto texts = extract_texts("John is a student who is hard-working");
  REQUIRE(texts.size() == 2);
  CHECK(texts[0] == "John is a hard-working student");
  CHECK(texts[1] == "hard-working student is hard-working");
}

TEST_CASE("whereas compounds split into independent sentences") {
  auto texts =
      extract_texts("Apple is a fruit whereas cauliflower is a vegetable");
  REQUIRE(texts.size() == 2);
  CHECK(texts[0] == "apple is a fruit");
  CHECK(texts[1] == "cauliflower is a vegetable");
}

TEST_CASE("noun secondary clause is kept whole for the complex template") {
  auto texts = extract_texts("Cat is an animal that is a carnivorous mammal");
  REQUIRE(texts.size() == 1);
}

TEST_CASE("expansion count law: m*n and m*n + m") {
  // 2 subjects x 2 objects, no clause
  auto a = extract("John and Joe are smokers and activists");
  CHECK(a.size() == 4);
  // 2 subjects x 1 object + distributing clause
  auto b = extract("John and Joe, who are smokers, are activists");
  CHECK(b.size() == 2 * 1 + 2);
}

TEST_CASE("source_index is carried by every expansion") {
  auto simples = extract(
      "John and Joe, who are intelligent students, are student body and "
      "greek house members",
      7);
  for (size_t i = 0; i < simples.size(); ++i) {
    CHECK(simples[i].source_index == 7);
    CHECK(simples[i].expansion_id == static_cast<int>(i));
  }
}

TEST_CASE("non IS-A input is rejected with the source index") {
  auto toks = tag("Green ideas sleep furiously together", lexicon());
  try {
    extract_triples(toks, lexicon(), 3);
    FAIL("expected rejection");
  } catch (const SentenceRejected& e) {
    CHECK(e.code == "NotIsaSentence");
    CHECK(e.source_index == 3);
  }
}

TEST_CASE("temporal clause folds in for a shared subject, rejects otherwise") {
  auto texts = extract_texts("John was a student when he was young");
  REQUIRE(texts.size() == 1);
  CHECK(texts[0] == "John was a young student");
  CHECK_THROWS_AS(extract("John was a student when Elizabeth was queen"),
                  SentenceRejected);
}

TEST_CASE("spatial clauses are rejected") {
  CHECK_THROWS_AS(extract("John is a student where he is also a TA"),
                  SentenceRejected);
}

TEST_CASE("singularize records plurality and rewrites plurals") {
  auto simples = extract("Some men are hard working");
  REQUIRE(simples.size() == 1);
  SimpleSentence s = singularize(simples[0], lexicon());
  CHECK(s.text() == "some man is hard working");
  CHECK(s.subject_was_plural);

  auto already = extract("John is a student");
  SimpleSentence t = singularize(already[0], lexicon());
  CHECK(t.text() == "John is a student");
  CHECK_FALSE(t.subject_was_plural);
  CHECK_FALSE(t.object_was_plural);

  auto past = extract("Mammoths were huge");
  SimpleSentence u = singularize(past[0], lexicon());
  CHECK(u.text() == "mammoth was huge");
  CHECK(u.subject_was_plural);
}

TEST_CASE("singularize never alters NNP tokens") {
  for (const auto& line : read_corpus(testutil::kCorpusDir + "/all68.txt")) {
    for (const auto& s : extract(line)) {
      SimpleSentence t = singularize(s, lexicon());
      REQUIRE(t.tokens.size() == s.tokens.size());
      for (size_t i = 0; i < s.tokens.size(); ++i)
        if (s.tokens[i].tag == "NNP")
          CHECK(s.tokens[i].lexeme == t.tokens[i].lexeme);
    }
  }
}

TEST_CASE("normalize rewrites IS-A, quantifier, and clausal variants") {
  CHECK(norm_one("John happens to be a good student").text() ==
        "John is a good student");
  CHECK(norm_one("Mary, as a student, is good").text() ==
        "Mary , that is a student , is good");
  CHECK(norm_one("Nearly all men are student").text() == "some man is student");
  CHECK(norm_one("Tangerine and orange are similar").text() ==
        "tangerine like orange");
  CHECK(norm_one("Egg-plant and brinjal are same").text() ==
        "egg-plant same as brinjal");
}

TEST_CASE("numeric object modifiers are spelled out") {
  CHECK(norm_one("John is 5 foot tall").text() == "John is five foot tall");
  CHECK(norm_one("John is 5 ft. tall").text() == "John is five foot tall");
}

TEST_CASE("the over a plural subject normalizes to some") {
  CHECK(norm_one("The activists are some students").text() ==
        "some activist is some student");
  CHECK(norm_one("The woman is a student").text() == "the woman is a student");
}

TEST_CASE("normalize is idempotent over the corpus") {
  for (const auto& line : read_corpus(testutil::kCorpusDir + "/all68.txt")) {
    for (const auto& s : extract(line)) {
      SimpleSentence once = normalize(singularize(s, lexicon()), lexicon());
      SimpleSentence twice = normalize(once, lexicon());
      CHECK(once.text() == twice.text());
      CHECK(once.isa_kind == twice.isa_kind);
    }
  }
}

TEST_CASE("object synonyms canonicalize to the first seen form") {
  const Lexicon& lex = lexicon();
  CanonicalObjects canon;
  auto first = singularize(extract("Mary is diligent")[0], lex);
  note_canonical_object(first, lex, &canon);
  auto second = singularize(extract("John is hard-working")[0], lex);
  note_canonical_object(second, lex, &canon);
  CHECK(normalize(second, lex, canon).text() == "John is diligent");
  // first occurrence wins as canonical; diligent itself is unchanged
  CHECK(normalize(first, lex, canon).text() == "Mary is diligent");
}

TEST_CASE("word salad never crashes the pipeline") {
  std::mt19937 rng(123);
  const char* pool[] = {"is",   "a",    "the",  "cat",  "such", "as",
                        "and",  "or",   ",",    "that", "who",  "only",
                        "5",    "ft.",  "tall", "no",   "all",  "John",
                        "than", "more", "when", "he",   "was",  "includes"};
  std::vector<std::string> lines;
  for (int t = 0; t < 300; ++t) {
    std::string s;
    int n = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) {
      if (i) s += " ";
      s += pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
    }
    lines.push_back(s);
  }
  PipelineResult r = run_pipeline(lines, lexicon());
  CHECK(r.sentences.size() == lines.size());
  for (const auto& s : r.sentences)
    if (s.rejected) CHECK_FALSE(s.reject_code.empty());
}

TEST_CASE("corpus source indexes partition the trace") {
  auto lines = read_corpus(testutil::kCorpusDir + "/all68.txt");
  PipelineResult r = run_pipeline(lines, lexicon());
  REQUIRE(r.sentences.size() == lines.size());
  std::set<int> seen;
  for (const auto& s : r.sentences) CHECK(seen.insert(s.source_index).second);
  CHECK(seen.size() == lines.size());
}
