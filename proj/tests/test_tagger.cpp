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

#include "isadl/tagger.hpp"
#include "test_util.hpp"

using namespace isadl;
using testutil::lexicon;

namespace {

std::string tagged(const std::string& s) {
  std::string out;
  for (const auto& t : tag(s, lexicon())) {
    if (!out.empty()) out += " ";
    out += t.lexeme + "/" + t.tag;
  }
  return out;
}

}  // namespace

TEST_CASE("copular sentences") {
  CHECK(tagged("John is a student") == "John/NNP is/VBX a/DT student/NN");
  CHECK(tagged("Some women are smokers") ==
        "some/DT women/NNS are/VBX smokers/NNS");
}

TEST_CASE("unknown words: capitalized become NNP, rest NN") {
  CHECK(tagged("Zorblax is a vehicle") ==
        "Zorblax/NNP is/VBX a/DT vehicle/NN");
  CHECK(tagged("a glorbat is red") == "a/DT glorbat/NN is/VBX red/NN");
}

TEST_CASE("pre-tagged input folds copulas onto VBX and rewrites FW") {
  auto toks = parse_pretagged("Glorblat_FW is_VBZ a_DT vehicle_NN");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0].lexeme == "Glorblat");
  CHECK(toks[0].tag == "NN");  // FW never survives
  CHECK(toks[1].tag == "VBX");
  CHECK_THROWS_AS(parse_pretagged("brokentoken"), TaggerError);
  CHECK_THROWS_AS(parse_pretagged("   "), TaggerError);
}

TEST_CASE("no output token carries FW") {
  for (const auto& line :
       read_corpus(testutil::kCorpusDir + "/all68.txt")) {
    for (const auto& t : tag(line, lexicon())) CHECK(t.tag != "FW");
  }
}

TEST_CASE("proper noun runs merge") {
  CHECK(tagged("King Williams is brave") ==
        "King Williams/NNP is/VBX brave/JJ");
  CHECK(tagged("Intel Pentium 4 is a microprocessor") ==
        "Intel Pentium 4/NNP is/VBX a/DT microprocessor/NN");
}

TEST_CASE("multiword lexicon entries merge") {
  CHECK(tagged("Eventually sun is a black hole") ==
        "eventually/RB sun/NN is/VBX a/DT black hole/NN");
}

TEST_CASE("punctuation and possessives split") {
  CHECK(tagged("Boys, such as John and Joe, are students") ==
        "boys/NNS ,/, such/DT as/IN John/NNP and/CC Joe/NNP ,/, are/VBX "
        "students/NNS");
  CHECK(tagged("John is Mary's brother") ==
        "John/NNP is/VBX Mary/NNP 's/POS brother/NN");
}

TEST_CASE("sentence-final period is dropped") {
  CHECK(tagged("John is now a student.") ==
        "John/NNP is/VBX now/RB a/DT student/NN");
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(tag("", lexicon()), TaggerError);
  CHECK_THROWS_AS(tag("   ", lexicon()), TaggerError);
}

TEST_CASE("tagging is idempotent over the corpus") {
  for (const auto& line :
       read_corpus(testutil::kCorpusDir + "/all68.txt")) {
    auto first = tag(line, lexicon());
    auto second = tag(detokenize(first), lexicon());
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].lexeme == second[i].lexeme);
      CHECK(first[i].tag == second[i].tag);
    }
  }
}

TEST_CASE("token indexes strictly increase") {
  for (const auto& line : read_corpus(testutil::kCorpusDir + "/all68.txt")) {
    auto toks = tag(line, lexicon());
    for (size_t i = 0; i < toks.size(); ++i)
      CHECK(toks[i].index == static_cast<int>(i));
  }
}

TEST_CASE("singular_noun handles irregulars and suffixes") {
  CHECK(singular_noun("men") == "man");
  CHECK(singular_noun("women") == "woman");
  CHECK(singular_noun("children") == "child");
  CHECK(singular_noun("people") == "person");
  CHECK(singular_noun("studies") == "study");
  CHECK(singular_noun("classes") == "class");
  CHECK(singular_noun("cats") == "cat");
  CHECK(singular_noun("student") == "student");
}
