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

// Table-coverage properties: every bundled lexical variant must drive the
// pipeline to the same batch as its normal form.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isadl/text.hpp"
#include "test_util.hpp"

using namespace isadl;
using testutil::lexicon;
using testutil::translate_lines;

using Lines = std::vector<std::string>;

TEST_CASE("every hyponymy variant reads as plain subsumption") {
  for (const auto& [surface, kind] : lexicon().isa_variants) {
    if (kind != IsaKind::Hyponymy) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines("Cat " + surface + " animal") ==
          Lines{"Cat <= Animal"});
  }
}

TEST_CASE("every hypernymy variant inverts the subsumption") {
  for (const auto& [surface, kind] : lexicon().isa_variants) {
    if (kind != IsaKind::Hypernymy) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines("Animal " + surface + " cat") ==
          Lines{"Cat <= Animal"});
  }
}

TEST_CASE("every equivalence variant identifies the individuals") {
  for (const auto& [surface, kind] : lexicon().isa_variants) {
    if (kind != IsaKind::SameAs) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines("John " + surface + " Joe") ==
          Lines{"{John} == {Joe}"});
  }
}

TEST_CASE("every similarity variant builds the commonality concept") {
  for (const auto& [surface, kind] : lexicon().isa_variants) {
    if (kind != IsaKind::Like) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines("Tangerine " + surface + " orange") ==
          Lines{"Tangerine <= OrangeLike", "Orange <= OrangeLike"});
  }
}

TEST_CASE("every includes variant checks hypernymy before holonymy") {
  for (const auto& [surface, kind] : lexicon().isa_variants) {
    if (kind != IsaKind::Includes) continue;
    INFO("variant: " << surface);
    // supported hypernymy
    CHECK(translate_lines("Vehicle " + surface + " sedan") ==
          Lines{"Sedan <= Vehicle"});
    // unsupported: aggregation
    CHECK(translate_lines("School " + surface + " students and teachers") ==
          Lines{"School == all include . (Student or Teacher)"});
  }
}

TEST_CASE("every modal variant routes through its role") {
  std::map<IsaKind, std::string> role = {
      {IsaKind::MayBe, "mayBe"},         {IsaKind::CanBecome, "canBecome"},
      {IsaKind::CanBe, "canBe"},         {IsaKind::IsNow, "isNow"},
      {IsaKind::IsSometimes, "isSometimes"}};
  for (const auto& [surface, kind] : lexicon().isa_variants) {
    auto it = role.find(kind);
    if (it == role.end()) continue;
    INFO("variant: " << surface);
    Lines got = translate_lines("John " + surface + " a student");
    REQUIRE(got.size() == 4);
    CHECK(got[0].find("== all " + it->second + " . Student") !=
          std::string::npos);
    CHECK(got.back() == "Person(John)");
  }
  for (const auto& [surface, kind] : lexicon().isa_variants) {
    if (kind != IsaKind::IsStill) continue;
    INFO("variant: " << surface);
    Lines got = translate_lines("John " + surface + " a student");
    CHECK(got[0] ==
          "IsStillStudentPerson <= Student and (all PPR . Student)");
  }
}

TEST_CASE("every some-type quantifier induces the subclass pair") {
  for (const auto& [surface, kind] : lexicon().quantifier_variants) {
    if (kind != QuantifierKind::Some) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines(isadl::capitalize(surface) + " men are students") ==
          Lines{"StudentMan <= Man", "StudentMan <= Student"});
  }
}

TEST_CASE("every all-type quantifier reads generically") {
  for (const auto& [surface, kind] : lexicon().quantifier_variants) {
    if (kind != QuantifierKind::All) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines(isadl::capitalize(surface) + " cats are mammals") ==
          Lines{"Cat <= Mammal"});
  }
}

TEST_CASE("every a-type quantifier plays safe with an instance") {
  for (const auto& [surface, kind] : lexicon().quantifier_variants) {
    if (kind != QuantifierKind::A) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines(isadl::capitalize(surface) + " man is a student") ==
          Lines{"StudentMan(man_1)", "StudentMan <= Man",
                "StudentMan <= Student"});
  }
}

TEST_CASE("every the-type quantifier names the singular instance") {
  for (const auto& [surface, kind] : lexicon().quantifier_variants) {
    if (kind != QuantifierKind::The) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines(isadl::capitalize(surface) + " man is a student") ==
          Lines{"StudentMan(man_1)", "StudentMan <= Man",
                "StudentMan <= Student"});
  }
}

TEST_CASE("every no-type quantifier is disjointness") {
  for (const auto& [surface, kind] : lexicon().quantifier_variants) {
    if (kind != QuantifierKind::No) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines(isadl::capitalize(surface) + " human is a fruit") ==
          Lines{"Human <= not Fruit"});
  }
}

TEST_CASE("every such-as marker carries the exemplification") {
  for (const auto& [surface, kind] : lexicon().quantifier_variants) {
    if (kind != QuantifierKind::SuchAs) continue;
    INFO("variant: " << surface);
    CHECK(translate_lines("Boys, " + surface + " John and Joe, are students") ==
          Lines{"JohnJoeBoy <= Student", "JohnJoeBoy <= Boy",
                "JohnJoeBoy(John)", "JohnJoeBoy(Joe)"});
  }
}

TEST_CASE("every that-is clausal marker opens the same clause") {
  Lines expected = translate_lines("Mary, that is a student, is good");
  REQUIRE_FALSE(expected.empty());
  for (const auto& [surface, kind] : lexicon().clausal_variants) {
    if (kind != ClauseKind::ThatIs) continue;
    INFO("variant: " << surface);
    // relative pronouns keep an explicit copula; null-Cl markers carry it
    static const std::set<std::string> kRelative = {"that", "who", "whom",
                                                    "which", "whose"};
    std::string clause = kRelative.count(surface)
                             ? surface + " is a student"
                             : surface + " a student";
    CHECK(translate_lines("Mary, " + clause + ", is good") == expected);
  }
}
