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

#include <functional>

#include "isadl/translate.hpp"
#include "test_util.hpp"

using namespace isadl;
using testutil::characterize_one;
using testutil::lexicon;
using testutil::translate_lines;

using Lines = std::vector<std::string>;

TEST_CASE("membership with a most specific parent") {
  CHECK(translate_lines("John is a student") ==
        Lines{"Student(John)", "StudentPerson(John)",
              "StudentPerson <= Student", "StudentPerson <= Person"});
}

TEST_CASE("membership nominal fallback without MSP") {
  CHECK(translate_lines("Zorblax is a vehicle") ==
        Lines{"Vehicle(Zorblax)", "VehicleZorblax(Zorblax)",
              "VehicleZorblax <= Vehicle", "VehicleZorblax <= {Zorblax}"});
}

TEST_CASE("inverse membership for includes with a proper-noun object") {
  CHECK(translate_lines("Carnivorous animal includes Kitty") ==
        Lines{"CarnivorousAnimal <= Animal", "CarnivorousAnimal(Kitty)",
              "CarnivorousAnimalCat(Kitty)",
              "CarnivorousAnimalCat <= CarnivorousAnimal",
              "CarnivorousAnimalCat <= Cat"});
}

TEST_CASE("hyponymy and hypernymy") {
  CHECK(translate_lines("Cat is a kind of animal") == Lines{"Cat <= Animal"});
  CHECK(translate_lines("Animal is a category of cat") ==
        Lines{"Cat <= Animal"});
}

TEST_CASE("subject some quantification") {
  CHECK(translate_lines("Some women are smokers") ==
        Lines{"SmokerWoman <= Woman", "SmokerWoman <= Smoker"});
}

TEST_CASE("singular subject the quantification with counter") {
  CHECK(translate_lines("The woman is a student") ==
        Lines{"StudentWoman(woman_1)", "StudentWoman <= Woman",
              "StudentWoman <= Student"});
}

TEST_CASE("object some quantification labels the indefinite object") {
  CHECK(translate_lines("The activists are some students") ==
        Lines{"Student_1Activist <= Activist",
              "Student_1Activist <= Student_1", "Student_1 <= Student"});
}

TEST_CASE("subject no quantification is disjointness") {
  CHECK(translate_lines("No human is a fruit") ==
        Lines{"Human <= not Fruit"});
}

TEST_CASE("no and no cancel out to all and all") {
  CharSentence cs = characterize_one("No man is a student");
  cs.q2 = QuantifierKind::No;
  Batch nn = translate(cs, lexicon());
  cs.q1 = QuantifierKind::All;
  cs.q2 = QuantifierKind::All;
  Batch aa = translate(cs, lexicon());
  REQUIRE(nn.axioms.size() == aa.axioms.size());
  for (size_t i = 0; i < nn.axioms.size(); ++i)
    CHECK(nn.axioms[i].key() == aa.axioms[i].key());
}

TEST_CASE("all 35 quantifier combinations translate") {
  CharSentence base = characterize_one("Man is a student");
  std::vector<std::optional<QuantifierKind>> qs = {
      std::nullopt,          QuantifierKind::A,   QuantifierKind::The,
      QuantifierKind::Some,  QuantifierKind::All, QuantifierKind::No};
  int combos = 0;
  for (const auto& q1 : qs) {
    for (const auto& q2 : qs) {
      if (!q1 && !q2) continue;  // unquantified base case aside
      CharSentence cs = base;
      cs.q1 = q1;
      cs.q2 = q2;
      Batch b = translate(cs, lexicon());
      CHECK_FALSE(b.axioms.empty());
      ++combos;
    }
  }
  CHECK(combos == 35);
}

TEST_CASE("recursive nested modification") {
  CHECK(translate_lines("Wild cat is a mammal") ==
        Lines{"WildCat <= Cat", "WildCat <= Mammal"});
  CHECK(translate_lines("Sea plane is an air vehicle") ==
        Lines{"AirVehicle <= Vehicle", "SeaPlane <= Plane",
              "SeaPlane <= AirVehicle"});
  // no backward modification: HouseBoat is not under House
  Lines houseboat = translate_lines("House boat is a kind of vessel");
  CHECK(houseboat == Lines{"HouseBoat <= Boat", "HouseBoat <= Vessel"});
}

TEST_CASE("three-level nesting emits the paper's chain") {
  Lines got = translate_lines("Either John or Joe is student body member");
  CHECK(got == Lines{"BodyMember <= Member",
                     "StudentBodyMember <= BodyMember",
                     "StudentBodyMember <= StudentMember",
                     "StudentBodyMemberPerson <= StudentBodyMember",
                     "StudentBodyMemberPerson <= Person",
                     "{Joe} or {John} <= StudentBodyMemberPerson"});
}

TEST_CASE("zero modifiers equals the unmodified batch") {
  CHECK(translate_lines("Cat is a mammal") == Lines{"Cat <= Mammal"});
}

TEST_CASE("complex Case 2 builds the modified secondary subject") {
  CHECK(translate_lines("Cat is an animal that is a carnivorous mammal") ==
        Lines{"CarnivorousMammal <= Mammal",
              "CarnivorousMammalAnimal <= CarnivorousMammal",
              "CarnivorousMammalAnimal <= Animal",
              "Cat <= CarnivorousMammalAnimal"});
  // play-safe: the modified concept is created even when uninformative
  CHECK(translate_lines("Cat is a feline that is an animal") ==
        Lines{"AnimalFeline <= Animal", "AnimalFeline <= Feline",
              "Cat <= AnimalFeline"});
}

TEST_CASE("complex Case 3 with reified predicates") {
  CHECK(translate_lines("A cat that is Persian is long-haired") ==
        Lines{"PersianThing == all hasState . Persian",
              "Persian <= Attribute", "Cat <= PersianThing",
              "LongHairedThing == all hasState . LongHaired",
              "LongHaired <= Attribute", "Cat <= LongHairedThing"});
}

TEST_CASE("such-as conjunctive and disjunctive") {
  CHECK(translate_lines("Boys, such as John and Joe, are students") ==
        Lines{"JohnJoeBoy <= Student", "JohnJoeBoy <= Boy",
              "JohnJoeBoy(John)", "JohnJoeBoy(Joe)"});
  CHECK(translate_lines("Boys, such as John or Joe, are students") ==
        Lines{"JoeBoy or JohnBoy <= Student", "JoeBoy or JohnBoy <= Boy",
              "JohnBoy(John)", "JoeBoy(Joe)"});
}

TEST_CASE("such-as with a single exemplar collapses") {
  Lines conj_form = translate_lines("Boys, such as John, are students");
  CHECK(conj_form == Lines{"JohnBoy <= Student", "JohnBoy <= Boy",
                           "JohnBoy(John)"});
}

TEST_CASE("such-as with common-noun exemplars emits no assertions") {
  Lines got = translate_lines("Vehicles, such as cars, are machines");
  CHECK(got == Lines{"CarVehicle <= Machine", "CarVehicle <= Vehicle"});
}

TEST_CASE("compound subject and object unions") {
  CHECK(translate_lines("Cat or dog is pet") ==
        Lines{"Cat or Dog <= Pet"});
  CHECK(translate_lines("Animal is cat or dog") ==
        Lines{"Animal <= Cat or Dog"});
}

TEST_CASE("object reification for things and activities") {
  CHECK(translate_lines("Mary is beautiful") ==
        Lines{"BeautifulThing == all hasState . Beautiful",
              "Beautiful <= Attribute", "BeautifulThing(Mary)",
              "BeautifulThingPerson(Mary)",
              "BeautifulThingPerson <= BeautifulThing",
              "BeautifulThingPerson <= Person"});
  CHECK(translate_lines("Running is healthy") ==
        Lines{"Running <= HealthyActivity", "HealthyActivity <= Activity"});
  // NN object never reifies
  CHECK(translate_lines("Man is an animal") == Lines{"Man <= Animal"});
}

TEST_CASE("gerund modification is direction-ambiguous") {
  Batch b = translate(characterize_one("Playing soccer is healthy"), lexicon());
  CHECK(b.rule_id == "N-GERUND");
  CHECK(b.play_safe);
  CHECK(translate_lines("Playing soccer is healthy") ==
        Lines{"PlayingSoccer <= HealthyActivity",
              "HealthyActivity <= Activity",
              "PlayingSoccer <= Playing or Soccer"});
  CHECK(translate_lines("Running water is soothing") ==
        Lines{"RunningWater <= SoothingActivity",
              "SoothingActivity <= Activity",
              "RunningWater <= Running or Water"});
}

TEST_CASE("equivalence and similarity") {
  CHECK(translate_lines("Advocate and lawyer are same") ==
        Lines{"Advocate == Lawyer"});
  CHECK(translate_lines("Tangerine is like orange") ==
        Lines{"Tangerine <= OrangeLike", "Orange <= OrangeLike"});
  // NNP equivalence goes through individual identity
  CHECK(translate_lines("John is known as Joe") == Lines{"{John} == {Joe}"});
}

TEST_CASE("adjectival subjects only translate via equivalence rules") {
  CharSentence cs = characterize_one("Advocate and lawyer are same");
  cs.subject.tag = "JJ";
  cs.object1.tag = "JJ";
  CHECK_NOTHROW(translate(cs, lexicon()));  // equivalence still fine
  cs.isa = IsaKind::Hyponymy;
  try {
    translate(cs, lexicon());
    FAIL("expected UnsupportedShape");
  } catch (const SentenceRejected& e) {
    CHECK(e.code == "UnsupportedShape");
  }
}

TEST_CASE("equivalence with mismatched POS is rejected") {
  CharSentence cs = characterize_one("Advocate and lawyer are same");
  cs.object1.tag = "JJ";
  try {
    translate(cs, lexicon());
    FAIL("expected PosMismatch");
  } catch (const SentenceRejected& e) {
    CHECK(e.code == "PosMismatch");
  }
}

TEST_CASE("holonymy: hypernymy branch when the lexicon supports it") {
  CHECK(translate_lines("Four wheeled vehicle includes sedan") ==
        Lines{"FourWheeledVehicle <= Vehicle",
              "Sedan <= FourWheeledVehicle"});
}

TEST_CASE("holonymy: aggregation over the transitive include role") {
  CHECK(translate_lines("School includes students and teachers") ==
        Lines{"School == all include . (Student or Teacher)"});
}

TEST_CASE("the three only structures") {
  CHECK(translate_lines("John is a student only") ==
        Lines{"{John} <= Student", "not Student and {John} == Bottom"});
  CHECK(translate_lines("Only John is a student") ==
        Lines{"{John} <= Student"});
  CHECK(translate_lines("John is the only student") ==
        Lines{"{John} == Student", "not Student and {John} == Bottom"});
}

TEST_CASE("numeric object modifier with the full assertion chain") {
  CHECK(translate_lines("John is 5 foot tall") ==
        Lines{"TallThing == all hasState . Tall", "Tall <= Attribute",
              "Height <= Dimension", "Feet <= Unit",
              "FiveFootTallPerson == TallThing and (all hasHeight . (Height "
              "and (all hasUnit . (Feet and all hasValue . <integer>))))",
              "FiveFootTallPerson(John)", "Height(H_John)",
              "hasHeight(John,H_John)", "Feet(ft_John)",
              "hasUnit(H_John,ft_John)", "hasValue(ft_John,5)"});
}

TEST_CASE("positive superlative ranks at one") {
  CHECK(translate_lines("John is the tallest student") ==
        Lines{"TallThing == all hasState . Tall", "Tall <= Attribute",
              "Height <= Dimension",
              "TallestStudentPerson == Person and Student and TallThing and "
              "(all hasHeight . (Height and (all hasRank . (Rank and (all "
              "hasValue . {1})))))",
              "TallestStudentPerson(John)", "Height(H_John)",
              "hasHeight(John,H_John)", "Rank(r_John)",
              "hasRank(H_John,r_John)", "hasValue(r_John,1)"});
}

TEST_CASE("negative superlative uses the symbolic rank") {
  Lines got = translate_lines("John is the least tall student");
  bool has_symbolic = false;
  for (const auto& l : got)
    if (l.find("{#n}") != std::string::npos) has_symbolic = true;
  CHECK(has_symbolic);
  bool abox_symbolic = false;
  for (const auto& l : got)
    if (l == "hasValue(r_John,#n)") abox_symbolic = true;
  CHECK(abox_symbolic);
}

TEST_CASE("ranked superlative") {
  Lines got = translate_lines("John is the third most popular student");
  CHECK(got[3] ==
        "ThirdMostPopularStudentPerson == Person and PopularThing and "
        "Student and (all hasQuality . (Quality and (all hasRank . (Rank "
        "and (all hasValue . {3})))))");
  CHECK(got.back() == "hasValue(r_John,3)");
}

TEST_CASE("comparative introduces the reference nominal") {
  CHECK(translate_lines("John is a more intelligent student than Mary") ==
        Lines{"IntelligentStudent <= Student",
              "MoreIntelligentStudentMaryPerson == IntelligentStudent and "
              "Person and (all hasQuality . (Quality and (all hasUnit . "
              "(AbstractUnit and (all hasValue . (all hasGreaterValue . "
              "{d_MaryPerson}))))))",
              "MaryPerson == IntelligentStudent and Person and (all "
              "hasQuality . (Quality and (all hasUnit . (AbstractUnit and "
              "(all hasValue . {d_MaryPerson})))))",
              "MoreIntelligentStudentMaryPerson(John)", "MaryPerson(Mary)"});
}

TEST_CASE("unknown dimensional adjective is a partial failure") {
  CHECK_THROWS_AS(translate_lines("John is 5 foot naughty"),
                  SentenceRejected);
}

TEST_CASE("past tense play-safe with the past pointer role") {
  CHECK(translate_lines("Mammoths were huge") ==
        Lines{"HugeThing == all hasState . Huge", "Huge <= Attribute",
              "Mammoth <= HugeThing or (all PPR . HugeThing)",
              "HugeThing <= not (all PPR . HugeThing)"});
  CHECK(translate_lines("John was a student when he was young") ==
        Lines{"YoungStudent <= Student",
              "PPRYoungStudentPerson <= YoungStudent or (all PPR . "
              "YoungStudent)",
              "YoungStudent <= not (all PPR . YoungStudent)",
              "PPRYoungStudentPerson <= Person",
              "PPRYoungStudentPerson(John)", "Person(John)"});
}

TEST_CASE("future adverbial modifier and future tense") {
  CHECK(translate_lines("Eventually sun is a black hole") ==
        Lines{"EventuallyBlackHole <= BlackHole",
              "Sun <= EventuallyBlackHole and (all FPR . BlackHole)"});
  CHECK(translate_lines("John will be a student") ==
        Lines{"FPRStudentPerson == all FPR . Student",
              "FPRStudentPerson <= Person", "FPRStudentPerson(John)",
              "Person(John)"});
}

TEST_CASE("epistemic roles") {
  CHECK(translate_lines("John may be a student") ==
        Lines{"MayBeStudentPerson == all mayBe . Student",
              "MayBeStudentPerson <= Person", "MayBeStudentPerson(John)",
              "Person(John)"});
  CHECK(translate_lines("John is still a student") ==
        Lines{"IsStillStudentPerson <= Student and (all PPR . Student)",
              "IsStillStudentPerson <= Person", "IsStillStudentPerson(John)",
              "Person(John)"});
  CHECK(translate_lines("John is sometimes happy") ==
        Lines{"HappyThing == all hasState . Happy", "Happy <= Attribute",
              "IsSometimesHappyThingPerson == all isSometimes . HappyThing",
              "IsSometimesHappyThingPerson <= Person",
              "IsSometimesHappyThingPerson(John)", "Person(John)"});
}

TEST_CASE("epistemic subject-a play-safe") {
  Batch planet = translate(characterize_one("A planet is round"), lexicon());
  CHECK(planet.play_safe);
  CHECK(translate_lines("A planet is round") ==
        Lines{"RoundThing == all hasState . Round", "Round <= Attribute",
              "RoundThingPlanet(planet_1)", "RoundThingPlanet <= Planet",
              "RoundThingPlanet <= RoundThing"});
  // same characterization, same play-safe rule
  CHECK(translate_lines("A boy is hungry") ==
        Lines{"HungryThing == all hasState . Hungry", "Hungry <= Attribute",
              "HungryThingBoy(boy_1)", "HungryThingBoy <= Boy",
              "HungryThingBoy <= HungryThing"});
}

TEST_CASE("determinism: same sentence twice gives identical batches") {
  CharSentence cs = characterize_one("Some women are smokers");
  Batch a = translate(cs, lexicon());
  Batch b = translate(cs, lexicon());
  REQUIRE(a.axioms.size() == b.axioms.size());
  for (size_t i = 0; i < a.axioms.size(); ++i)
    CHECK(a.axioms[i].key() == b.axioms[i].key());
}

TEST_CASE("modal rules only use builtin roles") {
  const char* modal_sentences[] = {
      "Mammoths were huge",       "John will be a student",
      "John may be a student",    "John can become the student body leader.",
      "John can be a student body member", "John is now a student.",
      "John is still a student",  "John is sometimes happy"};
  for (const char* s : modal_sentences) {
    auto toks = tag(s, lexicon());
    for (auto& simple : extract_triples(toks, lexicon(), 0)) {
      auto cs = characterize(
          normalize(singularize(simple, lexicon()), lexicon()), lexicon());
      Batch b = translate(cs, lexicon());
      for (const auto& a : b.axioms) {
        std::function<void(const ConceptExpr&)> scan =
            [&](const ConceptExpr& e) {
              if (e.kind == ExprKind::All)
                CHECK(builtin_roles().count(e.name));
              for (const auto& arg : e.args) scan(arg);
            };
        scan(a.lhs);
        scan(a.rhs);
      }
    }
  }
}

TEST_CASE("batches reference only concepts they register") {
  auto lines = read_corpus(testutil::kCorpusDir + "/all68.txt");
  PipelineResult r = run_pipeline(lines, lexicon());
  for (const auto* a : r.ontology.all_axioms()) {
    std::function<void(const ConceptExpr&)> scan = [&](const ConceptExpr& e) {
      if (e.kind == ExprKind::Atom && !e.name.empty())
        CHECK(r.ontology.concept_registry.count(e.name));
      for (const auto& arg : e.args) scan(arg);
    };
    scan(a->lhs);
    scan(a->rhs);
  }
}
