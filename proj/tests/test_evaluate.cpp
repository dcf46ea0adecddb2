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

#include <cmath>
#include <random>

#include "isadl/evaluate.hpp"
#include "isadl/reason.hpp"
#include "test_util.hpp"

using namespace isadl;

namespace {

Ontology from_names(std::initializer_list<const char*> names) {
  Ontology o;
  for (const char* n : names) o.add(sub(atom(n), top()));
  return o;
}

Ontology chain(std::initializer_list<const char*> names) {
  Ontology o;
  const char* prev = nullptr;
  for (const char* n : names) {
    if (prev) o.add(sub(atom(n), atom(prev)));
    prev = n;
  }
  return o;
}

}  // namespace

TEST_CASE("canonical concept names split camel case and singularize") {
  CHECK(canonical_concept("StudentPerson") == "student person");
  CHECK(canonical_concept("student person") == "student person");
  CHECK(canonical_concept("IntelligentBeings") == "intelligent being");
  CHECK(canonical_concept("Student_1Activist") == "student 1 activist");
  CHECK(canonical_concept("PPRStudentPerson") == "ppr student person");
  CHECK(canonical_concept("IntelPentium4") == "intel pentium 4");
}

TEST_CASE("lexical identity") {
  Ontology both = from_names({"Cat", "Dog", "Animal"});
  LexicalMetrics m = lexical_metrics(both, both);
  CHECK(m.lp == 1.0);
  CHECK(m.lr == 1.0);
  CHECK(m.lf == 1.0);
  CHECK(m.oi == 0.0);
  CHECK(m.ol == 0.0);
}

TEST_CASE("lexical metrics by hand count") {
  Ontology learned = from_names({"A", "B", "C", "X"});
  Ontology gold = from_names({"A", "B", "D"});
  LexicalMetrics m = lexical_metrics(learned, gold);
  CHECK(m.lp == doctest::Approx(0.5));
  CHECK(m.lr == doctest::Approx(2.0 / 3.0));
  CHECK(m.oi == doctest::Approx(2.0 / 3.0));
  CHECK(m.ol == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("empty ontologies are rejected") {
  Ontology empty;
  Ontology full = from_names({"A"});
  CHECK_THROWS_AS(lexical_metrics(empty, full), EmptyOntology);
  CHECK_THROWS_AS(lexical_metrics(full, empty), EmptyOntology);
}

TEST_CASE("identical taxonomies have perfect taxonomic scores") {
  Ontology o = chain({"Animal", "Mammal", "Cat"});
  Reasoner r(o);
  TaxonomyGraph g = r.classify();
  TaxonomicMetrics m = taxonomic_metrics(o, g, o, g);
  CHECK(m.tp == doctest::Approx(1.0));
  CHECK(m.tr == doctest::Approx(1.0));
  CHECK(m.tf == doctest::Approx(1.0));
}

TEST_CASE("an extra correct hyponym leaf lowers precision only") {
  // the leaf concept exists in the gold lexicon but gold does not place it
  // in the hierarchy; the learned hierarchy does
  Ontology gold = chain({"Animal", "Mammal", "Cat"});
  gold.add(sub(atom("WildCat"), top()));
  Ontology learned = chain({"Animal", "Mammal", "Cat"});
  learned.add(sub(atom("WildCat"), atom("Cat")));
  Reasoner lr(learned), gr(gold);
  TaxonomicMetrics m =
      taxonomic_metrics(learned, lr.classify(), gold, gr.classify());
  CHECK(m.tr == doctest::Approx(1.0));
  CHECK(m.tp < 1.0);
}

TEST_CASE("cotopy against a brute-force enumeration: chain vs star") {
  // chain: A <- B <- C <- D; star: B, C, D all under A
  Ontology chain_o = chain({"A", "B", "C", "D"});
  Ontology star_o;
  for (const char* n : {"B", "C", "D"})
    star_o.add(sub(atom(n), atom("A")));
  Reasoner cr(chain_o), sr(star_o);
  TaxonomyGraph ct = cr.classify(), st = sr.classify();

  // brute-force cotopy for the chain, restricted to the star's lexicon
  auto brute = [](const std::string& c,
                  const std::map<std::string, std::set<std::string>>& up,
                  const std::map<std::string, std::set<std::string>>& down) {
    std::set<std::string> out{c};
    if (up.count(c)) out.insert(up.at(c).begin(), up.at(c).end());
    if (down.count(c)) out.insert(down.at(c).begin(), down.at(c).end());
    return out;
  };
  std::map<std::string, std::set<std::string>> chain_up = {
      {"A", {}}, {"B", {"A"}}, {"C", {"A", "B"}}, {"D", {"A", "B", "C"}}};
  std::map<std::string, std::set<std::string>> chain_down = {
      {"A", {"B", "C", "D"}}, {"B", {"C", "D"}}, {"C", {"D"}}, {"D", {}}};
  std::set<std::string> star_lex = {"a", "b", "c", "d"};
  for (const std::string c : {"A", "B", "C", "D"}) {
    auto expected_raw = brute(c, chain_up, chain_down);
    std::set<std::string> expected;
    for (const auto& e : expected_raw) expected.insert(canonical_concept(e));
    auto got = common_semantic_cotopy(c, ct, {}, star_lex);
    CHECK(got == expected);
  }
}

TEST_CASE("characterization metrics reproduce reported shapes") {
  // 1528 characterized of 1537, all correct
  CharacterizationCounts wcl{1537, 1528, 1528};
  auto [cp, cr] = characterization_metrics(wcl);
  CHECK(cp == doctest::Approx(1.0));
  CHECK(std::round(cr * 10000) / 10000 == doctest::Approx(0.9941));
  // 163 of 172
  CharacterizationCounts virus{172, 163, 163};
  auto [cp2, cr2] = characterization_metrics(virus);
  CHECK(cp2 == doctest::Approx(1.0));
  CHECK(std::round(cr2 * 10000) / 10000 == doctest::Approx(0.9477));
}

TEST_CASE("harmonic mean bounds") {
  CHECK(harmonic_mean(0.0, 0.0) == 0.0);
  CHECK(harmonic_mean(1.0, 1.0) == 1.0);
  double hm = harmonic_mean(0.3, 0.8);
  CHECK(hm >= 0.3);
  CHECK(hm <= 0.8);
}

TEST_CASE("metric identities over random ontology pairs") {
  std::mt19937 rng(7);
  auto random_names = [&](int max_n) {
    Ontology o;
    int n = 1 + static_cast<int>(rng() % max_n);
    for (int i = 0; i < n; ++i)
      o.add(sub(atom("N" + std::to_string(rng() % 12)), top()));
    return o;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Ontology learned = random_names(10);
    Ontology gold = random_names(10);
    LexicalMetrics m = lexical_metrics(learned, gold);
    CHECK(m.ol == 1.0 - m.lr);  // exact
    CHECK(m.lf >= std::min(m.lp, m.lr) - 1e-12);
    CHECK(m.lf <= std::max(m.lp, m.lr) + 1e-12);
    // swap symmetry
    LexicalMetrics swapped = lexical_metrics(gold, learned);
    CHECK(m.lp == doctest::Approx(swapped.lr));
    CHECK(m.lr == doctest::Approx(swapped.lp));
  }
}

TEST_CASE("taxonomic swap symmetry") {
  Ontology a = chain({"Animal", "Mammal", "Cat", "WildCat"});
  Ontology b = chain({"Animal", "Cat"});
  b.add(sub(atom("Dog"), atom("Animal")));
  Reasoner ra(a), rb(b);
  TaxonomyGraph ta = ra.classify(), tb = rb.classify();
  TaxonomicMetrics ab = taxonomic_metrics(a, ta, b, tb);
  TaxonomicMetrics ba = taxonomic_metrics(b, tb, a, ta);
  CHECK(ab.tp == doctest::Approx(ba.tr));
  CHECK(ab.tr == doctest::Approx(ba.tp));
}

TEST_CASE("full report on the trivial corpus vs itself") {
  auto lines = read_corpus(testutil::kCorpusDir + "/trivial.txt");
  PipelineResult r = run_pipeline(lines, testutil::lexicon());
  EvalReport rep = evaluate(r.ontology, r.ontology);
  CHECK(rep.lexical.lp == doctest::Approx(1.0));
  CHECK(rep.lexical.lr == doctest::Approx(1.0));
  CHECK(rep.lexical.ol == doctest::Approx(0.0));
  CHECK(rep.taxonomic.tp == doctest::Approx(1.0));
  CHECK(rep.taxonomic.tr == doctest::Approx(1.0));
  CHECK(rep.tf_prime == doctest::Approx(1.0));
  CHECK(rep.to_json().find("\"lp\":1.0000") != std::string::npos);
  CHECK(rep.to_table().find("TF'") != std::string::npos);
}
