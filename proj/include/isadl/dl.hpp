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

#ifndef ISADL_DL_HPP_
#define ISADL_DL_HPP_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace isadl {

// AL[U][E][C][H][O](D) concept tree.
enum class ExprKind {
  Atom,
  And,
  Or,
  Not,
  All,          // forall role . filler (args[0])
  Nominal,      // {individual}
  DataAll,      // forall data-role . datatype
  DataNominal,  // {literal} under a data role
  Bottom,
  Top,
};

struct ConceptExpr {
  ExprKind kind = ExprKind::Atom;
  std::string name;      // Atom: concept; All/DataAll: role; Nominal: individual
  std::string literal;   // DataAll: datatype; DataNominal: literal text
  bool symbolic = false; // DataNominal: symbolic rank literal ("n", "n-2")
  std::vector<ConceptExpr> args;

  std::string key() const;  // canonical ordering / equality key
  bool operator==(const ConceptExpr& o) const { return key() == o.key(); }
  bool operator<(const ConceptExpr& o) const { return key() < o.key(); }
};

ConceptExpr atom(std::string name);
ConceptExpr top();
ConceptExpr bottom();
ConceptExpr nominal(std::string individual);
ConceptExpr all(std::string role, ConceptExpr filler);
ConceptExpr data_all(std::string role, std::string datatype);
ConceptExpr data_nominal(std::string literal, bool symbolic = false);
ConceptExpr conj(std::vector<ConceptExpr> members);
ConceptExpr disj(std::vector<ConceptExpr> members);
ConceptExpr complement(ConceptExpr e);

// Flattens nested And/Or, dedups and sorts members, collapses singletons.
ConceptExpr canonicalize(const ConceptExpr& e);

enum class AxiomKind {
  SubClassOf,        // lhs <= rhs
  EquivalentTo,      // lhs == rhs
  ConceptAssertion,  // lhs(individual)
  RoleAssertion,     // role(individual, individual2)
  DataAssertion,     // role(individual, literal)
};

struct Axiom {
  AxiomKind kind = AxiomKind::SubClassOf;
  ConceptExpr lhs, rhs;
  std::string role;
  std::string individual, individual2;
  std::string literal;
  bool symbolic = false;
  // provenance
  int source_index = -1;
  std::string rule_id;

  std::string key() const;
  bool operator==(const Axiom& o) const { return key() == o.key(); }
};

Axiom sub(ConceptExpr sub_expr, ConceptExpr sup_expr);
Axiom equiv(ConceptExpr a, ConceptExpr b);
Axiom assert_concept(ConceptExpr c, std::string individual);
Axiom assert_role(std::string role, std::string a, std::string b);
Axiom assert_data(std::string role, std::string a, long value);
Axiom assert_data_symbolic(std::string role, std::string a, std::string lit);

struct RoleInfo {
  std::string name;
  bool builtin = true;
  bool transitive = false;
  std::optional<std::string> parent;  // hasHeight -> hasDim
  bool used_object = false;
  bool used_data = false;
};

// The fixed builtin role table (dimension specializations included).
const std::map<std::string, RoleInfo>& builtin_roles();

struct Ontology {
  std::vector<Axiom> tbox;  // insertion order preserved
  std::vector<Axiom> abox;
  std::map<std::string, std::pair<int, std::string>> concept_registry;
  std::set<std::string> individuals;
  std::map<std::string, RoleInfo> roles;  // roles actually used
  std::map<std::string, int> counters;

  // Idempotent canonical insertion; registers concepts, individuals, roles.
  void add(Axiom a);
  bool contains(const Axiom& a) const;
  size_t size() const { return tbox.size() + abox.size(); }
  std::vector<const Axiom*> all_axioms() const;
  std::set<std::string> concept_names() const;

  bool operator==(const Ontology& o) const;

 private:
  std::set<std::string> keys_;
};

// Concept labels: each part capitalized, spaces/hyphens/apostrophes/dots
// stripped camel-style ("long-haired" -> "LongHaired").
std::string mk_label(const std::vector<std::string>& parts);

// One label part from a lexeme (camelized but not concatenated).
std::string label_part(const std::string& lexeme);

// Individual name for an NNP lexeme ("Intel Pentium 4" -> "IntelPentium4").
std::string individual_name(const std::string& lexeme);

// Deferred corpus counters: placeholders are embedded in names during
// translation and resolved to "_N" in source order at merge time.
std::string counter_ref(const std::string& key);
bool has_counter_refs(const std::string& name);

// Resolves every counter placeholder in the batch; each distinct key gets
// the next integer from `counters` on first use within the batch.
void resolve_counters(std::vector<Axiom>* batch,
                      std::map<std::string, int>* counters);

}  // namespace isadl

#endif  // ISADL_DL_HPP_
