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

#ifndef ISADL_REASON_HPP_
#define ISADL_REASON_HPP_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "isadl/dl.hpp"

namespace isadl {

struct DefinitionCycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConsistencyReport {
  std::set<std::string> unsatisfiable;
  std::vector<std::string> abox_clashes;
  bool consistent() const {
    return unsatisfiable.empty() && abox_clashes.empty();
  }
};

struct TaxonomyGraph {
  // Representative node names, lexicographically sorted; "Top" is implicit
  // parent of roots.
  std::vector<std::string> nodes;
  std::map<std::string, std::set<std::string>> equivalence_classes;
  std::vector<std::pair<std::string, std::string>> edges;  // child -> parent
  std::set<std::string> unsatisfiable;

  std::string to_tsv() const;
  std::string to_dot() const;
  // reachable ancestors/descendants of a node (excluding Top)
  std::set<std::string> ancestors(const std::string& node) const;
  std::set<std::string> descendants(const std::string& node) const;
};

// Structural subsumption over told axioms with lazy unfolding: sound for
// the translator-emitted fragment, under-approximating beyond it.
class Reasoner {
 public:
  explicit Reasoner(const Ontology& onto);

  // true iff `sub` is derivably subsumed by `sup`.
  bool subsumes(const ConceptExpr& sup, const ConceptExpr& sub) const;

  ConsistencyReport check_consistency() const;
  TaxonomyGraph classify() const;

 private:
  std::set<std::string> closure(const ConceptExpr& e) const;
  bool check_sup(const ConceptExpr& sup, const ConceptExpr& sub,
                 const std::set<std::string>& sub_closure, int depth) const;

  const Ontology& onto_;
  // told supers keyed by the expression key of the axiom's left side
  std::map<std::string, std::vector<ConceptExpr>> supers_;
  mutable std::map<std::string, ConceptExpr> expr_by_key_;
  // general inclusions whose left side is an intersection
  std::vector<std::pair<ConceptExpr, ConceptExpr>> gcis_;
  std::set<std::string> named_;
  mutable std::map<std::string, std::set<std::string>> closure_memo_;
  mutable std::map<std::string, int> subsume_memo_;  // 0 in-progress/false, 1 true
};

bool subsumes(const ConceptExpr& sup, const ConceptExpr& sub,
              const Ontology& onto);

}  // namespace isadl

#endif  // ISADL_REASON_HPP_
