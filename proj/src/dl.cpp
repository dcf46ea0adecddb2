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

#include "isadl/dl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "isadl/text.hpp"

namespace isadl {

std::string ConceptExpr::key() const {
  std::ostringstream o;
  switch (kind) {
    case ExprKind::Atom: o << "A(" << name << ")"; break;
    case ExprKind::Top: o << "T"; break;
    case ExprKind::Bottom: o << "B"; break;
    case ExprKind::Nominal: o << "N(" << name << ")"; break;
    case ExprKind::DataNominal:
      o << "DN(" << (symbolic ? "s" : "i") << literal << ")";
      break;
    case ExprKind::DataAll: o << "DA(" << name << "," << literal << ")"; break;
    case ExprKind::Not: o << "!(" << args[0].key() << ")"; break;
    case ExprKind::All: o << "F(" << name << "," << args[0].key() << ")"; break;
    case ExprKind::And:
    case ExprKind::Or: {
      o << (kind == ExprKind::And ? "&(" : "|(");
      for (size_t i = 0; i < args.size(); ++i) {
        if (i) o << ",";
        o << args[i].key();
      }
      o << ")";
      break;
    }
  }
  return o.str();
}

ConceptExpr atom(std::string name) {
  ConceptExpr e;
  e.kind = ExprKind::Atom;
  e.name = std::move(name);
  return e;
}

ConceptExpr top() {
  ConceptExpr e;
  e.kind = ExprKind::Top;
  return e;
}

ConceptExpr bottom() {
  ConceptExpr e;
  e.kind = ExprKind::Bottom;
  return e;
}

ConceptExpr nominal(std::string individual) {
  ConceptExpr e;
  e.kind = ExprKind::Nominal;
  e.name = std::move(individual);
  return e;
}

ConceptExpr all(std::string role, ConceptExpr filler) {
  ConceptExpr e;
  e.kind = ExprKind::All;
  e.name = std::move(role);
  e.args.push_back(std::move(filler));
  return e;
}

ConceptExpr data_all(std::string role, std::string datatype) {
  ConceptExpr e;
  e.kind = ExprKind::DataAll;
  e.name = std::move(role);
  e.literal = std::move(datatype);
  return e;
}

ConceptExpr data_nominal(std::string literal, bool symbolic) {
  ConceptExpr e;
  e.kind = ExprKind::DataNominal;
  e.literal = std::move(literal);
  e.symbolic = symbolic;
  return e;
}

ConceptExpr conj(std::vector<ConceptExpr> members) {
  ConceptExpr e;
  e.kind = ExprKind::And;
  e.args = std::move(members);
  return canonicalize(e);
}

ConceptExpr disj(std::vector<ConceptExpr> members) {
  ConceptExpr e;
  e.kind = ExprKind::Or;
  e.args = std::move(members);
  return canonicalize(e);
}

ConceptExpr complement(ConceptExpr inner) {
  ConceptExpr e;
  e.kind = ExprKind::Not;
  e.args.push_back(std::move(inner));
  return e;
}

ConceptExpr canonicalize(const ConceptExpr& e) {
  ConceptExpr out = e;
  for (auto& a : out.args) a = canonicalize(a);
  if (out.kind == ExprKind::And || out.kind == ExprKind::Or) {
    std::vector<ConceptExpr> flat;
    for (auto& a : out.args) {
      if (a.kind == out.kind)
        flat.insert(flat.end(), a.args.begin(), a.args.end());
      else
        flat.push_back(a);
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    out.args = std::move(flat);
  }
  return out;
}

std::string Axiom::key() const {
  std::ostringstream o;
  switch (kind) {
    case AxiomKind::SubClassOf:
      o << "sub:" << lhs.key() << "<=" << rhs.key();
      break;
    case AxiomKind::EquivalentTo: {
      // symmetric
      std::string a = lhs.key(), b = rhs.key();
      if (b < a) std::swap(a, b);
      o << "eq:" << a << "==" << b;
      break;
    }
    case AxiomKind::ConceptAssertion:
      o << "ca:" << lhs.key() << "(" << individual << ")";
      break;
    case AxiomKind::RoleAssertion:
      o << "ra:" << role << "(" << individual << "," << individual2 << ")";
      break;
    case AxiomKind::DataAssertion:
      o << "da:" << role << "(" << individual << "," << (symbolic ? "s" : "i")
        << literal << ")";
      break;
  }
  return o.str();
}

Axiom sub(ConceptExpr sub_expr, ConceptExpr sup_expr) {
  Axiom a;
  a.kind = AxiomKind::SubClassOf;
  a.lhs = canonicalize(sub_expr);
  a.rhs = canonicalize(sup_expr);
  return a;
}

Axiom equiv(ConceptExpr x, ConceptExpr y) {
  Axiom a;
  a.kind = AxiomKind::EquivalentTo;
  a.lhs = canonicalize(x);
  a.rhs = canonicalize(y);
  return a;
}

Axiom assert_concept(ConceptExpr c, std::string individual) {
  Axiom a;
  a.kind = AxiomKind::ConceptAssertion;
  a.lhs = canonicalize(c);
  a.individual = std::move(individual);
  return a;
}

Axiom assert_role(std::string role, std::string x, std::string y) {
  Axiom a;
  a.kind = AxiomKind::RoleAssertion;
  a.role = std::move(role);
  a.individual = std::move(x);
  a.individual2 = std::move(y);
  return a;
}

Axiom assert_data(std::string role, std::string x, long value) {
  Axiom a;
  a.kind = AxiomKind::DataAssertion;
  a.role = std::move(role);
  a.individual = std::move(x);
  a.literal = std::to_string(value);
  return a;
}

Axiom assert_data_symbolic(std::string role, std::string x, std::string lit) {
  Axiom a;
  a.kind = AxiomKind::DataAssertion;
  a.role = std::move(role);
  a.individual = std::move(x);
  a.literal = std::move(lit);
  a.symbolic = true;
  return a;
}

const std::map<std::string, RoleInfo>& builtin_roles() {
  static const std::map<std::string, RoleInfo> kRoles = [] {
    std::map<std::string, RoleInfo> r;
    auto put = [&](const std::string& n, bool transitive = false,
                   std::optional<std::string> parent = std::nullopt) {
      RoleInfo info;
      info.name = n;
      info.transitive = transitive;
      info.parent = std::move(parent);
      r[n] = info;
    };
    put("hasState");
    put("does");
    put("include", /*transitive=*/true);
    put("hasDim");
    for (const char* d : {"Height", "Length", "Width", "Number", "Temperature",
                          "Speed", "Time", "Distance", "Quality"})
      put(std::string("has") + d, false, std::string("hasDim"));
    put("hasUnit");
    put("hasValue");
    put("hasRank");
    put("hasGreaterValue");
    put("PPR");
    put("FPR");
    put("mayBe");
    put("canBecome");
    put("canBe");
    put("isNow");
    put("isSometimes");
    return r;
  }();
  return kRoles;
}

namespace {

void register_expr(const ConceptExpr& e, Ontology* o, int src,
                   const std::string& rule) {
  switch (e.kind) {
    case ExprKind::Atom:
      if (!e.name.empty() && !o->concept_registry.count(e.name))
        o->concept_registry[e.name] = {src, rule};
      break;
    case ExprKind::Nominal:
      o->individuals.insert(e.name);
      break;
    case ExprKind::All:
    case ExprKind::DataAll: {
      auto it = builtin_roles().find(e.name);
      RoleInfo info = it != builtin_roles().end()
                          ? it->second
                          : RoleInfo{e.name, false, false, std::nullopt};
      auto& slot = o->roles.emplace(e.name, info).first->second;
      if (e.kind == ExprKind::All) slot.used_object = true;
      else slot.used_data = true;
      if (slot.parent) {
        auto pit = builtin_roles().find(*slot.parent);
        RoleInfo pinfo = pit != builtin_roles().end()
                             ? pit->second
                             : RoleInfo{*slot.parent, false, false,
                                        std::nullopt};
        auto& pslot = o->roles.emplace(*slot.parent, pinfo).first->second;
        pslot.used_object = true;
      }
      break;
    }
    default:
      break;
  }
  for (const auto& a : e.args) register_expr(a, o, src, rule);
}

}  // namespace

void Ontology::add(Axiom a) {
  a.lhs = canonicalize(a.lhs);
  a.rhs = canonicalize(a.rhs);
  if (!keys_.insert(a.key()).second) return;
  register_expr(a.lhs, this, a.source_index, a.rule_id);
  register_expr(a.rhs, this, a.source_index, a.rule_id);
  if (!a.individual.empty()) individuals.insert(a.individual);
  if (!a.individual2.empty()) individuals.insert(a.individual2);
  if (!a.role.empty()) {
    auto it = builtin_roles().find(a.role);
    RoleInfo info = it != builtin_roles().end()
                        ? it->second
                        : RoleInfo{a.role, false, false, std::nullopt};
    auto& slot = roles.emplace(a.role, info).first->second;
    if (a.kind == AxiomKind::DataAssertion) slot.used_data = true;
    else slot.used_object = true;
    if (slot.parent) {
      auto pit = builtin_roles().find(*slot.parent);
      RoleInfo pinfo = pit != builtin_roles().end()
                           ? pit->second
                           : RoleInfo{*slot.parent, false, false, std::nullopt};
      roles.emplace(*slot.parent, pinfo).first->second.used_object = true;
    }
  }
  if (a.kind == AxiomKind::SubClassOf || a.kind == AxiomKind::EquivalentTo)
    tbox.push_back(std::move(a));
  else
    abox.push_back(std::move(a));
}

bool Ontology::contains(const Axiom& a) const { return keys_.count(a.key()); }

std::vector<const Axiom*> Ontology::all_axioms() const {
  std::vector<const Axiom*> out;
  out.reserve(tbox.size() + abox.size());
  for (const auto& a : tbox) out.push_back(&a);
  for (const auto& a : abox) out.push_back(&a);
  return out;
}

std::set<std::string> Ontology::concept_names() const {
  std::set<std::string> out;
  for (const auto& [n, _] : concept_registry) out.insert(n);
  return out;
}

bool Ontology::operator==(const Ontology& o) const { return keys_ == o.keys_; }

std::string label_part(const std::string& lexeme) {
  std::string out;
  bool upper_next = true;
  for (char c : lexeme) {
    if (c == '\'' || c == '.') continue;
    if (c == ' ' || c == '-' || c == '/' || c == '_') {
      upper_next = true;
      continue;
    }
    out += upper_next ? std::toupper(static_cast<unsigned char>(c)) : c;
    upper_next = false;
  }
  return out;
}

std::string mk_label(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    // counter placeholders pass through untouched
    if (p.rfind("@N{", 0) == 0) out += p;
    else out += label_part(p);
  }
  return out;
}

std::string individual_name(const std::string& lexeme) {
  return label_part(lexeme);
}

std::string counter_ref(const std::string& key) { return "@N{" + key + "}"; }

bool has_counter_refs(const std::string& name) {
  return name.find("@N{") != std::string::npos;
}

namespace {

void resolve_name(std::string* name, std::map<std::string, int>* counters,
                  std::map<std::string, int>* assigned) {
  size_t p;
  while ((p = name->find("@N{")) != std::string::npos) {
    size_t e = name->find('}', p);
    if (e == std::string::npos) return;
    std::string key = name->substr(p + 3, e - p - 3);
    int n;
    if (auto it = assigned->find(key); it != assigned->end()) {
      n = it->second;
    } else {
      n = ++(*counters)[key];
      (*assigned)[key] = n;
    }
    name->replace(p, e - p + 1, "_" + std::to_string(n));
  }
}

void resolve_expr(ConceptExpr* e, std::map<std::string, int>* counters,
                  std::map<std::string, int>* assigned) {
  resolve_name(&e->name, counters, assigned);
  resolve_name(&e->literal, counters, assigned);
  for (auto& a : e->args) resolve_expr(&a, counters, assigned);
}

}  // namespace

void resolve_counters(std::vector<Axiom>* batch,
                      std::map<std::string, int>* counters) {
  std::map<std::string, int> assigned;  // one number per key per batch
  for (auto& a : *batch) {
    resolve_expr(&a.lhs, counters, &assigned);
    resolve_expr(&a.rhs, counters, &assigned);
    resolve_name(&a.individual, counters, &assigned);
    resolve_name(&a.individual2, counters, &assigned);
  }
}

}  // namespace isadl
