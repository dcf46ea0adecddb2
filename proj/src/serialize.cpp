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

#include "isadl/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "isadl/text.hpp"

namespace isadl {

namespace {

// ---------- OWL functional rendering ----------

std::string owl_expr(const ConceptExpr& e) {
  switch (e.kind) {
    case ExprKind::Atom: return ":" + e.name;
    case ExprKind::Top: return "owl:Thing";
    case ExprKind::Bottom: return "owl:Nothing";
    case ExprKind::Nominal: return "ObjectOneOf(:" + e.name + ")";
    case ExprKind::Not: return "ObjectComplementOf(" + owl_expr(e.args[0]) + ")";
    case ExprKind::All: {
      if (e.args[0].kind == ExprKind::DataNominal) {
        const ConceptExpr& d = e.args[0];
        std::string lit = d.symbolic
                              ? "\"" + d.literal + "\"^^:symbolicInteger"
                              : "\"" + d.literal + "\"^^xsd:integer";
        return "DataAllValuesFrom(:" + e.name + " DataOneOf(" + lit + "))";
      }
      return "ObjectAllValuesFrom(:" + e.name + " " + owl_expr(e.args[0]) +
             ")";
    }
    case ExprKind::DataAll:
      return "DataAllValuesFrom(:" + e.name + " xsd:" + e.literal + ")";
    case ExprKind::DataNominal:
      return e.symbolic ? "DataOneOf(\"" + e.literal + "\"^^:symbolicInteger)"
                        : "DataOneOf(\"" + e.literal + "\"^^xsd:integer)";
    case ExprKind::And:
    case ExprKind::Or: {
      std::string out = e.kind == ExprKind::And ? "ObjectIntersectionOf("
                                                : "ObjectUnionOf(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += " ";
        out += owl_expr(e.args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

void collect_data_roles(const ConceptExpr& e, std::set<std::string>* data,
                        std::set<std::string>* object) {
  if (e.kind == ExprKind::All) {
    if (e.args[0].kind == ExprKind::DataNominal) data->insert(e.name);
    else object->insert(e.name);
  }
  if (e.kind == ExprKind::DataAll) data->insert(e.name);
  for (const auto& a : e.args) collect_data_roles(a, data, object);
}

// ---------- DL text rendering ----------

std::string dl_expr(const ConceptExpr& e, bool parenthesize = false) {
  switch (e.kind) {
    case ExprKind::Atom: return e.name;
    case ExprKind::Top: return "Top";
    case ExprKind::Bottom: return "Bottom";
    case ExprKind::Nominal: return "{" + e.name + "}";
    case ExprKind::DataNominal:
      return e.symbolic ? "{#" + e.literal + "}" : "{" + e.literal + "}";
    case ExprKind::DataAll:
      return "all " + e.name + " . <" + e.literal + ">";
    case ExprKind::Not: {
      std::string inner = dl_expr(e.args[0], true);
      return "not " + inner;
    }
    case ExprKind::All: {
      std::string out = "all " + e.name + " . " + dl_expr(e.args[0], true);
      return parenthesize ? "(" + out + ")" : out;
    }
    case ExprKind::And:
    case ExprKind::Or: {
      const char* op = e.kind == ExprKind::And ? " and " : " or ";
      std::string out;
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += op;
        out += dl_expr(e.args[i], true);
      }
      return parenthesize ? "(" + out + ")" : out;
    }
  }
  return "";
}

// ---------- DL text parsing ----------

struct Lexer {
  std::string text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t')) {
      ++pos;
      ++col;
    }
  }

  bool eof() { return pos >= text.size(); }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(line, col, what);
  }

  char peek() { return pos < text.size() ? text[pos] : '\0'; }

  bool consume(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      col += static_cast<int>(tok.size());
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    size_t b = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '-'))
      ++pos;
    col += static_cast<int>(pos - b);
    if (b == pos) fail("expected identifier");
    return text.substr(b, pos - b);
  }
};

ConceptExpr parse_expr(Lexer& lx);

ConceptExpr parse_primary(Lexer& lx) {
  lx.skip_ws();
  if (lx.consume("(")) {
    ConceptExpr e = parse_expr(lx);
    if (!lx.consume(")")) lx.fail("expected ')'");
    return e;
  }
  if (lx.consume("{#")) {
    lx.skip_ws();
    size_t b = lx.pos;
    while (!lx.eof() && lx.peek() != '}') {
      ++lx.pos;
      ++lx.col;
    }
    std::string lit = trim(lx.text.substr(b, lx.pos - b));
    if (!lx.consume("}")) lx.fail("expected '}'");
    return data_nominal(lit, /*symbolic=*/true);
  }
  if (lx.consume("{")) {
    std::string name = lx.ident();
    if (!lx.consume("}")) lx.fail("expected '}'");
    if (is_integer_token(name)) return data_nominal(name, false);
    return nominal(name);
  }
  if (lx.consume("not ")) {
    return complement(parse_primary(lx));
  }
  if (lx.consume("all ")) {
    std::string role = lx.ident();
    if (!lx.consume(".")) lx.fail("expected '.' after role");
    lx.skip_ws();
    if (lx.consume("<")) {
      std::string dt = lx.ident();
      if (!lx.consume(">")) lx.fail("expected '>'");
      return data_all(role, dt);
    }
    return all(role, parse_primary(lx));
  }
  std::string name = lx.ident();
  if (name == "Top") return top();
  if (name == "Bottom") return bottom();
  return atom(name);
}

ConceptExpr parse_conj(Lexer& lx) {
  std::vector<ConceptExpr> parts{parse_primary(lx)};
  while (lx.consume("and ")) parts.push_back(parse_primary(lx));
  return parts.size() == 1 ? parts[0] : conj(parts);
}

ConceptExpr parse_expr(Lexer& lx) {
  std::vector<ConceptExpr> parts{parse_conj(lx)};
  while (lx.consume("or ")) parts.push_back(parse_conj(lx));
  return parts.size() == 1 ? parts[0] : disj(parts);
}

// C(a) / R(a,b) / R(a,5) / R(a,#n)
bool try_parse_assertion(const std::string& line, int lineno, Axiom* out) {
  size_t open = line.find('(');
  if (open == std::string::npos || line.back() != ')') return false;
  std::string head = trim(line.substr(0, open));
  // Heads must be plain identifiers, not expressions.
  for (char c : head)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  std::string inner = line.substr(open + 1, line.size() - open - 2);
  std::vector<std::string> args = split(inner, ',');
  for (auto& a : args) a = trim(a);
  if (args.size() == 1) {
    *out = assert_concept(atom(head), args[0]);
    return true;
  }
  if (args.size() == 2) {
    if (!args[1].empty() && args[1][0] == '#') {
      *out = assert_data_symbolic(head, args[0], args[1].substr(1));
    } else if (is_integer_token(args[1])) {
      *out = assert_data(head, args[0], std::stol(args[1]));
    } else {
      *out = assert_role(head, args[0], args[1]);
    }
    return true;
  }
  throw ParseError(lineno, 1, "bad assertion arity");
}

}  // namespace

std::string to_dl_text(const Axiom& a) {
  switch (a.kind) {
    case AxiomKind::SubClassOf:
      return dl_expr(a.lhs) + " <= " + dl_expr(a.rhs);
    case AxiomKind::EquivalentTo:
      return dl_expr(a.lhs) + " == " + dl_expr(a.rhs);
    case AxiomKind::ConceptAssertion:
      return dl_expr(a.lhs) + "(" + a.individual + ")";
    case AxiomKind::RoleAssertion:
      return a.role + "(" + a.individual + "," + a.individual2 + ")";
    case AxiomKind::DataAssertion:
      return a.role + "(" + a.individual + "," +
             (a.symbolic ? "#" + a.literal : a.literal) + ")";
  }
  return "";
}

std::string to_dl_text(const Ontology& onto) {
  std::ostringstream o;
  for (const auto& a : onto.tbox) o << to_dl_text(a) << "\n";
  for (const auto& a : onto.abox) o << to_dl_text(a) << "\n";
  return o.str();
}

ConceptExpr parse_dl_expr(const std::string& text) {
  Lexer lx{text};
  ConceptExpr e = parse_expr(lx);
  lx.skip_ws();
  if (!lx.eof()) lx.fail("trailing input");
  return canonicalize(e);
}

Ontology parse_dl_text(const std::string& text) {
  Ontology onto;
  int lineno = 0;
  for (const auto& raw : split(text, '\n')) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    size_t sub_at = line.find("<=");
    size_t eq_at = line.find("==");
    if (sub_at != std::string::npos &&
        (eq_at == std::string::npos || sub_at < eq_at)) {
      Lexer l{line.substr(0, sub_at)};
      l.line = lineno;
      ConceptExpr lhs = parse_expr(l);
      l.skip_ws();
      if (!l.eof()) l.fail("trailing input before '<='");
      std::string rest = trim(line.substr(sub_at + 2));
      if (rest.empty()) throw ParseError(lineno, static_cast<int>(sub_at + 2),
                                         "missing right side of '<='");
      Lexer r{rest};
      r.line = lineno;
      ConceptExpr rhs = parse_expr(r);
      onto.add(sub(lhs, rhs));
      continue;
    }
    if (eq_at != std::string::npos) {
      Lexer l{line.substr(0, eq_at)};
      l.line = lineno;
      ConceptExpr lhs = parse_expr(l);
      std::string rest = trim(line.substr(eq_at + 2));
      if (rest.empty()) throw ParseError(lineno, static_cast<int>(eq_at + 2),
                                         "missing right side of '=='");
      Lexer r{rest};
      r.line = lineno;
      ConceptExpr rhs = parse_expr(r);
      onto.add(equiv(lhs, rhs));
      continue;
    }
    Axiom a;
    if (try_parse_assertion(line, lineno, &a)) {
      onto.add(a);
      continue;
    }
    throw ParseError(lineno, 1, "unrecognized axiom '" + line + "'");
  }
  return onto;
}

std::string to_owl_functional(const Ontology& onto, const std::string& ns) {
  std::ostringstream o;
  o << "Prefix(:=<" << ns << ">)\n";
  o << "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
  o << "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n";
  std::string ontology_iri = ns;
  if (!ontology_iri.empty() && ontology_iri.back() == '#')
    ontology_iri.pop_back();
  o << "Ontology(<" << ontology_iri << ">\n";

  std::set<std::string> data_roles, object_roles;
  for (const auto* a : onto.all_axioms()) {
    collect_data_roles(a->lhs, &data_roles, &object_roles);
    collect_data_roles(a->rhs, &data_roles, &object_roles);
  }
  for (const auto& [name, info] : onto.roles) {
    if (info.used_data) data_roles.insert(name);
    if (info.used_object) object_roles.insert(name);
  }
  bool symbolic = false;
  for (const auto* a : onto.all_axioms()) {
    if (a->kind == AxiomKind::DataAssertion && a->symbolic) symbolic = true;
    std::function<void(const ConceptExpr&)> scan = [&](const ConceptExpr& e) {
      if (e.kind == ExprKind::DataNominal && e.symbolic) symbolic = true;
      for (const auto& x : e.args) scan(x);
    };
    scan(a->lhs);
    scan(a->rhs);
  }

  for (const auto& name : onto.concept_names())
    o << "Declaration(Class(:" << name << "))\n";
  for (const auto& r : object_roles)
    o << "Declaration(ObjectProperty(:" << r << "))\n";
  for (const auto& r : data_roles)
    o << "Declaration(DataProperty(:" << r << "))\n";
  if (symbolic) o << "Declaration(Datatype(:symbolicInteger))\n";
  for (const auto& i : onto.individuals)
    o << "Declaration(NamedIndividual(:" << i << "))\n";

  for (const auto& [name, info] : onto.roles) {
    if (info.transitive) o << "TransitiveObjectProperty(:" << name << ")\n";
    if (info.parent)
      o << "SubObjectPropertyOf(:" << name << " :" << *info.parent << ")\n";
  }

  for (const auto& a : onto.tbox) {
    if (a.kind == AxiomKind::SubClassOf) {
      o << "SubClassOf(" << owl_expr(a.lhs) << " " << owl_expr(a.rhs) << ")\n";
    } else if (a.lhs.kind == ExprKind::Nominal &&
               a.rhs.kind == ExprKind::Nominal) {
      o << "SameIndividual(:" << a.lhs.name << " :" << a.rhs.name << ")\n";
    } else {
      o << "EquivalentClasses(" << owl_expr(a.lhs) << " " << owl_expr(a.rhs)
        << ")\n";
    }
  }
  for (const auto& a : onto.abox) {
    switch (a.kind) {
      case AxiomKind::ConceptAssertion:
        o << "ClassAssertion(" << owl_expr(a.lhs) << " :" << a.individual
          << ")\n";
        break;
      case AxiomKind::RoleAssertion:
        o << "ObjectPropertyAssertion(:" << a.role << " :" << a.individual
          << " :" << a.individual2 << ")\n";
        break;
      case AxiomKind::DataAssertion:
        o << "DataPropertyAssertion(:" << a.role << " :" << a.individual
          << " \"" << a.literal << "\"^^"
          << (a.symbolic ? ":symbolicInteger" : "xsd:integer") << ")\n";
        break;
      default:
        break;
    }
  }
  o << ")\n";
  return o.str();
}

namespace {

// ---------- OWL functional parsing (own emitted subset) ----------

struct OwlLexer {
  std::string text;
  size_t pos = 0;
  int line = 1;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      if (text[pos] == '\n') ++line;
      ++pos;
    }
  }
  bool consume(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  std::string name() {
    skip_ws();
    size_t b = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return text.substr(b, pos - b);
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(line, 1, what);
  }
};

ConceptExpr parse_owl_expr(OwlLexer& lx) {
  lx.skip_ws();
  if (lx.consume("owl:Thing")) return top();
  if (lx.consume("owl:Nothing")) return bottom();
  if (lx.consume("ObjectIntersectionOf(")) {
    std::vector<ConceptExpr> parts;
    while (!lx.consume(")")) parts.push_back(parse_owl_expr(lx));
    return conj(parts);
  }
  if (lx.consume("ObjectUnionOf(")) {
    std::vector<ConceptExpr> parts;
    while (!lx.consume(")")) parts.push_back(parse_owl_expr(lx));
    return disj(parts);
  }
  if (lx.consume("ObjectComplementOf(")) {
    ConceptExpr e = parse_owl_expr(lx);
    if (!lx.consume(")")) lx.fail("expected ')'");
    return complement(e);
  }
  if (lx.consume("ObjectOneOf(")) {
    if (!lx.consume(":")) lx.fail("expected ':'");
    std::string n = lx.name();
    if (!lx.consume(")")) lx.fail("expected ')'");
    return nominal(n);
  }
  if (lx.consume("ObjectAllValuesFrom(")) {
    if (!lx.consume(":")) lx.fail("expected ':'");
    std::string role = lx.name();
    ConceptExpr filler = parse_owl_expr(lx);
    if (!lx.consume(")")) lx.fail("expected ')'");
    return all(role, filler);
  }
  if (lx.consume("DataAllValuesFrom(")) {
    if (!lx.consume(":")) lx.fail("expected ':'");
    std::string role = lx.name();
    lx.skip_ws();
    if (lx.consume("xsd:")) {
      std::string dt = lx.name();
      if (!lx.consume(")")) lx.fail("expected ')'");
      return data_all(role, dt);
    }
    if (lx.consume("DataOneOf(\"")) {
      size_t b = lx.pos;
      while (lx.pos < lx.text.size() && lx.text[lx.pos] != '"') ++lx.pos;
      std::string lit = lx.text.substr(b, lx.pos - b);
      ++lx.pos;  // closing quote
      bool symbolic = lx.consume("^^:symbolicInteger");
      if (!symbolic && !lx.consume("^^xsd:integer"))
        lx.fail("expected literal datatype");
      if (!lx.consume(")")) lx.fail("expected ')'");
      if (!lx.consume(")")) lx.fail("expected ')'");
      return all(role, data_nominal(lit, symbolic));
    }
    lx.fail("unsupported data range");
  }
  if (lx.consume(":")) return atom(lx.name());
  lx.fail("unsupported class expression");
}

}  // namespace

Ontology parse_owl_functional(const std::string& text) {
  Ontology onto;
  OwlLexer lx{text};
  while (true) {
    lx.skip_ws();
    if (lx.pos >= lx.text.size()) break;
    if (lx.consume("Prefix(") || lx.consume("Ontology(<")) {
      while (lx.pos < lx.text.size() && lx.text[lx.pos] != '\n') ++lx.pos;
      continue;
    }
    if (lx.consume(")")) continue;
    if (lx.consume("Declaration(")) {
      int depth = 1;
      while (lx.pos < lx.text.size() && depth > 0) {
        if (lx.text[lx.pos] == '(') ++depth;
        if (lx.text[lx.pos] == ')') --depth;
        ++lx.pos;
      }
      continue;
    }
    if (lx.consume("TransitiveObjectProperty(") ||
        lx.consume("SubObjectPropertyOf(")) {
      while (lx.pos < lx.text.size() && lx.text[lx.pos] != '\n') ++lx.pos;
      continue;
    }
    if (lx.consume("SubClassOf(")) {
      ConceptExpr l = parse_owl_expr(lx);
      ConceptExpr r = parse_owl_expr(lx);
      if (!lx.consume(")")) lx.fail("expected ')'");
      onto.add(sub(l, r));
      continue;
    }
    if (lx.consume("EquivalentClasses(")) {
      ConceptExpr l = parse_owl_expr(lx);
      ConceptExpr r = parse_owl_expr(lx);
      if (!lx.consume(")")) lx.fail("expected ')'");
      onto.add(equiv(l, r));
      continue;
    }
    if (lx.consume("SameIndividual(")) {
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string a = lx.name();
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string b = lx.name();
      if (!lx.consume(")")) lx.fail("expected ')'");
      onto.add(equiv(nominal(a), nominal(b)));
      continue;
    }
    if (lx.consume("ClassAssertion(")) {
      ConceptExpr c = parse_owl_expr(lx);
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string ind = lx.name();
      if (!lx.consume(")")) lx.fail("expected ')'");
      onto.add(assert_concept(c, ind));
      continue;
    }
    if (lx.consume("ObjectPropertyAssertion(")) {
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string role = lx.name();
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string a = lx.name();
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string b = lx.name();
      if (!lx.consume(")")) lx.fail("expected ')'");
      onto.add(assert_role(role, a, b));
      continue;
    }
    if (lx.consume("DataPropertyAssertion(")) {
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string role = lx.name();
      if (!lx.consume(":")) lx.fail("expected ':'");
      std::string a = lx.name();
      if (!lx.consume("\"")) lx.fail("expected literal");
      size_t b = lx.pos;
      while (lx.pos < lx.text.size() && lx.text[lx.pos] != '"') ++lx.pos;
      std::string lit = lx.text.substr(b, lx.pos - b);
      ++lx.pos;
      bool symbolic = lx.consume("^^:symbolicInteger");
      if (!symbolic && !lx.consume("^^xsd:integer"))
        lx.fail("expected literal datatype");
      if (!lx.consume(")")) lx.fail("expected ')'");
      if (symbolic)
        onto.add(assert_data_symbolic(role, a, lit));
      else
        onto.add(assert_data(role, a, std::stol(lit)));
      continue;
    }
    lx.fail("unsupported construct");
  }
  return onto;
}

Ontology load_ontology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw ParseError(0, 0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.size() > 4 && path.substr(path.size() - 4) == ".ofn")
    return parse_owl_functional(buf.str());
  return parse_dl_text(buf.str());
}

}  // namespace isadl
