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

#include "isadl/reason.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace isadl {

namespace {

constexpr int kMaxDepth = 64;

// Definition cycles: A == expr(A) can never be unfolded.
void check_definition_cycles(const Ontology& onto) {
  std::map<std::string, std::set<std::string>> deps;
  std::function<void(const ConceptExpr&, std::set<std::string>*)> atoms =
      [&](const ConceptExpr& e, std::set<std::string>* out) {
        if (e.kind == ExprKind::Atom) out->insert(e.name);
        for (const auto& a : e.args) atoms(a, out);
      };
  for (const auto& ax : onto.tbox) {
    if (ax.kind != AxiomKind::EquivalentTo) continue;
    const ConceptExpr* at = nullptr;
    const ConceptExpr* def = nullptr;
    if (ax.lhs.kind == ExprKind::Atom && ax.rhs.kind != ExprKind::Atom) {
      at = &ax.lhs;
      def = &ax.rhs;
    } else if (ax.rhs.kind == ExprKind::Atom &&
               ax.lhs.kind != ExprKind::Atom) {
      at = &ax.rhs;
      def = &ax.lhs;
    } else {
      continue;
    }
    atoms(*def, &deps[at->name]);
  }
  std::set<std::string> done;
  std::vector<std::string> path;
  std::set<std::string> on_path;
  std::function<void(const std::string&)> dfs = [&](const std::string& n) {
    if (done.count(n)) return;
    if (on_path.count(n)) {
      std::string cyc;
      bool in = false;
      for (const auto& p : path) {
        if (p == n) in = true;
        if (in) cyc += p + " -> ";
      }
      throw DefinitionCycle("definition cycle: " + cyc + n);
    }
    on_path.insert(n);
    path.push_back(n);
    for (const auto& d : deps[n]) dfs(d);
    path.pop_back();
    on_path.erase(n);
    done.insert(n);
  };
  for (const auto& [n, _] : deps) dfs(n);
}

}  // namespace

Reasoner::Reasoner(const Ontology& onto) : onto_(onto) {
  check_definition_cycles(onto);
  std::function<void(const ConceptExpr&, const ConceptExpr&)> note =
      [&](const ConceptExpr& lhs, const ConceptExpr& rhs) {
        if (lhs.kind == ExprKind::Bottom) return;
        if (rhs.kind == ExprKind::Top) return;
        supers_[lhs.key()].push_back(rhs);
        expr_by_key_.emplace(lhs.key(), lhs);
        // a union on the left decomposes onto its disjuncts
        if (lhs.kind == ExprKind::Or)
          for (const auto& d : lhs.args) note(d, rhs);
        if (lhs.kind == ExprKind::And) gcis_.emplace_back(lhs, rhs);
      };
  for (const auto& ax : onto_.tbox) {
    if (ax.kind == AxiomKind::SubClassOf) {
      note(ax.lhs, ax.rhs);
    } else if (ax.kind == AxiomKind::EquivalentTo) {
      note(ax.lhs, ax.rhs);
      note(ax.rhs, ax.lhs);
    }
  }
  named_ = onto_.concept_names();
}

std::set<std::string> Reasoner::closure(const ConceptExpr& e) const {
  std::string root_key = e.key();
  if (auto it = closure_memo_.find(root_key); it != closure_memo_.end())
    return it->second;
  std::set<std::string> out;
  std::vector<ConceptExpr> work{e};
  auto push = [&](const ConceptExpr& x) {
    if (out.insert(x.key()).second) {
      work.push_back(x);
      expr_by_key_.emplace(x.key(), x);
    }
  };
  out.insert(root_key);
  expr_by_key_.emplace(root_key, e);
  while (!work.empty()) {
    ConceptExpr cur = work.back();
    work.pop_back();
    if (auto it = supers_.find(cur.key()); it != supers_.end())
      for (const auto& s : it->second) push(s);
    if (cur.kind == ExprKind::And)
      for (const auto& m : cur.args) push(m);
  }
  // A union root is subsumed by whatever subsumes every disjunct.
  if (e.kind == ExprKind::Or && !e.args.empty()) {
    std::set<std::string> common = closure(e.args[0]);
    for (size_t i = 1; i < e.args.size(); ++i) {
      std::set<std::string> next = closure(e.args[i]);
      std::set<std::string> inter;
      std::set_intersection(common.begin(), common.end(), next.begin(),
                            next.end(), std::inserter(inter, inter.begin()));
      common = std::move(inter);
    }
    out.insert(common.begin(), common.end());
  }
  // Fire general inclusions to fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lhs, rhs] : gcis_) {
      bool all_in = true;
      for (const auto& m : lhs.args)
        if (!out.count(m.key())) all_in = false;
      if (all_in && out.insert(rhs.key()).second) {
        expr_by_key_.emplace(rhs.key(), rhs);
        changed = true;
        // pull the new member's supers in as well
        std::vector<ConceptExpr> w2{rhs};
        while (!w2.empty()) {
          ConceptExpr cur = w2.back();
          w2.pop_back();
          if (auto it = supers_.find(cur.key()); it != supers_.end())
            for (const auto& s : it->second)
              if (out.insert(s.key()).second) {
                expr_by_key_.emplace(s.key(), s);
                w2.push_back(s);
              }
          if (cur.kind == ExprKind::And)
            for (const auto& m : cur.args)
              if (out.insert(m.key()).second) {
                expr_by_key_.emplace(m.key(), m);
                w2.push_back(m);
              }
        }
      }
    }
  }
  closure_memo_[root_key] = out;
  return out;
}

bool Reasoner::check_sup(const ConceptExpr& sup, const ConceptExpr& sub,
                         const std::set<std::string>& sub_closure,
                         int depth) const {
  if (depth > kMaxDepth) return false;
  if (sup.kind == ExprKind::Top) return true;
  if (sub.kind == ExprKind::Bottom) return true;
  if (sub_closure.count(bottom().key())) return true;
  if (sup.key() == sub.key()) return true;
  if (sub_closure.count(sup.key())) return true;
  switch (sup.kind) {
    case ExprKind::And: {
      for (const auto& m : sup.args)
        if (!check_sup(m, sub, sub_closure, depth + 1)) return false;
      return true;
    }
    case ExprKind::Or: {
      for (const auto& m : sup.args)
        if (check_sup(m, sub, sub_closure, depth + 1)) return true;
      return false;
    }
    case ExprKind::Not: {
      // sub <= not E holds when some told not F covers it: not F <= not E
      // iff E <= F.
      for (const auto& k : sub_closure) {
        auto it = expr_by_key_.find(k);
        if (it == expr_by_key_.end()) continue;
        const ConceptExpr& got = it->second;
        if (got.kind == ExprKind::Not && subsumes(got.args[0], sup.args[0]))
          return true;
      }
      return false;
    }
    case ExprKind::All: {
      for (const auto& k : sub_closure) {
        auto it = expr_by_key_.find(k);
        if (it == expr_by_key_.end()) continue;
        const ConceptExpr& got = it->second;
        if (got.kind == ExprKind::All && got.name == sup.name &&
            subsumes(sup.args[0], got.args[0]))
          return true;
      }
      return false;
    }
    default:
      return false;
  }
}

bool Reasoner::subsumes(const ConceptExpr& sup_raw,
                        const ConceptExpr& sub_raw) const {
  ConceptExpr sup = canonicalize(sup_raw);
  ConceptExpr sub = canonicalize(sub_raw);
  std::string memo_key = sup.key() + "\x1f" + sub.key();
  if (auto it = subsume_memo_.find(memo_key); it != subsume_memo_.end())
    return it->second == 1;
  subsume_memo_[memo_key] = 0;  // in progress: coinductively false
  std::set<std::string> sc = closure(sub);
  bool r = check_sup(sup, sub, sc, 0);
  subsume_memo_[memo_key] = r ? 1 : 0;
  return r;
}

ConsistencyReport Reasoner::check_consistency() const {
  ConsistencyReport rep;
  auto clashing = [&](const ConceptExpr& e) -> bool {
    std::set<std::string> s = closure(e);
    if (s.count(bottom().key())) return true;
    for (const auto& nk : s) {
      auto nit = expr_by_key_.find(nk);
      if (nit == expr_by_key_.end() ||
          nit->second.kind != ExprKind::Not)
        continue;
      const ConceptExpr& neg = nit->second.args[0];
      for (const auto& pk : s) {
        auto pit = expr_by_key_.find(pk);
        if (pit == expr_by_key_.end()) continue;
        const ConceptExpr& pos = pit->second;
        if (pos.kind == ExprKind::Not) continue;
        if (pk == nk) continue;
        if (subsumes(neg, pos)) return true;
      }
    }
    return false;
  };
  for (const auto& name : named_) {
    if (clashing(atom(name))) rep.unsatisfiable.insert(name);
  }
  // Individuals asserted into clashing concept combinations.
  std::map<std::string, std::vector<ConceptExpr>> asserted;
  for (const auto& ax : onto_.abox)
    if (ax.kind == AxiomKind::ConceptAssertion)
      asserted[ax.individual].push_back(ax.lhs);
  for (const auto& ax : onto_.tbox) {
    if (ax.kind == AxiomKind::SubClassOf && ax.lhs.kind == ExprKind::Nominal)
      asserted[ax.lhs.name].push_back(ax.rhs);
  }
  for (const auto& [ind, cs] : asserted) {
    ConceptExpr combined = cs.size() == 1 ? cs[0] : conj(cs);
    if (clashing(combined))
      rep.abox_clashes.push_back("individual " + ind +
                                 " asserted into clashing concepts");
  }
  return rep;
}

TaxonomyGraph Reasoner::classify() const {
  TaxonomyGraph g;
  ConsistencyReport rep = check_consistency();
  g.unsatisfiable = rep.unsatisfiable;

  std::vector<std::string> names;
  for (const auto& n : named_)
    if (!rep.unsatisfiable.count(n)) names.push_back(n);
  std::sort(names.begin(), names.end());
  size_t n = names.size();

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      le[i][j] = i == j || subsumes(atom(names[j]), atom(names[i]));
  // transitive closure for safety
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;

  // merge equivalence classes; representative = smallest name
  std::vector<int> rep_of(n);
  for (size_t i = 0; i < n; ++i) {
    rep_of[i] = static_cast<int>(i);
    for (size_t j = 0; j < i; ++j)
      if (le[i][j] && le[j][i]) {
        rep_of[i] = rep_of[j];
        break;
      }
  }
  std::map<int, std::set<std::string>> classes;
  for (size_t i = 0; i < n; ++i) classes[rep_of[i]].insert(names[i]);
  std::vector<int> reps;
  for (const auto& [r, members] : classes) {
    reps.push_back(r);
    g.nodes.push_back(names[r]);
    g.equivalence_classes[names[r]] = members;
  }

  // condensed order + transitive reduction
  size_t m = reps.size();
  auto lt = [&](size_t a, size_t b) {
    return le[reps[a]][reps[b]] && rep_of[reps[a]] != rep_of[reps[b]];
  };
  for (size_t a = 0; a < m; ++a) {
    bool has_parent = false;
    for (size_t b = 0; b < m; ++b) {
      if (a == b || !lt(a, b)) continue;
      bool direct = true;
      for (size_t w = 0; w < m; ++w) {
        if (w == a || w == b) continue;
        if (lt(a, w) && lt(w, b)) {
          direct = false;
          break;
        }
      }
      if (direct) {
        g.edges.emplace_back(names[reps[a]], names[reps[b]]);
        has_parent = true;
      }
    }
    if (!has_parent) g.edges.emplace_back(names[reps[a]], "Top");
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool subsumes(const ConceptExpr& sup, const ConceptExpr& sub,
              const Ontology& onto) {
  Reasoner r(onto);
  return r.subsumes(sup, sub);
}

std::string TaxonomyGraph::to_tsv() const {
  std::ostringstream o;
  for (const auto& [child, parent] : edges) o << child << "\t" << parent << "\n";
  for (const auto& [rep, members] : equivalence_classes) {
    for (const auto& mbr : members)
      if (mbr != rep) o << mbr << "\t=" << rep << "\n";
  }
  for (const auto& u : unsatisfiable) o << u << "\t" << "Bottom" << "\n";
  return o.str();
}

std::string TaxonomyGraph::to_dot() const {
  std::ostringstream o;
  o << "digraph taxonomy {\n  rankdir=BT;\n";
  for (const auto& [child, parent] : edges)
    o << "  \"" << child << "\" -> \"" << parent << "\";\n";
  for (const auto& u : unsatisfiable)
    o << "  \"" << u << "\" -> \"Bottom\";\n";
  o << "}\n";
  return o.str();
}

std::set<std::string> TaxonomyGraph::ancestors(const std::string& node) const {
  std::set<std::string> out;
  std::vector<std::string> work{node};
  while (!work.empty()) {
    std::string cur = work.back();
    work.pop_back();
    for (const auto& [c, p] : edges)
      if (c == cur && p != "Top" && out.insert(p).second) work.push_back(p);
  }
  return out;
}

std::set<std::string> TaxonomyGraph::descendants(
    const std::string& node) const {
  std::set<std::string> out;
  std::vector<std::string> work{node};
  while (!work.empty()) {
    std::string cur = work.back();
    work.pop_back();
    for (const auto& [c, p] : edges)
      if (p == cur && out.insert(c).second) work.push_back(c);
  }
  return out;
}

}  // namespace isadl
