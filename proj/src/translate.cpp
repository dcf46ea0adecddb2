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

#include "isadl/translate.hpp"

#include <algorithm>

#include "isadl/text.hpp"
#include "translate_detail.hpp"

namespace isadl {

namespace detail {

std::string modification_chain(const std::vector<Word>& mods,
                               const std::string& head,
                               std::vector<Axiom>* out) {
  std::string head_label = label_part(head);
  if (mods.empty()) return head_label;
  size_t k = mods.size();
  auto chain_label = [&](size_t j) {
    std::vector<std::string> parts;
    for (size_t i = j; i < k; ++i) parts.push_back(mods[i].lexeme);
    parts.push_back(head);
    return mk_label(parts);
  };
  out->push_back(sub(atom(chain_label(k - 1)), atom(head_label)));
  for (size_t j = k - 1; j-- > 0;) {
    out->push_back(sub(atom(chain_label(j)), atom(chain_label(j + 1))));
    if (j == k - 2)
      out->push_back(
          sub(atom(chain_label(j)), atom(mk_label({mods[j].lexeme, head}))));
  }
  return chain_label(0);
}

Eff object_eff(const std::vector<Word>& mods, const Word& head,
               ReifyFlavor flavor,
               const std::optional<std::string>& appositive_class) {
  Eff e;
  std::string tag = head.tag == "NNS" ? "NN" : head.tag;
  if (tag == "JJ" || tag == "JJR" || tag == "RB") {
    std::vector<Axiom> chain;
    std::string attr = modification_chain(mods, head.lexeme, &chain);
    e.reified = true;
    e.attr_label = attr;
    if (flavor == ReifyFlavor::Thing) {
      std::string thing = attr + "Thing";
      e.label = thing;
      e.expr = atom(thing);
      e.before.push_back(equiv(atom(thing), all("hasState", atom(attr))));
      e.before.push_back(sub(atom(attr), atom(kAttribute)));
      e.before.insert(e.before.end(), chain.begin(), chain.end());
    } else {
      std::string act = attr + "Activity";
      e.label = act;
      e.expr = atom(act);
      e.before.insert(e.before.end(), chain.begin(), chain.end());
      e.after.push_back(sub(atom(act), atom(kActivity)));
    }
    return e;
  }
  if (appositive_class) {
    e.before.push_back(sub(atom(label_part(head.lexeme)),
                           atom(label_part(*appositive_class))));
  }
  e.label = modification_chain(mods, head.lexeme, &e.before);
  e.expr = atom(e.label);
  return e;
}

Eff subject_eff(const CharSentence& cs) {
  Eff e;
  if (cs.subject.tag == "NNP") {
    e.label = label_part(cs.subject.lexeme);
    e.expr = atom(e.label);
    return e;
  }
  e.label = modification_chain(cs.s_mods, cs.subject.lexeme, &e.before);
  e.expr = atom(e.label);
  return e;
}

void membership(const Eff& obj, const std::string& subject_lexeme,
                const Lexicon& lex, std::vector<Axiom>* out) {
  std::string ind = individual_name(subject_lexeme);
  out->push_back(assert_concept(obj.expr, ind));
  auto msp = lex.get_msp(subject_lexeme);
  if (msp) {
    std::string induced = mk_label({obj.label, *msp});
    out->push_back(assert_concept(atom(induced), ind));
    out->push_back(sub(atom(induced), obj.expr));
    out->push_back(sub(atom(induced), atom(label_part(*msp))));
  } else {
    std::string induced = obj.label + label_part(subject_lexeme);
    out->push_back(assert_concept(atom(induced), ind));
    out->push_back(sub(atom(induced), obj.expr));
    out->push_back(sub(atom(induced), nominal(ind)));
  }
}

bool is_modal(const CharSentence& cs) {
  switch (cs.isa) {
    case IsaKind::WasPast:
    case IsaKind::WillBeFuture:
    case IsaKind::MayBe:
    case IsaKind::CanBecome:
    case IsaKind::CanBe:
    case IsaKind::IsNow:
    case IsaKind::IsStill:
    case IsaKind::IsSometimes:
      return true;
    default:
      return cs.future_adverb.has_value();
  }
}

}  // namespace detail

namespace {

using detail::Eff;
using detail::membership;
using detail::modification_chain;
using detail::object_eff;
using detail::ReifyFlavor;
using detail::subject_eff;

void append(std::vector<Axiom>* out, const std::vector<Axiom>& axioms) {
  out->insert(out->end(), axioms.begin(), axioms.end());
}

// Simple-template sentences: membership, hypo/hypernymy, quantification,
// modification, and reification compose here.
Batch rule_simple(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  ReifyFlavor flavor = cs.subject.tag == "VBG" ? ReifyFlavor::Activity
                                               : ReifyFlavor::Thing;
  Eff obj = object_eff(cs.o_mods, cs.object1, flavor,
                       cs.object_appositive_class);

  bool negate = cs.q2 == QuantifierKind::No;
  bool q1no = cs.q1 == QuantifierKind::No;
  if (q1no && negate) {
    // double negation cancels: treated as all/all
    negate = false;
    q1no = false;
  } else if (q1no) {
    negate = true;
  }
  bool q2all = cs.q2 == QuantifierKind::All;
  // Named classes ("the family Felidae") are definite; no counter applies.
  bool named_class_object =
      cs.object1.tag == "NNP" || cs.object_appositive_class.has_value();
  bool q2counter = !negate && !named_class_object &&
                   (cs.q2 == QuantifierKind::Some ||
                    cs.q2 == QuantifierKind::The);

  if (q2counter) {
    std::string counted = obj.label + counter_ref("O:" + obj.label);
    obj.after.push_back(sub(atom(counted), obj.expr));
    obj.expr = atom(counted);
    obj.label = counted;
  }
  ConceptExpr target = negate ? complement(obj.expr) : obj.expr;

  append(&b.axioms, obj.before);

  if (cs.subject.tag == "NNP") {
    std::string ind = individual_name(cs.subject.lexeme);
    if (cs.q1 == QuantifierKind::A) {
      // "A John is a student": induced via the most specific parent.
      b.rule_id = "T-QNT-A-SUBJ";
      auto msp = lex.get_msp(cs.subject.lexeme);
      std::string anchor = msp ? label_part(*msp) : label_part(ind);
      std::string induced = mk_label({obj.label, anchor});
      b.axioms.push_back(assert_concept(atom(induced), ind));
      if (msp) b.axioms.push_back(assert_concept(atom(anchor), ind));
      b.axioms.push_back(sub(atom(induced), target));
      b.axioms.push_back(
          sub(atom(induced), msp ? atom(anchor) : nominal(ind)));
      b.play_safe = true;
    } else if (negate) {
      b.rule_id = "T-QNT-NO-OBJ";
      b.axioms.push_back(sub(nominal(ind), target));
    } else {
      b.rule_id = obj.reified ? "N-REIFY" : "T-MEM";
      if (!lex.get_msp(cs.subject.lexeme) && !obj.reified)
        b.rule_id = "T-MEM-NOM";
      membership(obj, cs.subject.lexeme, lex, &b.axioms);
    }
    append(&b.axioms, obj.after);
    return b;
  }

  Eff subj = subject_eff(cs);
  append(&b.axioms, subj.before);

  bool sub_some = cs.q1 == QuantifierKind::Some;
  // "the" here is the singular instance reading (the plural case was
  // normalized to "some"); "a" is the epistemic play-safe. An "all" object
  // forces the generic reading, and gerund subjects have no instances.
  bool inst = !q2all &&
              (cs.q1 == QuantifierKind::The || cs.q1 == QuantifierKind::A) &&
              cs.subject.tag != "VBG";

  if (sub_some) {
    std::string pair = mk_label({obj.label, subj.label});
    b.axioms.push_back(sub(atom(pair), subj.expr));
    b.axioms.push_back(sub(atom(pair), target));
    b.rule_id = q2counter ? "T-QNT-OBJ-SOME" : "T-QNT-SOME-SUBJ";
  } else if (inst) {
    std::string pair = mk_label({obj.label, subj.label});
    std::string instance =
        cs.subject_instance
            ? individual_name(*cs.subject_instance)
            : lower(cs.subject.lexeme) + counter_ref("S:" + lower(cs.subject.lexeme));
    b.axioms.push_back(assert_concept(atom(pair), instance));
    b.axioms.push_back(sub(atom(pair), subj.expr));
    b.axioms.push_back(sub(atom(pair), target));
    b.rule_id = cs.q1 == QuantifierKind::The ? "T-QNT-THE-SING-SUBJ"
                                             : "T-QNT-A-SUBJ";
    b.play_safe = cs.q1 == QuantifierKind::A;
  } else if (q2counter) {
    // unquantified subject with an indefinite object still pairs
    std::string pair = mk_label({obj.label, subj.label});
    b.axioms.push_back(sub(atom(pair), subj.expr));
    b.axioms.push_back(sub(atom(pair), target));
    b.rule_id = "T-QNT-OBJ-SOME";
  } else {
    b.axioms.push_back(sub(subj.expr, target));
    if (negate) b.rule_id = "T-QNT-NO-SUBJ";
    else if (q2all) b.rule_id = "T-QNT-OBJ-ALL";
    else if (cs.q1 == QuantifierKind::All) b.rule_id = "T-QNT-ALL-SUBJ";
    else if (obj.reified) b.rule_id = "N-REIFY";
    else if (!cs.s_mods.empty() || !cs.o_mods.empty()) b.rule_id = "T-MOD-NEST";
    else b.rule_id = "T-HYPO";
  }
  append(&b.axioms, obj.after);
  return b;
}

// "Animal is a category of cat": the subsumption inverts.
Batch rule_hypernymy(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  b.rule_id = "T-HYPER";
  Eff obj = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Thing,
                       cs.object_appositive_class);
  Eff subj = subject_eff(cs);
  append(&b.axioms, subj.before);
  append(&b.axioms, obj.before);
  b.axioms.push_back(sub(obj.expr, subj.expr));
  append(&b.axioms, obj.after);
  (void)lex;
  return b;
}

// "Carnivorous animal includes Kitty": membership with the sides swapped.
Batch rule_inverse_membership(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  b.rule_id = "T-MEM";
  Word head = cs.subject;
  Eff cls = object_eff(cs.s_mods, head, ReifyFlavor::Thing, std::nullopt);
  append(&b.axioms, cls.before);
  membership(cls, cs.object1.lexeme, lex, &b.axioms);
  append(&b.axioms, cls.after);
  return b;
}

Batch rule_such_as(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  const PhraseList& ex = *cs.such_as;
  Eff obj = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Thing,
                       cs.object_appositive_class);
  Eff subj = subject_eff(cs);
  append(&b.axioms, obj.before);
  append(&b.axioms, subj.before);
  bool conjunctive =
      ex.connective == Connective::Conj || ex.members.size() == 1;
  if (conjunctive) {
    b.rule_id = "T-SUCHAS-CONJ";
    std::vector<std::string> parts;
    for (const auto& m : ex.members) parts.push_back(m.head.lexeme);
    parts.push_back(subj.label);
    std::string L = mk_label(parts);
    b.axioms.push_back(sub(atom(L), obj.expr));
    b.axioms.push_back(sub(atom(L), subj.expr));
    for (const auto& m : ex.members)
      if (m.head.tag == "NNP")
        b.axioms.push_back(
            assert_concept(atom(L), individual_name(m.head.lexeme)));
  } else {
    b.rule_id = "T-SUCHAS-DISJ";
    std::vector<ConceptExpr> parts;
    std::vector<std::string> labels;
    for (const auto& m : ex.members) {
      labels.push_back(mk_label({m.head.lexeme, subj.label}));
      parts.push_back(atom(labels.back()));
    }
    ConceptExpr u = disj(parts);
    b.axioms.push_back(sub(u, obj.expr));
    b.axioms.push_back(sub(u, subj.expr));
    for (size_t i = 0; i < ex.members.size(); ++i)
      if (ex.members[i].head.tag == "NNP")
        b.axioms.push_back(assert_concept(
            atom(labels[i]), individual_name(ex.members[i].head.lexeme)));
  }
  append(&b.axioms, obj.after);
  (void)lex;
  return b;
}

Batch rule_compound(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  if (cs.subject_list) {
    const PhraseList& sl = *cs.subject_list;
    Eff obj = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Thing,
                         cs.object_appositive_class);
    append(&b.axioms, obj.before);
    b.rule_id = "T-CMP-UNION";
    bool all_nnp = std::all_of(sl.members.begin(), sl.members.end(),
                               [](const NounPhrase& m) {
                                 return m.head.tag == "NNP";
                               });
    if (all_nnp) {
      std::optional<std::string> msp;
      bool shared = true;
      for (const auto& m : sl.members) {
        auto p = lex.get_msp(m.head.lexeme);
        if (!p) shared = false;
        else if (!msp) msp = p;
        else if (*msp != *p) shared = false;
      }
      std::vector<ConceptExpr> noms;
      for (const auto& m : sl.members)
        noms.push_back(nominal(individual_name(m.head.lexeme)));
      ConceptExpr u = disj(noms);
      if (shared && msp) {
        std::string induced = mk_label({obj.label, *msp});
        b.axioms.push_back(sub(atom(induced), obj.expr));
        b.axioms.push_back(sub(atom(induced), atom(label_part(*msp))));
        b.axioms.push_back(sub(u, atom(induced)));
      } else {
        b.axioms.push_back(sub(u, obj.expr));
      }
    } else {
      std::vector<ConceptExpr> parts;
      for (const auto& m : sl.members) {
        std::vector<Axiom> chain;
        std::string l = modification_chain(m.mods, m.head.lexeme, &chain);
        append(&b.axioms, chain);
        parts.push_back(atom(l));
      }
      b.axioms.push_back(sub(disj(parts), obj.expr));
    }
    append(&b.axioms, obj.after);
    return b;
  }
  // object-side disjunction: S <= O1 | O2 | ...
  b.rule_id = "T-CMP-UNION-OBJ";
  Eff subj = subject_eff(cs);
  append(&b.axioms, subj.before);
  std::vector<ConceptExpr> parts;
  for (const auto& m : cs.object_list->members) {
    std::vector<Axiom> chain;
    std::string l = modification_chain(m.mods, m.head.lexeme, &chain);
    append(&b.axioms, chain);
    parts.push_back(atom(l));
  }
  b.axioms.push_back(sub(subj.expr, disj(parts)));
  return b;
}

Batch rule_complex(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  Eff subj = subject_eff(cs);
  if (cs.clause1) {
    // Case 3: the subject is constrained by both predicates.
    b.rule_id = "T-CLS-3";
    Eff o1 = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Thing,
                        cs.object_appositive_class);
    Eff o2 = object_eff(cs.object2->mods, cs.object2->head,
                        ReifyFlavor::Thing, std::nullopt);
    append(&b.axioms, subj.before);
    append(&b.axioms, o1.before);
    if (cs.subject.tag == "NNP")
      membership(o1, cs.subject.lexeme, lex, &b.axioms);
    else
      b.axioms.push_back(sub(subj.expr, o1.expr));
    append(&b.axioms, o1.after);
    append(&b.axioms, o2.before);
    if (cs.subject.tag == "NNP")
      membership(o2, cs.subject.lexeme, lex, &b.axioms);
    else
      b.axioms.push_back(sub(subj.expr, o2.expr));
    append(&b.axioms, o2.after);
    return b;
  }
  // Case 2 (and the ambiguous Case 1): the clause modifies the primary
  // object, which becomes a modified secondary subject concept.
  b.rule_id = "T-CLS-2";
  Eff o2 = object_eff(cs.object2->mods, cs.object2->head, ReifyFlavor::Thing,
                      std::nullopt);
  append(&b.axioms, o2.before);
  std::vector<std::string> parts{o2.label};
  for (const auto& m : cs.o_mods) parts.push_back(m.lexeme);
  parts.push_back(cs.object1.lexeme);
  std::string combined = mk_label(parts);
  b.axioms.push_back(sub(atom(combined), o2.expr));
  if (!cs.o_mods.empty()) {
    std::vector<Axiom> chain;
    std::string mod_o1 = modification_chain(cs.o_mods, cs.object1.lexeme,
                                            &chain);
    b.axioms.push_back(sub(atom(combined), atom(mod_o1)));
    append(&b.axioms, chain);
  } else {
    b.axioms.push_back(
        sub(atom(combined), atom(label_part(cs.object1.lexeme))));
  }
  append(&b.axioms, o2.after);
  append(&b.axioms, subj.before);
  if (cs.subject.tag == "NNP") {
    Eff combined_eff;
    combined_eff.label = combined;
    combined_eff.expr = atom(combined);
    membership(combined_eff, cs.subject.lexeme, lex, &b.axioms);
  } else {
    b.axioms.push_back(sub(subj.expr, atom(combined)));
  }
  return b;
}

}  // namespace

Batch translate(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  if (cs.such_as) {
    b = rule_such_as(cs, lex);
  } else if (cs.isa == IsaKind::SameAs || cs.isa == IsaKind::Like) {
    b = detail::rule_equiv_similar(cs, lex);
  } else if (cs.isa == IsaKind::Includes) {
    if (cs.object1.tag == "NNP" && !cs.object_list)
      b = rule_inverse_membership(cs, lex);
    else
      b = detail::rule_holonymy(cs, lex);
  } else if (detail::is_modal(cs)) {
    b = detail::rule_modal(cs, lex);
  } else if (cs.only_position) {
    b = detail::rule_only(cs, lex);
  } else if (cs.numeric || cs.superlative || cs.comparative_ref) {
    b = detail::rule_dimension(cs, lex);
  } else if (cs.isa == IsaKind::Hypernymy) {
    b = rule_hypernymy(cs, lex);
  } else if (cs.subject_list ||
             (cs.object_list &&
              cs.object_list->connective == Connective::Disj)) {
    b = rule_compound(cs, lex);
  } else if (cs.clause1 || cs.clause2) {
    b = rule_complex(cs, lex);
  } else if (!cs.s_mods.empty() && cs.s_mods.back().tag == "VBG" &&
             (cs.subject.tag == "NN" || cs.subject.tag == "NNS")) {
    b = detail::rule_gerund(cs, lex);
  } else if (cs.subject.tag == "JJ" || cs.subject.tag == "RB") {
    throw SentenceRejected("UnsupportedShape", cs.source_index,
                           "adjectival subject outside equivalence rules");
  } else {
    b = rule_simple(cs, lex);
  }
  for (auto& a : b.axioms) {
    a.source_index = cs.source_index;
    a.rule_id = b.rule_id;
  }
  return b;
}

}  // namespace isadl
