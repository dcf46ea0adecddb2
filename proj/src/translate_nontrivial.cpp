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

#include <algorithm>

#include "isadl/text.hpp"
#include "translate_detail.hpp"

namespace isadl::detail {

namespace {

void append(std::vector<Axiom>* out, const std::vector<Axiom>& axioms) {
  out->insert(out->end(), axioms.begin(), axioms.end());
}

std::string dim_role(const std::string& dimension) {
  return "has" + dimension;
}

// Dimension individuals are named by the dimension's initial ("H_John");
// unit individuals by the unit abbreviation ("ft_John").
std::string dim_individual(const std::string& dimension,
                           const std::string& subject_ind) {
  return dimension.substr(0, 1) + "_" + subject_ind;
}

}  // namespace

// Plain reification: NN subjects via hasState/Attribute, VBG subjects via
// Activity. NNP subjects compose with membership in rule_simple instead.
Batch rule_reify(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  b.rule_id = "N-REIFY";
  ReifyFlavor flavor = cs.subject.tag == "VBG" ? ReifyFlavor::Activity
                                               : ReifyFlavor::Thing;
  Eff obj = object_eff(cs.o_mods, cs.object1, flavor, std::nullopt);
  Eff subj = subject_eff(cs);
  append(&b.axioms, subj.before);
  if (flavor == ReifyFlavor::Thing) {
    append(&b.axioms, obj.before);
    b.axioms.push_back(sub(subj.expr, obj.expr));
  } else {
    b.axioms.push_back(sub(subj.expr, obj.expr));
    append(&b.axioms, obj.after);
  }
  (void)lex;
  return b;
}

// Gerund-modified subjects: the modification direction is ambiguous, so
// [M+S] sits under the object and under (M or S).
Batch rule_gerund(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  b.rule_id = "N-GERUND";
  b.play_safe = true;
  std::vector<std::string> parts;
  for (const auto& m : cs.s_mods) parts.push_back(m.lexeme);
  parts.push_back(cs.subject.lexeme);
  std::string ms = mk_label(parts);
  Eff obj = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Activity,
                       cs.object_appositive_class);
  append(&b.axioms, obj.before);
  b.axioms.push_back(sub(atom(ms), obj.expr));
  append(&b.axioms, obj.after);
  std::vector<ConceptExpr> alts;
  for (const auto& m : cs.s_mods) alts.push_back(atom(label_part(m.lexeme)));
  alts.push_back(atom(label_part(cs.subject.lexeme)));
  b.axioms.push_back(sub(atom(ms), disj(alts)));
  (void)lex;
  return b;
}

Batch rule_equiv_similar(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  std::string st = cs.subject.tag == "NNS" ? "NN" : cs.subject.tag;
  std::string ot = cs.object1.tag == "NNS" ? "NN" : cs.object1.tag;
  if (cs.isa == IsaKind::SameAs) {
    if (st != ot)
      throw SentenceRejected("PosMismatch", cs.source_index,
                             "equivalence needs matching POS (" + st + " vs " +
                                 ot + ")");
    b.rule_id = "N-EQUIV";
    if (st == "NNP") {
      // another identity of the same individual
      b.axioms.push_back(equiv(nominal(individual_name(cs.subject.lexeme)),
                               nominal(individual_name(cs.object1.lexeme))));
    } else {
      Eff subj = subject_eff(cs);
      Eff obj = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Thing,
                           cs.object_appositive_class);
      append(&b.axioms, subj.before);
      append(&b.axioms, obj.before);
      b.axioms.push_back(equiv(subj.expr, obj.expr));
      append(&b.axioms, obj.after);
    }
    return b;
  }
  b.rule_id = "N-LIKE";
  Eff subj = subject_eff(cs);
  Eff obj = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Thing,
                       cs.object_appositive_class);
  append(&b.axioms, subj.before);
  append(&b.axioms, obj.before);
  std::string common = mk_label({obj.label, "Like"});
  b.axioms.push_back(sub(subj.expr, atom(common)));
  b.axioms.push_back(sub(obj.expr, atom(common)));
  append(&b.axioms, obj.after);
  (void)lex;
  return b;
}

// "includes": hypernymy when the lexicon supports it, aggregation via the
// transitive include role otherwise.
Batch rule_holonymy(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  Eff subj = subject_eff(cs);
  append(&b.axioms, subj.before);

  std::vector<NounPhrase> members;
  if (cs.object_list)
    members = cs.object_list->members;
  else
    members.push_back(NounPhrase{cs.q2, cs.o_mods, cs.object1});

  bool all_hyponyms = true;
  for (const auto& m : members)
    if (!lex.is_hyponym_of(m.head.lexeme, cs.subject.lexeme))
      all_hyponyms = false;

  if (all_hyponyms) {
    b.rule_id = "T-HYPER";
    for (const auto& m : members) {
      std::vector<Axiom> chain;
      std::string l = modification_chain(m.mods, m.head.lexeme, &chain);
      append(&b.axioms, chain);
      b.axioms.push_back(sub(atom(l), subj.expr));
    }
    return b;
  }
  b.rule_id = "N-HOLO";
  std::vector<ConceptExpr> fillers;
  for (const auto& m : members) {
    std::vector<Axiom> chain;
    std::string l = modification_chain(m.mods, m.head.lexeme, &chain);
    append(&b.axioms, chain);
    fillers.push_back(atom(l));
  }
  b.axioms.push_back(equiv(subj.expr, all("include", disj(fillers))));
  return b;
}

Batch rule_only(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  Eff obj = object_eff(cs.o_mods, cs.object1, ReifyFlavor::Thing,
                       cs.object_appositive_class);
  ConceptExpr subject_concept;
  std::vector<Axiom> subj_before;
  if (cs.subject.tag == "NNP") {
    subject_concept = nominal(individual_name(cs.subject.lexeme));
  } else {
    Eff subj = subject_eff(cs);
    subject_concept = subj.expr;
    subj_before = subj.before;
  }
  append(&b.axioms, subj_before);
  append(&b.axioms, obj.before);
  switch (*cs.only_position) {
    case OnlyPosition::Object:
      b.rule_id = "N-ONLY-1";
      b.axioms.push_back(sub(subject_concept, obj.expr));
      b.axioms.push_back(equiv(
          conj({subject_concept, complement(obj.expr)}), bottom()));
      break;
    case OnlyPosition::Subject:
      b.rule_id = "N-ONLY-2";
      b.axioms.push_back(sub(subject_concept, obj.expr));
      break;
    case OnlyPosition::TheOnly:
      b.rule_id = "N-ONLY-3";
      b.axioms.push_back(equiv(subject_concept, obj.expr));
      b.axioms.push_back(equiv(
          conj({subject_concept, complement(obj.expr)}), bottom()));
      break;
  }
  append(&b.axioms, obj.after);
  (void)lex;
  return b;
}

namespace {

// Modifier words minus the numeric/superlative machinery, for labels like
// FiveFootTallPerson and TallestStudentPerson.
std::vector<std::string> dim_label_parts(const CharSentence& cs) {
  std::vector<std::string> parts;
  for (const auto& m : cs.o_mods) parts.push_back(m.lexeme);
  parts.push_back(cs.object1.lexeme);
  return parts;
}

}  // namespace

Batch rule_dimension(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  std::string subject_ind = cs.subject.tag == "NNP"
                                ? individual_name(cs.subject.lexeme)
                                : "";
  auto msp = cs.subject.tag == "NNP" ? lex.get_msp(cs.subject.lexeme)
                                     : std::nullopt;

  if (cs.numeric) {
    b.rule_id = "N-DIM-NUM";
    const Word& adj = cs.object1;
    auto sense = lex.dimension_of(adj.lexeme);
    if (!sense)
      throw SentenceRejected("UnknownDimension", cs.source_index,
                             "no dimension for '" + adj.lexeme + "'");
    auto unit = cs.numeric->unit ? lex.unit_by_surface(*cs.numeric->unit)
                                 : lex.default_unit(sense->dimension);
    if (!unit)
      throw SentenceRejected("UnknownDimension", cs.source_index,
                             "no unit for dimension " + sense->dimension);
    std::string attr = label_part(adj.lexeme);
    std::string thing = attr + "Thing";
    b.axioms.push_back(equiv(atom(thing), all("hasState", atom(attr))));
    b.axioms.push_back(sub(atom(attr), atom(kAttribute)));
    b.axioms.push_back(sub(atom(sense->dimension), atom("Dimension")));
    b.axioms.push_back(sub(atom(unit->unit_concept), atom("Unit")));

    std::vector<std::string> parts = dim_label_parts(cs);
    if (msp) parts.push_back(*msp);
    std::string subject_label =
        cs.subject.tag == "NNP"
            ? mk_label(parts)
            : subject_eff(cs).label;  // NN subject defines itself
    ConceptExpr def = conj(
        {atom(thing),
         all(dim_role(sense->dimension),
             conj({atom(sense->dimension),
                   all("hasUnit", conj({atom(unit->unit_concept),
                                        data_all("hasValue", "integer")}))}))});
    b.axioms.push_back(equiv(atom(subject_label), def));
    if (!subject_ind.empty()) {
      std::string d_ind = dim_individual(sense->dimension, subject_ind);
      std::string u_ind = unit->unit_abbrev + "_" + subject_ind;
      b.axioms.push_back(assert_concept(atom(subject_label), subject_ind));
      b.axioms.push_back(assert_concept(atom(sense->dimension), d_ind));
      b.axioms.push_back(
          assert_role(dim_role(sense->dimension), subject_ind, d_ind));
      b.axioms.push_back(assert_concept(atom(unit->unit_concept), u_ind));
      b.axioms.push_back(assert_role("hasUnit", d_ind, u_ind));
      b.axioms.push_back(assert_data("hasValue", u_ind, cs.numeric->value));
    }
    return b;
  }

  if (cs.superlative) {
    const SuperlativeModifier& sup = *cs.superlative;
    b.rule_id = sup.rank == 1 ? "N-DIM-SUP" : "N-DIM-RANKSUP";
    std::string base = sup.adjective;
    auto sense = lex.dimension_of(base);
    if (!sense && base.size() > 3 && base.substr(base.size() - 3) == "est") {
      // strip the superlative suffix: "tallest" -> "tall", "largest" ->
      // "large", "biggest" -> "big"
      std::string stem = base.substr(0, base.size() - 3);
      std::vector<std::string> candidates{stem, stem + "e"};
      if (stem.size() > 1 && stem.back() == stem[stem.size() - 2])
        candidates.push_back(stem.substr(0, stem.size() - 1));
      for (const auto& c : candidates) {
        if (auto d = lex.dimension_of(c)) {
          sense = d;
          base = c;
          break;
        }
      }
    }
    if (!sense)
      throw SentenceRejected("UnknownDimension", cs.source_index,
                             "no dimension for '" + sup.adjective + "'");
    std::string attr = label_part(base);
    std::string thing = attr + "Thing";
    b.axioms.push_back(equiv(atom(thing), all("hasState", atom(attr))));
    b.axioms.push_back(sub(atom(attr), atom(kAttribute)));
    b.axioms.push_back(sub(atom(sense->dimension), atom("Dimension")));

    std::vector<std::string> parts = dim_label_parts(cs);
    if (msp) parts.push_back(*msp);
    std::string subject_label = cs.subject.tag == "NNP"
                                    ? mk_label(parts)
                                    : subject_eff(cs).label;
    bool negative = sup.negative || !sense->positive;
    ConceptExpr rank_value =
        negative ? (sup.rank == 1 ? data_nominal("n", true)
                                  : data_nominal("n-" + std::to_string(sup.rank),
                                                 true))
                 : data_nominal(std::to_string(sup.rank), false);
    std::vector<ConceptExpr> def_parts{atom(thing),
                                       atom(label_part(cs.object1.lexeme))};
    if (msp) def_parts.push_back(atom(label_part(*msp)));
    def_parts.push_back(
        all(dim_role(sense->dimension),
            conj({atom(sense->dimension),
                  all("hasRank",
                      conj({atom("Rank"), all("hasValue", rank_value)}))})));
    b.axioms.push_back(equiv(atom(subject_label), conj(def_parts)));
    if (!subject_ind.empty()) {
      std::string d_ind = dim_individual(sense->dimension, subject_ind);
      std::string r_ind = "r_" + subject_ind;
      b.axioms.push_back(assert_concept(atom(subject_label), subject_ind));
      b.axioms.push_back(assert_concept(atom(sense->dimension), d_ind));
      b.axioms.push_back(
          assert_role(dim_role(sense->dimension), subject_ind, d_ind));
      b.axioms.push_back(assert_concept(atom("Rank"), r_ind));
      b.axioms.push_back(assert_role("hasRank", d_ind, r_ind));
      if (negative)
        b.axioms.push_back(assert_data_symbolic(
            "hasValue", r_ind,
            sup.rank == 1 ? "n" : "n-" + std::to_string(sup.rank)));
      else
        b.axioms.push_back(assert_data("hasValue", r_ind, sup.rank));
    }
    return b;
  }

  // comparative: "John is a more intelligent student than Mary"
  b.rule_id = "N-DIM-CMP";
  const Word& ref = *cs.comparative_ref;
  std::string adj;
  for (const auto& m : cs.o_mods)
    if (lex.dimension_of(m.lexeme)) adj = lower(m.lexeme);
  if (adj.empty())
    throw SentenceRejected("UnknownDimension", cs.source_index,
                           "no dimensional adjective in comparative");
  auto sense = lex.dimension_of(adj);
  auto unit = lex.default_unit(sense->dimension);
  if (!unit)
    throw SentenceRejected("UnknownDimension", cs.source_index,
                           "no unit for dimension " + sense->dimension);

  // modified object without the comparative marker words
  std::vector<Word> obj_mods;
  for (const auto& m : cs.o_mods) {
    std::string w = lower(m.lexeme);
    if (w == "more" || w == "less") continue;
    obj_mods.push_back(m);
  }
  std::vector<Axiom> chain;
  std::string mod_obj =
      modification_chain(obj_mods, cs.object1.lexeme, &chain);
  append(&b.axioms, chain);

  std::string ref_label =
      ref.tag == "NNP"
          ? mk_label({individual_name(ref.lexeme),
                      lex.get_msp(ref.lexeme).value_or("")})
          : label_part(ref.lexeme);
  std::string d_nominal = "d_" + ref_label;

  std::vector<std::string> subj_parts = dim_label_parts(cs);
  subj_parts.push_back(ref_label);
  std::string subject_label = mk_label(subj_parts);

  auto frame = [&](ConceptExpr value_filler) {
    std::vector<ConceptExpr> parts{atom(mod_obj)};
    if (msp) parts.push_back(atom(label_part(*msp)));
    parts.push_back(
        all(dim_role(sense->dimension),
            conj({atom(sense->dimension),
                  all("hasUnit", conj({atom(unit->unit_concept),
                                       all("hasValue", value_filler)}))})));
    return conj(parts);
  };
  b.axioms.push_back(equiv(
      atom(subject_label),
      frame(all("hasGreaterValue", nominal(d_nominal)))));
  b.axioms.push_back(equiv(atom(ref_label), frame(nominal(d_nominal))));
  if (!subject_ind.empty())
    b.axioms.push_back(assert_concept(atom(subject_label), subject_ind));
  if (ref.tag == "NNP")
    b.axioms.push_back(
        assert_concept(atom(ref_label), individual_name(ref.lexeme)));
  return b;
}

namespace {

const char* modal_prefix(IsaKind k) {
  switch (k) {
    case IsaKind::WasPast: return "PPR";
    case IsaKind::WillBeFuture: return "FPR";
    case IsaKind::MayBe: return "mayBe";
    case IsaKind::CanBecome: return "canBecome";
    case IsaKind::CanBe: return "canBe";
    case IsaKind::IsNow: return "isNow";
    case IsaKind::IsStill: return "isStill";
    case IsaKind::IsSometimes: return "isSometimes";
    default: return "";
  }
}

const char* modal_rule_id(IsaKind k) {
  switch (k) {
    case IsaKind::WasPast: return "N-PPR";
    case IsaKind::WillBeFuture: return "N-FPR";
    case IsaKind::MayBe: return "N-MAYBE";
    case IsaKind::CanBecome: return "N-CANBECOME";
    case IsaKind::CanBe: return "N-CANBE";
    case IsaKind::IsNow: return "N-ISNOW";
    case IsaKind::IsStill: return "N-ISSTILL";
    case IsaKind::IsSometimes: return "N-SOMETIMES";
    default: return "N-FPR";
  }
}

// Core modal axioms with `subject` in the S position.
void modal_core(IsaKind k, const ConceptExpr& subject, const ConceptExpr& obj,
                bool equivalence_form, std::vector<Axiom>* out) {
  switch (k) {
    case IsaKind::WasPast:
      out->push_back(sub(subject, disj({obj, all("PPR", obj)})));
      out->push_back(sub(obj, complement(all("PPR", obj))));
      break;
    case IsaKind::WillBeFuture:
      if (equivalence_form)
        out->push_back(equiv(subject, all("FPR", obj)));
      else
        out->push_back(sub(subject, all("FPR", obj)));
      break;
    case IsaKind::MayBe:
      out->push_back(equiv(subject, all("mayBe", obj)));
      break;
    case IsaKind::CanBecome:
      out->push_back(equiv(subject, all("canBecome", obj)));
      break;
    case IsaKind::CanBe:
      out->push_back(equiv(subject, all("canBe", obj)));
      break;
    case IsaKind::IsNow:
      out->push_back(equiv(subject, all("isNow", obj)));
      break;
    case IsaKind::IsStill:
      out->push_back(sub(subject, conj({obj, all("PPR", obj)})));
      break;
    case IsaKind::IsSometimes:
      out->push_back(equiv(subject, all("isSometimes", obj)));
      break;
    default:
      break;
  }
}

}  // namespace

Batch rule_modal(const CharSentence& cs, const Lexicon& lex) {
  Batch b;
  ReifyFlavor flavor = cs.subject.tag == "VBG" ? ReifyFlavor::Activity
                                               : ReifyFlavor::Thing;
  Eff obj = object_eff(cs.o_mods, cs.object1, flavor,
                       cs.object_appositive_class);

  // Future adverbial modifier: S <= ([M+O] and all FPR.O), [M+O] <= O.
  if (cs.future_adverb && cs.isa != IsaKind::WillBeFuture) {
    b.rule_id = "N-FPR";
    Eff subj = subject_eff(cs);
    append(&b.axioms, subj.before);
    append(&b.axioms, obj.before);
    std::string mo = mk_label({*cs.future_adverb, obj.label});
    b.axioms.push_back(sub(atom(mo), obj.expr));
    b.axioms.push_back(
        sub(subj.expr, conj({atom(mo), all("FPR", obj.expr)})));
    append(&b.axioms, obj.after);
    return b;
  }

  IsaKind k = cs.isa;
  b.rule_id = modal_rule_id(k);
  b.play_safe = (k == IsaKind::WasPast);
  append(&b.axioms, obj.before);

  if (cs.subject.tag == "NNP") {
    std::string ind = individual_name(cs.subject.lexeme);
    auto msp = lex.get_msp(cs.subject.lexeme);
    std::string anchor = msp ? label_part(*msp) : "";
    std::string induced =
        msp ? mk_label({modal_prefix(k), obj.label, anchor})
            : mk_label({modal_prefix(k), obj.label}) + label_part(ind);
    modal_core(k, atom(induced), obj.expr, /*equivalence_form=*/true,
               &b.axioms);
    if (msp)
      b.axioms.push_back(sub(atom(induced), atom(anchor)));
    else
      b.axioms.push_back(sub(atom(induced), nominal(ind)));
    b.axioms.push_back(assert_concept(atom(induced), ind));
    if (msp) b.axioms.push_back(assert_concept(atom(anchor), ind));
    append(&b.axioms, obj.after);
    return b;
  }

  Eff subj = subject_eff(cs);
  append(&b.axioms, subj.before);
  modal_core(k, subj.expr, obj.expr, /*equivalence_form=*/true, &b.axioms);
  append(&b.axioms, obj.after);
  return b;
}

}  // namespace isadl::detail
