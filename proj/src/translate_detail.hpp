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

#ifndef ISADL_TRANSLATE_DETAIL_HPP_
#define ISADL_TRANSLATE_DETAIL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "isadl/characterize.hpp"
#include "isadl/dl.hpp"
#include "isadl/lexicon.hpp"
#include "isadl/translate.hpp"

namespace isadl::detail {

// An effective (possibly modified or reified) concept with its support
// axioms in emission order.
struct Eff {
  std::string label;          // concept label, "" when expr is not an atom
  ConceptExpr expr;           // what subsumption relates to
  std::vector<Axiom> before;  // support emitted before first use
  std::vector<Axiom> after;   // support emitted after the main axioms
  bool reified = false;
  std::string attr_label;     // reified attribute ("Tall")
};

// Recursive nested modification chain over `mods` + `head`; returns the
// outermost label, appending the chain axioms to `out`.
std::string modification_chain(const std::vector<Word>& mods,
                               const std::string& head,
                               std::vector<Axiom>* out);

// Effective object concept: modification chain plus JJ/RB reification
// (Thing flavor via hasState, Activity flavor for gerundive subjects).
enum class ReifyFlavor { Thing, Activity };
Eff object_eff(const std::vector<Word>& mods, const Word& head,
               ReifyFlavor flavor,
               const std::optional<std::string>& appositive_class);

// Effective subject concept for NN subjects.
Eff subject_eff(const CharSentence& cs);

// Membership sub-batch: O(S), induced [O+MSP](S) with its T-Box induction,
// or the nominal fallback when no MSP exists.
void membership(const Eff& obj, const std::string& subject_lexeme,
                const Lexicon& lex, std::vector<Axiom>* out);

// The single "Attribute"/"Activity" primitive names.
inline const char* kAttribute = "Attribute";
inline const char* kActivity = "Activity";

Batch rule_reify(const CharSentence& cs, const Lexicon& lex);
Batch rule_gerund(const CharSentence& cs, const Lexicon& lex);
Batch rule_equiv_similar(const CharSentence& cs, const Lexicon& lex);
Batch rule_holonymy(const CharSentence& cs, const Lexicon& lex);
Batch rule_only(const CharSentence& cs, const Lexicon& lex);
Batch rule_dimension(const CharSentence& cs, const Lexicon& lex);
Batch rule_modal(const CharSentence& cs, const Lexicon& lex);

bool is_modal(const CharSentence& cs);

}  // namespace isadl::detail

#endif  // ISADL_TRANSLATE_DETAIL_HPP_
