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

#ifndef ISADL_CHARACTERIZE_HPP_
#define ISADL_CHARACTERIZE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "isadl/lexicon.hpp"
#include "isadl/preprocess.hpp"

namespace isadl {

struct Word {
  std::string lexeme;
  std::string tag;
  bool operator==(const Word&) const = default;
};

enum class OnlyPosition { Subject, Object, TheOnly };

enum class Connective { Conj, Disj };

struct NounPhrase {
  std::optional<QuantifierKind> q;
  std::vector<Word> mods;
  Word head;
  bool operator==(const NounPhrase&) const = default;
};

struct PhraseList {
  Connective connective = Connective::Conj;
  std::vector<NounPhrase> members;
  bool operator==(const PhraseList&) const = default;
};

struct NumericModifier {
  long value = 0;
  std::string spelled;               // "five"
  std::optional<std::string> unit;   // normalized unit surface ("foot")
  bool operator==(const NumericModifier&) const = default;
};

struct SuperlativeModifier {
  bool negative = false;  // "least"/negative-polarity adjective
  long rank = 1;          // m for ranked superlatives ("third" -> 3)
  std::string adjective;  // base or superlative surface ("tallest")
  bool operator==(const SuperlativeModifier&) const = default;
};

// A sentence fitted to the characterization template.
struct CharSentence {
  std::optional<QuantifierKind> q1;
  std::vector<Word> s_mods;
  Word subject;
  std::optional<std::string> subject_instance;  // appositive NNP
  IsaKind isa = IsaKind::Hyponymy;
  Tense tense = Tense::Present;
  std::optional<QuantifierKind> q2;
  std::vector<Word> o_mods;
  Word object1;
  std::optional<std::string> object_appositive_class;  // "family Felidae"
  std::optional<ClauseKind> clause1, clause2;
  std::optional<NounPhrase> object2;
  std::optional<PhraseList> subject_list, object_list;
  std::optional<PhraseList> such_as;  // exemplars, on the subject side
  std::optional<Word> comparative_ref;
  std::optional<OnlyPosition> only_position;
  std::optional<NumericModifier> numeric;
  std::optional<SuperlativeModifier> superlative;
  std::optional<std::string> future_adverb;
  bool subject_was_plural = false;
  bool object_was_plural = false;
  int source_index = 0;
  int expansion_id = 0;
};

// Fits a normalized simple/complex/compound sentence into the template.
// Throws SentenceRejected with code NoTemplateMatch or InvalidPosDependency.
CharSentence characterize(const SimpleSentence& s, const Lexicon& lex);

// The six invalid subject/object POS pairs; NNP/NNP rewrites the kind to
// SameAs. Throws SentenceRejected(InvalidPosDependency) on the bad pairs.
IsaKind validate_pos_dependency(const std::string& s_tag,
                                const std::string& o_tag, IsaKind isa,
                                int source_index);

// Canonical normal-form text of a characterized sentence; re-characterizing
// the rendered text yields an identical record.
std::string to_normal_text(const CharSentence& cs);

// JSON object (single line) for the golden characterization trace.
std::string to_json(const CharSentence& cs);

}  // namespace isadl

#endif  // ISADL_CHARACTERIZE_HPP_
