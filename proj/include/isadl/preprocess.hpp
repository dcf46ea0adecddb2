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

#ifndef ISADL_PREPROCESS_HPP_
#define ISADL_PREPROCESS_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isadl/lexicon.hpp"
#include "isadl/tagger.hpp"

namespace isadl {

// A sentence is dropped from the pipeline with a recorded reason.
struct SentenceRejected : std::runtime_error {
  std::string code;
  int source_index;
  SentenceRejected(std::string c, int idx, const std::string& what)
      : std::runtime_error(what), code(std::move(c)), source_index(idx) {}
};

// One simplified sentence produced by triple extraction.
struct SimpleSentence {
  std::vector<Token> tokens;
  bool subject_was_plural = false;
  bool object_was_plural = false;
  int source_index = 0;
  int expansion_id = 0;

  // Filled by normalize.
  std::optional<IsaKind> isa_kind;
  Tense tense = Tense::Present;
  int isa_pos = -1;  // index of the first main IS-A token after normalization
  int isa_len = 0;

  std::string text() const { return detokenize(tokens); }
};

// Expands a tagged sentence into simple(r) sentences: conjunctive subject
// and object lists multiply out, disjunctive lists stay whole, subject
// clauses distribute over list members, adjectival secondary-subject
// clauses split into the merged-modifier sentence plus a restatement, and
// "whereas" compounds become independent sentences. Throws SentenceRejected
// when no IS-A span exists.
std::vector<SimpleSentence> extract_triples(const std::vector<Token>& tokens,
                                            const Lexicon& lex,
                                            int source_index);

// Lemmatizes plural nouns and plural copulas to singular forms and records
// the pre-rewrite plurality of the subject and object heads. NNP tokens are
// never altered.
SimpleSentence singularize(const SimpleSentence& s, const Lexicon& lex);

// First-seen canonical object lexemes per synonym set, built sequentially
// over the corpus before per-sentence normalization.
using CanonicalObjects = std::map<std::string, std::string>;

// Records the object head of `s` into the canonical table (first occurrence
// of any member of a synonym set wins).
void note_canonical_object(const SimpleSentence& s, const Lexicon& lex,
                           CanonicalObjects* canon);

// Rewrites IS-A/quantifier/clausal variants to their normal forms, spells
// out numeric modifiers, applies equivalence/similarity rewrites and object
// synonym canonicalization, and pins the main IS-A span.
SimpleSentence normalize(const SimpleSentence& s, const Lexicon& lex,
                         const CanonicalObjects& canon = {});

}  // namespace isadl

#endif  // ISADL_PREPROCESS_HPP_
