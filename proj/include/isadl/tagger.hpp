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

#ifndef ISADL_TAGGER_HPP_
#define ISADL_TAGGER_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "isadl/lexicon.hpp"

namespace isadl {

struct Token {
  std::string lexeme;  // surface form (original capitalization for NNP)
  std::string tag;     // Penn tag; copulas are VBX; FW never survives
  int index = 0;       // 0-based position within the sentence
};

struct TaggerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic rule tagger: closed-class lists, lexicon word list (with
// multiword merging), irregular plural handling, then suffix heuristics.
// Unknown capitalized words become NNP, other unknowns NN.
std::vector<Token> tag(const std::string& sentence, const Lexicon& lex);

// Ingests pre-tagged input of the form "John_NNP is_VBX a_DT student_NN".
// Copular VBZ/VBD/VBP are folded onto VBX; FW is rewritten to NN.
std::vector<Token> parse_pretagged(const std::string& line);

// Surface text back from tokens (single-space joined).
std::string detokenize(const std::vector<Token>& tokens);

// True when the word is a plural common noun form the tagger recognizes;
// used by the singularizer and for plurality flags.
bool is_plural_noun(const std::string& word, const Lexicon& lex);

// Singular form of a noun: irregular table, then suffix rules.
std::string singular_noun(const std::string& word);

}  // namespace isadl

#endif  // ISADL_TAGGER_HPP_
