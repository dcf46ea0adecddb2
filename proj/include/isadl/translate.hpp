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

#ifndef ISADL_TRANSLATE_HPP_
#define ISADL_TRANSLATE_HPP_

#include <string>
#include <vector>

#include "isadl/characterize.hpp"
#include "isadl/dl.hpp"
#include "isadl/lexicon.hpp"

namespace isadl {

// Axioms produced for one characterized sentence. Counter placeholders are
// unresolved; resolve_counters assigns them at merge time, which keeps
// translation pure and parallelizable.
struct Batch {
  std::vector<Axiom> axioms;
  std::string rule_id;
  bool play_safe = false;  // lossy play-safe rule applied
};

// Dispatches to exactly one rule family. Throws SentenceRejected with code
// UnsupportedShape, PosMismatch, or UnknownDimension.
Batch translate(const CharSentence& cs, const Lexicon& lex);

}  // namespace isadl

#endif  // ISADL_TRANSLATE_HPP_
