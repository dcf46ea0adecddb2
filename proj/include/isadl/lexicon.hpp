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

#ifndef ISADL_LEXICON_HPP_
#define ISADL_LEXICON_HPP_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace isadl {

// Kinds of the copular relation after normalization.
enum class IsaKind {
  Hyponymy,      // "is", "is a kind of"
  Hypernymy,     // "is class of", "is a category of"
  SameAs,        // "is same as", "is known as"
  Like,          // "is like", "is similar to"
  SuchAs,        // exemplification
  Includes,      // "includes" (hypernymy or holonymy, decided later)
  MayBe,
  CanBecome,
  CanBe,
  IsNow,
  IsStill,
  IsSometimes,
  WasPast,       // synthesized from past-tense copula
  WillBeFuture,  // synthesized from future-tense copula
};

enum class Tense { Past, Present, Future };

enum class QuantifierKind { A, The, Some, All, No, Only, SuchAs };

enum class ClauseKind { ThatIs, When, Where, Whereas, CounterFactual };

const char* to_string(IsaKind k);
const char* to_string(QuantifierKind q);
const char* to_string(ClauseKind c);
const char* to_string(Tense t);

struct LexiconError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionSense {
  std::string dimension;  // e.g. "Height"
  bool positive = true;
  auto operator<=>(const DimensionSense&) const = default;
};

struct UnitEntry {
  std::string dimension;        // "Height"
  std::string unit_concept;     // "Feet"
  std::string unit_abbrev;      // "ft" (individual name prefix)
  std::vector<std::string> surfaces;  // "foot", "feet", "ft"
};

// Immutable lexical resource bundle. All lookups are pure; safe to share
// across threads after load_lexicon returns.
class Lexicon {
 public:
  // Surface phrase (lowercased, single-spaced) -> kind.
  std::map<std::string, IsaKind> isa_variants;
  std::map<std::string, QuantifierKind> quantifier_variants;
  std::map<std::string, ClauseKind> clausal_variants;
  std::map<std::string, std::string> hypernym_parent;  // noun -> hypernym
  std::vector<std::set<std::string>> synonym_sets;
  std::map<std::string, std::string> named_entities;  // proper noun -> parent
  std::map<std::string, std::vector<DimensionSense>> dimensional_adjectives;
  std::vector<UnitEntry> units;
  // Tagger word list: surface (possibly multiword) -> Penn tag.
  std::map<std::string, std::string> word_tags;
  std::set<std::string> future_adverbs;

  // Most specific parent of a proper noun; absent when unknown.
  std::optional<std::string> get_msp(const std::string& proper_noun) const;

  // Longest-match classification of a predicate span that has already been
  // copula-normalized to its "is" form. Returns kind and number of tokens
  // consumed.
  std::optional<std::pair<IsaKind, int>> classify_isa_normalized(
      const std::vector<std::string>& tokens, size_t at) const;

  std::optional<QuantifierKind> quantifier(const std::string& phrase) const;
  std::optional<ClauseKind> clause(const std::string& token) const;

  // True when `hyponym` reaches `hypernym` in the hypernym graph.
  bool is_hyponym_of(const std::string& hyponym,
                     const std::string& hypernym) const;

  std::optional<DimensionSense> dimension_of(const std::string& adj) const;
  std::optional<UnitEntry> default_unit(const std::string& dimension) const;
  std::optional<UnitEntry> unit_by_surface(const std::string& surface) const;

  // Canonical member of the synonym set containing `word`, if any other
  // member has been designated canonical by the caller's first-seen policy.
  std::optional<std::set<std::string>> synonyms_of(const std::string& word) const;

  // Deterministic digest of all tables; loading the same resources twice
  // must produce equal digests.
  std::string digest() const;
};

// Classify a raw predicate span: folds the copula tense (was/were -> past,
// will/shall be -> future), then longest-matches against isa_variants.
// Returns kind, tense, and tokens consumed.
struct IsaMatch {
  IsaKind kind;
  Tense tense;
  int consumed;
};
std::optional<IsaMatch> classify_isa(const Lexicon& lex,
                                     const std::vector<std::string>& tokens,
                                     size_t at);

// Loads all TSV resources from `resource_dir`. Missing optional files yield
// empty tables; malformed lines and hypernym cycles raise LexiconError with
// file and line number.
Lexicon load_lexicon(const std::string& resource_dir);

}  // namespace isadl

#endif  // ISADL_LEXICON_HPP_
