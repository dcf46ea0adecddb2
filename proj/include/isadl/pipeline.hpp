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

#ifndef ISADL_PIPELINE_HPP_
#define ISADL_PIPELINE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isadl/characterize.hpp"
#include "isadl/dl.hpp"
#include "isadl/evaluate.hpp"
#include "isadl/lexicon.hpp"
#include "isadl/translate.hpp"

namespace isadl {

struct ExpansionRecord {
  int expansion_id = 0;
  std::string normalized;
  bool subject_was_plural = false;
  bool object_was_plural = false;
  Tense tense = Tense::Present;
  std::string char_json;
  std::string rule_id;
  bool play_safe = false;
  std::vector<std::string> axioms;  // DL-text lines, counters resolved
};

struct SentenceRecord {
  int source_index = 0;
  std::string raw;
  bool rejected = false;
  std::string reject_code;
  std::string reject_reason;
  // outcome vs golden: "correct", "partial", "incorrect", "rejected";
  // empty when no golden was supplied
  std::string outcome;
  std::vector<ExpansionRecord> expansions;
};

struct PipelineOptions {
  bool pretagged = false;
  int jobs = 1;
};

struct PipelineResult {
  Ontology ontology;
  std::vector<SentenceRecord> sentences;

  std::string trace_json() const;
  CharacterizationCounts char_counts() const;
};

// Reads a corpus: one sentence per line, '#' comments and blanks skipped.
std::vector<std::string> read_corpus(const std::string& path);
std::vector<std::string> corpus_from_text(const std::string& text);

// Full pipeline: tag, triple-extract, singularize, normalize (with the
// sequential canonical-object pass), characterize, translate, merge. With
// jobs > 1 the pure per-sentence stages run on a thread pool; the merge is
// sequential in source order, so output is identical for any job count.
PipelineResult run_pipeline(const std::vector<std::string>& lines,
                            const Lexicon& lex,
                            const PipelineOptions& opts = {});

// Golden corpus annotations: expected per-sentence axiom lines (DL text,
// expansions concatenated in order) and expected outcome.
struct GoldenSentence {
  std::string outcome;  // "correct" or "partial"
  std::vector<std::string> axioms;
};

std::map<int, GoldenSentence> load_golden_axioms(const std::string& path);
std::string render_golden_axioms(const PipelineResult& result,
                                 const std::map<int, std::string>& outcomes);

// Expected characterization records, one JSON line per expansion keyed by
// "source_index:expansion_id".
std::map<std::string, std::string> load_golden_chars(const std::string& path);
std::string render_golden_chars(const PipelineResult& result);

// Stamps per-sentence outcomes by comparing against the goldens; either
// golden may be empty. Returns counts for CP/CR.
CharacterizationCounts apply_golden(
    PipelineResult* result, const std::map<int, GoldenSentence>& axioms,
    const std::map<std::string, std::string>& chars);

}  // namespace isadl

#endif  // ISADL_PIPELINE_HPP_
