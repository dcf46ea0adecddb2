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

#ifndef ISADL_TESTS_TEST_UTIL_HPP_
#define ISADL_TESTS_TEST_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "isadl/characterize.hpp"
#include "isadl/lexicon.hpp"
#include "isadl/pipeline.hpp"
#include "isadl/preprocess.hpp"
#include "isadl/serialize.hpp"
#include "isadl/tagger.hpp"
#include "isadl/translate.hpp"

namespace testutil {

inline const std::string kResources = ISADL_RESOURCE_DIR;
inline const std::string kLexiconDir = kResources + "/lexicon";
inline const std::string kCorpusDir = kResources + "/corpus";
inline const std::string kGoldenDir = kResources + "/golden";

inline const isadl::Lexicon& lexicon() {
  static isadl::Lexicon lex = isadl::load_lexicon(kLexiconDir);
  return lex;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs one raw sentence through the full front end; expects a single
// expansion and returns its translation batch as DL-text lines.
inline std::vector<std::string> translate_lines(const std::string& sentence) {
  const isadl::Lexicon& lex = lexicon();
  auto toks = isadl::tag(sentence, lex);
  auto simples = isadl::extract_triples(toks, lex, 0);
  std::vector<std::string> out;
  isadl::Ontology onto;
  for (auto& s : simples) {
    auto norm = isadl::normalize(isadl::singularize(s, lex), lex);
    auto cs = isadl::characterize(norm, lex);
    auto batch = isadl::translate(cs, lex);
    isadl::resolve_counters(&batch.axioms, &onto.counters);
    for (const auto& a : batch.axioms) out.push_back(isadl::to_dl_text(a));
  }
  return out;
}

inline isadl::CharSentence characterize_one(const std::string& sentence) {
  const isadl::Lexicon& lex = lexicon();
  auto toks = isadl::tag(sentence, lex);
  auto simples = isadl::extract_triples(toks, lex, 0);
  REQUIRE(simples.size() == 1);
  auto norm = isadl::normalize(isadl::singularize(simples[0], lex), lex);
  return isadl::characterize(norm, lex);
}

}  // namespace testutil

#endif  // ISADL_TESTS_TEST_UTIL_HPP_
