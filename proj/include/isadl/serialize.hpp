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

#ifndef ISADL_SERIALIZE_HPP_
#define ISADL_SERIALIZE_HPP_

#include <stdexcept>
#include <string>

#include "isadl/dl.hpp"

namespace isadl {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int l, int c, const std::string& what)
      : std::runtime_error("line " + std::to_string(l) + ":" +
                           std::to_string(c) + ": " + what),
        line(l),
        column(c) {}
};

inline constexpr const char* kDefaultNamespace = "https://example.org/dlol#";

// Deterministic OWL 2 functional syntax: fixed prefix block, declarations
// sorted lexicographically, axioms in insertion order.
std::string to_owl_functional(const Ontology& onto,
                              const std::string& ns = kDefaultNamespace);

// Compact DL text, one axiom per line: `<=`, `==`, `and`, `or`, `not`,
// `all R . C`, `{a}`, `{3}` integer data nominals, `{#n}` symbolic ranks,
// `<integer>` datatype, C(a), R(a,b), R(a,3).
std::string to_dl_text(const Ontology& onto);
std::string to_dl_text(const Axiom& axiom);

Ontology parse_dl_text(const std::string& text);
ConceptExpr parse_dl_expr(const std::string& text);  // single expression

// Reads back the OWL functional subset emitted by to_owl_functional.
Ontology parse_owl_functional(const std::string& text);

// Loads an ontology from a `.dlt` or `.ofn` file by extension.
Ontology load_ontology_file(const std::string& path);

}  // namespace isadl

#endif  // ISADL_SERIALIZE_HPP_
