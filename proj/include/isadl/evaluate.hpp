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

#ifndef ISADL_EVALUATE_HPP_
#define ISADL_EVALUATE_HPP_

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "isadl/dl.hpp"
#include "isadl/reason.hpp"

namespace isadl {

struct EmptyOntology : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LexicalMetrics {
  double lp = 0, lr = 0, lf = 0, oi = 0, ol = 0;
  size_t learned_count = 0, gold_count = 0, common_count = 0;
};

struct TaxonomicMetrics {
  double tp = 0, tr = 0, tf = 0;
};

struct CharacterizationCounts {
  size_t total = 0;
  size_t characterized = 0;
  size_t correct = 0;
};

struct EvalReport {
  double cp = 0, cr = 0;
  LexicalMetrics lexical;
  TaxonomicMetrics taxonomic;
  double tf_prime = 0;

  std::string to_json() const;
  std::string to_table() const;  // aligned columns, one measure per row
};

// Concept-name normalization for matching learned labels against gold
// labels: camel boundaries split to words, lowercased, each word
// singularized ("StudentPerson" -> "student person").
std::string canonical_concept(const std::string& name);

double harmonic_mean(double a, double b);

LexicalMetrics lexical_metrics(const Ontology& learned, const Ontology& gold);

// Common-semantic-cotopy based precision/recall over classified taxonomies.
TaxonomicMetrics taxonomic_metrics(const Ontology& learned,
                                   const TaxonomyGraph& learned_tax,
                                   const Ontology& gold,
                                   const TaxonomyGraph& gold_tax);

// cp = correct/characterized, cr = correct/total.
std::pair<double, double> characterization_metrics(
    const CharacterizationCounts& counts);

EvalReport evaluate(const Ontology& learned, const Ontology& gold,
                    const CharacterizationCounts* char_counts = nullptr);

// Exposed for the metric property tests: the cotopy of one concept.
std::set<std::string> common_semantic_cotopy(const std::string& concept_name,
                                             const TaxonomyGraph& own,
                                             const std::set<std::string>& own_lexicon,
                                             const std::set<std::string>& other_lexicon);

}  // namespace isadl

#endif  // ISADL_EVALUATE_HPP_
