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

#include "isadl/evaluate.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "isadl/tagger.hpp"
#include "isadl/text.hpp"

namespace isadl {

std::string canonical_concept(const std::string& name) {
  auto upper = [](char c) {
    return std::isupper(static_cast<unsigned char>(c)) != 0;
  };
  auto digit = [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  };
  std::vector<std::string> words;
  std::string cur;
  for (size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (c == '_' || c == ' ' || c == '-') {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
      continue;
    }
    bool boundary = false;
    if (i > 0) {
      char prev = name[i - 1];
      // lower->Upper, acronym-run end (PPRStudent -> ppr student), and
      // letter<->digit transitions
      if (upper(c) && !upper(prev) && !digit(prev) && prev != '_' &&
          prev != ' ' && prev != '-')
        boundary = true;
      if (upper(c) && upper(prev) && i + 1 < name.size() &&
          !upper(name[i + 1]) && !digit(name[i + 1]))
        boundary = true;
      if (digit(c) != digit(prev)) boundary = true;
    }
    if (boundary && !cur.empty()) {
      words.push_back(cur);
      cur.clear();
    }
    cur += std::tolower(static_cast<unsigned char>(c));
  }
  if (!cur.empty()) words.push_back(cur);
  for (auto& w : words) w = singular_noun(w);
  return join(words, " ");
}

double harmonic_mean(double a, double b) {
  if (a + b == 0) return 0;
  return 2 * a * b / (a + b);
}

namespace {

std::set<std::string> canonical_names(const Ontology& o) {
  std::set<std::string> out;
  for (const auto& n : o.concept_names()) out.insert(canonical_concept(n));
  return out;
}

std::set<std::string> intersect(const std::set<std::string>& a,
                                const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

}  // namespace

LexicalMetrics lexical_metrics(const Ontology& learned, const Ontology& gold) {
  std::set<std::string> L = canonical_names(learned);
  std::set<std::string> G = canonical_names(gold);
  if (L.empty() || G.empty())
    throw EmptyOntology("lexical metrics need non-empty concept sets");
  std::set<std::string> common = intersect(L, G);
  LexicalMetrics m;
  m.learned_count = L.size();
  m.gold_count = G.size();
  m.common_count = common.size();
  m.lp = static_cast<double>(common.size()) / static_cast<double>(L.size());
  m.lr = static_cast<double>(common.size()) / static_cast<double>(G.size());
  m.lf = harmonic_mean(m.lp, m.lr);
  m.oi = static_cast<double>(L.size() - common.size()) /
         static_cast<double>(G.size());
  m.ol = 1.0 - m.lr;
  return m;
}

std::set<std::string> common_semantic_cotopy(
    const std::string& concept_name, const TaxonomyGraph& own,
    const std::set<std::string>& own_lexicon,
    const std::set<std::string>& other_lexicon) {
  (void)own_lexicon;
  std::set<std::string> raw;
  // ancestors and descendants are computed over equivalence representatives;
  // expand through equivalence classes so merged names participate.
  std::string rep = concept_name;
  for (const auto& [r, members] : own.equivalence_classes)
    if (members.count(concept_name)) rep = r;
  raw.insert(concept_name);
  for (const auto& a : own.ancestors(rep)) raw.insert(a);
  for (const auto& d : own.descendants(rep)) raw.insert(d);
  for (const auto& [r, members] : own.equivalence_classes)
    if (raw.count(r)) raw.insert(members.begin(), members.end());
  std::set<std::string> out;
  for (const auto& n : raw) {
    std::string c = canonical_concept(n);
    if (other_lexicon.count(c)) out.insert(c);
  }
  return out;
}

TaxonomicMetrics taxonomic_metrics(const Ontology& learned,
                                   const TaxonomyGraph& learned_tax,
                                   const Ontology& gold,
                                   const TaxonomyGraph& gold_tax) {
  std::set<std::string> L = canonical_names(learned);
  std::set<std::string> G = canonical_names(gold);
  if (L.empty() || G.empty())
    throw EmptyOntology("taxonomic metrics need non-empty concept sets");
  std::set<std::string> shared = intersect(L, G);

  // map canonical name -> raw node names per side
  auto raw_by_canonical = [](const Ontology& o) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& n : o.concept_names())
      out[canonical_concept(n)].push_back(n);
    return out;
  };
  auto lmap = raw_by_canonical(learned);
  auto gmap = raw_by_canonical(gold);

  auto cotopy = [&](const std::string& canon, const TaxonomyGraph& tax,
                    const std::map<std::string, std::vector<std::string>>& names,
                    const std::set<std::string>& own_lex,
                    const std::set<std::string>& other_lex) {
    std::set<std::string> out;
    auto it = names.find(canon);
    if (it == names.end()) return out;
    for (const auto& raw : it->second) {
      auto c = common_semantic_cotopy(raw, tax, own_lex, other_lex);
      out.insert(c.begin(), c.end());
    }
    return out;
  };

  TaxonomicMetrics m;
  double tp_sum = 0, tr_sum = 0;
  size_t n = 0;
  for (const auto& c : shared) {
    std::set<std::string> cl = cotopy(c, learned_tax, lmap, L, G);
    std::set<std::string> cg = cotopy(c, gold_tax, gmap, G, L);
    std::set<std::string> common = intersect(cl, cg);
    if (!cl.empty())
      tp_sum += static_cast<double>(common.size()) /
                static_cast<double>(cl.size());
    else
      tp_sum += 1.0;
    if (!cg.empty())
      tr_sum += static_cast<double>(common.size()) /
                static_cast<double>(cg.size());
    else
      tr_sum += 1.0;
    ++n;
  }
  if (n == 0) {
    m.tp = m.tr = m.tf = 0;
    return m;
  }
  m.tp = tp_sum / static_cast<double>(n);
  m.tr = tr_sum / static_cast<double>(n);
  m.tf = harmonic_mean(m.tp, m.tr);
  return m;
}

std::pair<double, double> characterization_metrics(
    const CharacterizationCounts& counts) {
  double cp = counts.characterized
                  ? static_cast<double>(counts.correct) /
                        static_cast<double>(counts.characterized)
                  : 0;
  double cr = counts.total ? static_cast<double>(counts.correct) /
                                 static_cast<double>(counts.total)
                           : 0;
  return {cp, cr};
}

EvalReport evaluate(const Ontology& learned, const Ontology& gold,
                    const CharacterizationCounts* char_counts) {
  EvalReport r;
  r.lexical = lexical_metrics(learned, gold);
  Reasoner lr(learned), gr(gold);
  TaxonomyGraph lt = lr.classify();
  TaxonomyGraph gt = gr.classify();
  r.taxonomic = taxonomic_metrics(learned, lt, gold, gt);
  r.tf_prime = harmonic_mean(r.taxonomic.tf, r.lexical.lf);
  if (char_counts) {
    auto [cp, cr] = characterization_metrics(*char_counts);
    r.cp = cp;
    r.cr = cr;
  }
  return r;
}

namespace {

std::string fmt(double v) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(4) << v;
  return o.str();
}

}  // namespace

std::string EvalReport::to_json() const {
  std::ostringstream o;
  o << "{\"cp\":" << fmt(cp) << ",\"cr\":" << fmt(cr) << ",\"lp\":"
    << fmt(lexical.lp) << ",\"lr\":" << fmt(lexical.lr) << ",\"lf\":"
    << fmt(lexical.lf) << ",\"oi\":" << fmt(lexical.oi) << ",\"ol\":"
    << fmt(lexical.ol) << ",\"tp\":" << fmt(taxonomic.tp) << ",\"tr\":"
    << fmt(taxonomic.tr) << ",\"tf\":" << fmt(taxonomic.tf) << ",\"tf_prime\":"
    << fmt(tf_prime) << ",\"counts\":{\"learned\":" << lexical.learned_count
    << ",\"gold\":" << lexical.gold_count << ",\"common\":"
    << lexical.common_count << "}}";
  return o.str();
}

std::string EvalReport::to_table() const {
  std::ostringstream o;
  auto row = [&](const char* label, double v) {
    o << std::left << std::setw(8) << label << fmt(v) << "\n";
  };
  row("LP", lexical.lp);
  row("LR", lexical.lr);
  row("LF", lexical.lf);
  row("OI", lexical.oi);
  row("OL", lexical.ol);
  row("TP", taxonomic.tp);
  row("TR", taxonomic.tr);
  row("TF", taxonomic.tf);
  row("TF'", tf_prime);
  return o.str();
}

}  // namespace isadl
