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

#include "isadl/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "isadl/text.hpp"

namespace isadl {

const char* to_string(IsaKind k) {
  switch (k) {
    case IsaKind::Hyponymy: return "hyponymy";
    case IsaKind::Hypernymy: return "hypernymy";
    case IsaKind::SameAs: return "same_as";
    case IsaKind::Like: return "like";
    case IsaKind::SuchAs: return "such_as";
    case IsaKind::Includes: return "includes";
    case IsaKind::MayBe: return "may_be";
    case IsaKind::CanBecome: return "can_become";
    case IsaKind::CanBe: return "can_be";
    case IsaKind::IsNow: return "is_now";
    case IsaKind::IsStill: return "is_still";
    case IsaKind::IsSometimes: return "is_sometimes";
    case IsaKind::WasPast: return "was_past";
    case IsaKind::WillBeFuture: return "will_be_future";
  }
  return "?";
}

const char* to_string(QuantifierKind q) {
  switch (q) {
    case QuantifierKind::A: return "a";
    case QuantifierKind::The: return "the";
    case QuantifierKind::Some: return "some";
    case QuantifierKind::All: return "all";
    case QuantifierKind::No: return "no";
    case QuantifierKind::Only: return "only";
    case QuantifierKind::SuchAs: return "such_as";
  }
  return "?";
}

const char* to_string(ClauseKind c) {
  switch (c) {
    case ClauseKind::ThatIs: return "that_is";
    case ClauseKind::When: return "when";
    case ClauseKind::Where: return "where";
    case ClauseKind::Whereas: return "whereas";
    case ClauseKind::CounterFactual: return "counter_factual";
  }
  return "?";
}

const char* to_string(Tense t) {
  switch (t) {
    case Tense::Past: return "past";
    case Tense::Present: return "present";
    case Tense::Future: return "future";
  }
  return "?";
}

namespace {

struct TsvReader {
  std::string path;
  std::ifstream in;
  int lineno = 0;
  bool ok;

  explicit TsvReader(const std::string& p) : path(p), in(p) { ok = in.good(); }

  bool next(std::vector<std::string>* fields) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      *fields = split(line, '\t');
      for (auto& f : *fields) f = trim(f);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw LexiconError(path + ":" + std::to_string(lineno) + ": " + what);
  }
};

IsaKind parse_isa_kind(TsvReader& r, const std::string& s) {
  static const std::map<std::string, IsaKind> kKinds = {
      {"hyponymy", IsaKind::Hyponymy},   {"hypernymy", IsaKind::Hypernymy},
      {"same_as", IsaKind::SameAs},      {"like", IsaKind::Like},
      {"such_as", IsaKind::SuchAs},      {"includes", IsaKind::Includes},
      {"may_be", IsaKind::MayBe},        {"can_become", IsaKind::CanBecome},
      {"can_be", IsaKind::CanBe},        {"is_now", IsaKind::IsNow},
      {"is_still", IsaKind::IsStill},    {"is_sometimes", IsaKind::IsSometimes},
  };
  auto it = kKinds.find(s);
  if (it == kKinds.end()) r.fail("unknown IS-A kind '" + s + "'");
  return it->second;
}

QuantifierKind parse_quant_kind(TsvReader& r, const std::string& s) {
  static const std::map<std::string, QuantifierKind> kKinds = {
      {"a", QuantifierKind::A},       {"the", QuantifierKind::The},
      {"some", QuantifierKind::Some}, {"all", QuantifierKind::All},
      {"no", QuantifierKind::No},     {"only", QuantifierKind::Only},
      {"such_as", QuantifierKind::SuchAs},
  };
  auto it = kKinds.find(s);
  if (it == kKinds.end()) r.fail("unknown quantifier kind '" + s + "'");
  return it->second;
}

ClauseKind parse_clause_kind(TsvReader& r, const std::string& s) {
  static const std::map<std::string, ClauseKind> kKinds = {
      {"that_is", ClauseKind::ThatIs},
      {"when", ClauseKind::When},
      {"where", ClauseKind::Where},
      {"whereas", ClauseKind::Whereas},
      {"counter_factual", ClauseKind::CounterFactual},
  };
  auto it = kKinds.find(s);
  if (it == kKinds.end()) r.fail("unknown clause kind '" + s + "'");
  return it->second;
}

void check_acyclic(const std::map<std::string, std::string>& parent,
                   const std::string& path) {
  for (const auto& [start, _] : parent) {
    std::set<std::string> seen;
    std::string cur = start;
    while (true) {
      auto it = parent.find(cur);
      if (it == parent.end()) break;
      if (!seen.insert(cur).second)
        throw LexiconError(path + ": hypernym cycle through '" + cur + "'");
      cur = it->second;
    }
  }
}

// Minimal WordNet 2.1 data.noun reader: collects hypernym ("@", "@i")
// edges between the first lemma of each synset.
void load_wordnet_data(const std::string& path,
                       std::map<std::string, std::string>* parent) {
  std::ifstream in(path);
  if (!in.good()) return;
  // First pass: synset offset -> head lemma.
  std::map<std::string, std::string> head;
  std::string line;
  std::vector<std::pair<std::string, std::string>> edges;  // offset -> offset
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == ' ') continue;  // license header block
    auto f = split_ws(line);
    if (f.size() < 6) continue;
    const std::string& offset = f[0];
    int w_cnt = 0;
    try {
      w_cnt = std::stoi(f[3], nullptr, 16);
    } catch (...) {
      continue;
    }
    if (w_cnt < 1 || 4 + 2 * w_cnt >= static_cast<int>(f.size())) continue;
    std::string lemma = lower(f[4]);
    std::replace(lemma.begin(), lemma.end(), '_', ' ');
    head[offset] = lemma;
    size_t at = 4 + 2 * static_cast<size_t>(w_cnt);
    int p_cnt = 0;
    try {
      p_cnt = std::stoi(f[at]);
    } catch (...) {
      continue;
    }
    ++at;
    for (int i = 0; i < p_cnt && at + 3 < f.size() + 1; ++i, at += 4) {
      if (at + 3 >= f.size() + 1 && at + 3 > f.size()) break;
      if (at + 3 > f.size()) break;
      const std::string& sym = f[at];
      if (sym == "@" || sym == "@i") edges.emplace_back(offset, f[at + 1]);
    }
  }
  for (const auto& [child, par] : edges) {
    auto c = head.find(child);
    auto p = head.find(par);
    if (c == head.end() || p == head.end()) continue;
    // Bundled TSV entries take precedence over the WordNet overlay.
    parent->emplace(c->second, p->second);
  }
}

}  // namespace

std::optional<std::string> Lexicon::get_msp(
    const std::string& proper_noun) const {
  std::string key = lower(proper_noun);
  if (auto it = named_entities.find(key); it != named_entities.end())
    return it->second;
  // Fall back to direct hypernyms; ties broken lexicographically (the map
  // holds a single parent per word, so this is the stored edge).
  if (auto it = hypernym_parent.find(key); it != hypernym_parent.end())
    return capitalize(it->second);
  return std::nullopt;
}

std::optional<std::pair<IsaKind, int>> Lexicon::classify_isa_normalized(
    const std::vector<std::string>& tokens, size_t at) const {
  std::optional<std::pair<IsaKind, int>> best;
  std::string phrase;
  for (size_t n = 0; at + n < tokens.size() && n < 6; ++n) {
    if (n) phrase += ' ';
    phrase += lower(tokens[at + n]);
    auto it = isa_variants.find(phrase);
    if (it != isa_variants.end())
      best = std::make_pair(it->second, static_cast<int>(n + 1));
  }
  return best;
}

std::optional<QuantifierKind> Lexicon::quantifier(
    const std::string& phrase) const {
  auto it = quantifier_variants.find(lower(phrase));
  if (it == quantifier_variants.end()) return std::nullopt;
  return it->second;
}

std::optional<ClauseKind> Lexicon::clause(const std::string& token) const {
  auto it = clausal_variants.find(lower(token));
  if (it == clausal_variants.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_hyponym_of(const std::string& hyponym,
                            const std::string& hypernym) const {
  std::string cur = lower(hyponym);
  std::string target = lower(hypernym);
  std::set<std::string> seen;
  while (seen.insert(cur).second) {
    auto it = hypernym_parent.find(cur);
    if (it == hypernym_parent.end()) return false;
    cur = it->second;
    if (cur == target) return true;
  }
  return false;
}

std::optional<DimensionSense> Lexicon::dimension_of(
    const std::string& adj) const {
  auto it = dimensional_adjectives.find(lower(adj));
  if (it == dimensional_adjectives.end() || it->second.empty())
    return std::nullopt;
  return it->second.front();
}

std::optional<UnitEntry> Lexicon::default_unit(
    const std::string& dimension) const {
  for (const auto& u : units)
    if (u.dimension == dimension) return u;
  return std::nullopt;
}

std::optional<UnitEntry> Lexicon::unit_by_surface(
    const std::string& surface) const {
  std::string s = lower(surface);
  if (!s.empty() && s.back() == '.') s.pop_back();
  for (const auto& u : units)
    for (const auto& f : u.surfaces)
      if (f == s) return u;
  return std::nullopt;
}

std::optional<std::set<std::string>> Lexicon::synonyms_of(
    const std::string& word) const {
  std::string w = lower(word);
  for (const auto& s : synonym_sets)
    if (s.count(w)) return s;
  return std::nullopt;
}

std::string Lexicon::digest() const {
  std::ostringstream out;
  for (const auto& [k, v] : isa_variants) out << "I" << k << "=" << to_string(v) << ";";
  for (const auto& [k, v] : quantifier_variants) out << "Q" << k << "=" << to_string(v) << ";";
  for (const auto& [k, v] : clausal_variants) out << "C" << k << "=" << to_string(v) << ";";
  for (const auto& [k, v] : hypernym_parent) out << "H" << k << ">" << v << ";";
  for (const auto& s : synonym_sets) out << "S" << join({s.begin(), s.end()}, ",") << ";";
  for (const auto& [k, v] : named_entities) out << "N" << k << ">" << v << ";";
  for (const auto& [k, v] : dimensional_adjectives) {
    out << "D" << k << ">";
    for (const auto& d : v) out << d.dimension << (d.positive ? "+" : "-");
    out << ";";
  }
  for (const auto& u : units)
    out << "U" << u.dimension << ":" << u.unit_concept << ":" << u.unit_abbrev
        << ":" << join(u.surfaces, ",") << ";";
  for (const auto& [k, v] : word_tags) out << "W" << k << "/" << v << ";";
  for (const auto& w : future_adverbs) out << "F" << w << ";";
  return out.str();
}

std::optional<IsaMatch> classify_isa(const Lexicon& lex,
                                     const std::vector<std::string>& tokens,
                                     size_t at) {
  if (at >= tokens.size()) return std::nullopt;
  // Fold the copula to its present form, remembering the tense.
  std::vector<std::string> folded(tokens.begin() + at, tokens.end());
  Tense tense = Tense::Present;
  std::string head = lower(folded[0]);
  if (head == "was" || head == "were") {
    folded[0] = "is";
    tense = Tense::Past;
  } else if ((head == "will" || head == "shall") && folded.size() > 1 &&
             lower(folded[1]) == "be") {
    folded.erase(folded.begin());
    folded[0] = "is";
    tense = Tense::Future;
  } else if (head == "are" || head == "am" || head == "be") {
    folded[0] = "is";
  } else if (head == "include" || head == "contain" || head == "comprise") {
    folded[0] = head + "s";
  }
  auto m = lex.classify_isa_normalized(folded, 0);
  if (!m) return std::nullopt;
  int consumed = m->second;
  if (tense == Tense::Future) ++consumed;  // the dropped "will"/"shall"
  return IsaMatch{m->first, tense, consumed};
}

Lexicon load_lexicon(const std::string& resource_dir) {
  namespace fs = std::filesystem;
  Lexicon lex;
  auto path = [&](const char* name) { return resource_dir + "/" + name; };

  if (TsvReader r(path("isa_variants.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 3) r.fail("expected 3 fields");
      lex.isa_variants[lower(f[0])] = parse_isa_kind(r, f[2]);
    }
  }
  if (TsvReader r(path("quantifiers.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 3) r.fail("expected 3 fields");
      lex.quantifier_variants[lower(f[0])] = parse_quant_kind(r, f[2]);
    }
  }
  if (TsvReader r(path("clausals.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 2) r.fail("expected 2 fields");
      lex.clausal_variants[lower(f[0])] = parse_clause_kind(r, f[1]);
    }
  }
  if (TsvReader r(path("synonyms.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      std::set<std::string> group;
      for (const auto& w : f)
        if (!w.empty()) group.insert(lower(w));
      if (group.size() < 2) r.fail("synonym set needs at least 2 members");
      lex.synonym_sets.push_back(std::move(group));
    }
  }
  if (TsvReader r(path("named_entities.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 2) r.fail("expected 2 fields");
      lex.named_entities[lower(f[0])] = f[1];
    }
  }
  if (TsvReader r(path("hypernyms.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 2) r.fail("expected 2 fields");
      lex.hypernym_parent[lower(f[0])] = lower(f[1]);
    }
  }
  if (TsvReader r(path("dim_adjectives.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 3) r.fail("expected 3 fields");
      if (f[2] != "+" && f[2] != "-") r.fail("polarity must be + or -");
      lex.dimensional_adjectives[lower(f[0])].push_back(
          DimensionSense{f[1], f[2] == "+"});
    }
  }
  if (TsvReader r(path("units.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 4) r.fail("expected 4 fields");
      UnitEntry u{f[0], f[1], f[2], {}};
      for (const auto& s : split(f[3], '|')) u.surfaces.push_back(lower(s));
      lex.units.push_back(std::move(u));
    }
  }
  if (TsvReader r(path("words.tsv")); r.ok) {
    std::vector<std::string> f;
    while (r.next(&f)) {
      if (f.size() != 2 && f.size() != 3) r.fail("expected 2 or 3 fields");
      lex.word_tags[lower(f[0])] = f[1];
      if (f.size() == 3 && f[2] == "future") lex.future_adverbs.insert(lower(f[0]));
    }
  }
  // Optional WordNet 2.1 noun overlay; bundled TSV entries win on conflict.
  if (fs::exists(path("data.noun"))) {
    auto bundled = lex.hypernym_parent;
    load_wordnet_data(path("data.noun"), &lex.hypernym_parent);
    for (const auto& [k, v] : bundled) lex.hypernym_parent[k] = v;
  }
  check_acyclic(lex.hypernym_parent, resource_dir + "/hypernyms.tsv");
  return lex;
}

}  // namespace isadl
