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

#include "isadl/preprocess.hpp"

#include <algorithm>
#include <set>

#include "isadl/text.hpp"

namespace isadl {

namespace {

using Tokens = std::vector<Token>;

bool is_comma(const Token& t) { return t.tag == ","; }
bool is_copula(const Token& t) { return t.tag == "VBX"; }

// Clause markers of the null-Cl family only open a clause right after a
// comma; relative pronouns open one anywhere except sentence-initially,
// where "that" is a plain determiner.
bool opens_clause(const Lexicon& lex, const Tokens& toks, size_t i) {
  auto k = lex.clause(toks[i].lexeme);
  if (!k || *k != ClauseKind::ThatIs) return false;
  static const std::set<std::string> kRelative = {"that", "who", "whom",
                                                  "which", "whose"};
  if (kRelative.count(lower(toks[i].lexeme))) return i > 0;
  return i > 0 && is_comma(toks[i - 1]);
}

struct IsaSpan {
  size_t pos = 0;
  int len = 0;
  IsaKind kind = IsaKind::Hyponymy;
  Tense tense = Tense::Present;
  bool clause_internal = false;
};

std::vector<std::string> lexemes_of(const Tokens& toks) {
  std::vector<std::string> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(t.lexeme);
  return out;
}

// All IS-A spans with clause-internal marking. A clausal marker claims the
// next IS-A; the clause body then runs until a comma or the next IS-A,
// which is the main one.
std::vector<IsaSpan> scan_isa(const Tokens& toks, const Lexicon& lex) {
  std::vector<IsaSpan> spans;
  auto lx = lexemes_of(toks);
  bool pending = false;
  size_t i = 0;
  while (i < toks.size()) {
    if (is_comma(toks[i])) {
      pending = false;
      ++i;
      continue;
    }
    if (opens_clause(lex, toks, i)) {
      pending = true;
      ++i;
      continue;
    }
    if (auto m = classify_isa(lex, lx, i)) {
      spans.push_back({i, m->consumed, m->kind, m->tense, pending});
      pending = false;
      i += m->consumed;
      continue;
    }
    ++i;
  }
  return spans;
}

std::optional<IsaSpan> main_isa(const Tokens& toks, const Lexicon& lex) {
  for (const auto& s : scan_isa(toks, lex))
    if (!s.clause_internal) return s;
  return std::nullopt;
}

Tokens slice(const Tokens& toks, size_t b, size_t e) {
  Tokens out(toks.begin() + b, toks.begin() + std::min(e, toks.size()));
  return out;
}

Tokens concat(std::initializer_list<Tokens> parts) {
  Tokens out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
  return out;
}

struct NpList {
  bool disjunctive = false;
  bool has_list = false;
  std::vector<Tokens> members;
};

// Splits a phrase at top-level commas and and/or. "either" forces the
// disjunctive reading and is dropped from the first member.
NpList parse_np_list(const Tokens& span) {
  NpList out;
  Tokens cur;
  for (size_t i = 0; i < span.size(); ++i) {
    const Token& t = span[i];
    std::string w = lower(t.lexeme);
    if (t.tag == "DT" && (w == "either" || w == "neither") && cur.empty()) {
      out.disjunctive = true;
      continue;
    }
    if (is_comma(t)) {
      if (!cur.empty()) out.members.push_back(cur);
      cur.clear();
      continue;
    }
    if (t.tag == "CC" && (w == "and" || w == "or" || w == "nor")) {
      if (w != "and") out.disjunctive = true;
      if (!cur.empty()) out.members.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(t);
  }
  if (!cur.empty()) out.members.push_back(cur);
  out.has_list = out.members.size() > 1;
  return out;
}

// "student body and greek house members": the plural head of the last
// member distributes onto earlier members that end in a singular noun.
void distribute_shared_head(NpList* list) {
  if (list->members.size() < 2) return;
  const Tokens& last = list->members.back();
  if (last.empty() || last.back().tag != "NNS") return;
  Token head = last.back();
  for (size_t i = 0; i + 1 < list->members.size(); ++i) {
    Tokens& m = list->members[i];
    if (!m.empty() && m.back().tag == "NN") m.push_back(head);
  }
}

const std::set<std::string> kEquivalents = {"same", "identical", "equivalent"};
const std::set<std::string> kSimilars = {"similar", "alike"};

Token mk(const std::string& lexeme, const std::string& tag) {
  return Token{lexeme, tag, 0};
}

// True when `phrase` starting at i is a such-as marker; returns consumed.
int suchas_marker(const Lexicon& lex, const Tokens& toks, size_t i) {
  for (int n = 2; n >= 1; --n) {
    if (i + n > toks.size()) continue;
    std::string p = lower(toks[i].lexeme);
    for (int k = 1; k < n; ++k) p += " " + lower(toks[i + k].lexeme);
    auto q = lex.quantifier(p);
    if (q && *q == QuantifierKind::SuchAs) return n;
  }
  return 0;
}

}  // namespace

std::vector<SimpleSentence> extract_triples(const Tokens& tokens,
                                            const Lexicon& lex,
                                            int source_index) {
  std::vector<SimpleSentence> out;
  auto add = [&](Tokens t) {
    SimpleSentence s;
    s.tokens = std::move(t);
    s.source_index = source_index;
    s.expansion_id = static_cast<int>(out.size());
    out.push_back(std::move(s));
  };

  Tokens toks = tokens;
  if (toks.empty())
    throw SentenceRejected("NotIsaSentence", source_index, "empty sentence");

  // "whereas" compounds split into independent sentences.
  for (size_t i = 0; i < toks.size(); ++i) {
    if (lower(toks[i].lexeme) == "whereas") {
      auto left = extract_triples(slice(toks, 0, i), lex, source_index);
      auto right =
          extract_triples(slice(toks, i + 1, toks.size()), lex, source_index);
      for (auto& s : left) add(std::move(s.tokens));
      for (auto& s : right) add(std::move(s.tokens));
      return out;
    }
  }

  // "although X yet Y": both facts hold; a pronoun second subject refers
  // back to the first.
  if (lower(toks[0].lexeme) == "although" || lower(toks[0].lexeme) == "though") {
    size_t cut = 0;
    for (size_t i = 1; i < toks.size(); ++i) {
      std::string w = lower(toks[i].lexeme);
      if (w == "yet" || w == "but") {
        cut = i;
        break;
      }
    }
    if (cut) {
      Tokens left = slice(toks, 1, cut);
      Tokens right = slice(toks, cut + 1, toks.size());
      if (!right.empty() && right[0].tag == "PRP") {
        auto lm = main_isa(left, lex);
        if (lm) {
          Tokens subj = slice(left, 0, lm->pos);
          right = concat({subj, slice(right, 1, right.size())});
        }
      }
      for (auto& s : extract_triples(left, lex, source_index))
        add(std::move(s.tokens));
      for (auto& s : extract_triples(right, lex, source_index))
        add(std::move(s.tokens));
      return out;
    }
  }

  // Spatial clauses never modify a pure IS-A structure.
  for (const auto& t : toks)
    if (lower(t.lexeme) == "where")
      throw SentenceRejected("NotIsaSentence", source_index,
                             "spatial clause is not IS-A");

  // Temporal clause: "John was a student when he was young" folds the
  // clause object in as a modifier; a distinct second subject is rejected.
  for (size_t i = 0; i < toks.size(); ++i) {
    if (lower(toks[i].lexeme) != "when") continue;
    if (i + 2 >= toks.size() || toks[i + 1].tag != "PRP")
      throw SentenceRejected("NotIsaSentence", source_index,
                             "temporal clause with distinct subject");
    auto lx = lexemes_of(toks);
    auto cm = classify_isa(lex, lx, i + 2);
    if (!cm)
      throw SentenceRejected("NotIsaSentence", source_index,
                             "malformed temporal clause");
    Tokens body = slice(toks, i + 2 + cm->consumed, toks.size());
    Tokens head = slice(toks, 0, i);
    auto hm = main_isa(head, lex);
    if (!hm)
      throw SentenceRejected("NotIsaSentence", source_index, "no IS-A span");
    // Insert the clause predicate as object modifiers, after any leading
    // determiner of the object phrase.
    size_t obj = hm->pos + hm->len;
    size_t at = obj;
    while (at < head.size() && head[at].tag == "DT") ++at;
    Tokens rebuilt = concat({slice(head, 0, at), body,
                             slice(head, at, head.size())});
    toks = rebuilt;
    break;
  }

  auto spans = scan_isa(toks, lex);
  std::optional<IsaSpan> main;
  for (const auto& s : spans)
    if (!s.clause_internal) {
      main = s;
      break;
    }
  if (!main)
    throw SentenceRejected("NotIsaSentence", source_index, "no IS-A span");

  Tokens subj_side = slice(toks, 0, main->pos);
  Tokens isa_span = slice(toks, main->pos, main->pos + main->len);
  Tokens obj_side = slice(toks, main->pos + main->len, toks.size());

  // "X and Y are same/similar" becomes "X same as Y" / "X like Y".
  {
    NpList sl = parse_np_list(subj_side);
    if (sl.has_list && !sl.disjunctive && sl.members.size() == 2 &&
        !obj_side.empty()) {
      const Token& oh = obj_side.back();
      std::string ohw = lower(oh.lexeme);
      if (kEquivalents.count(ohw) || kSimilars.count(ohw)) {
        Tokens rel;
        if (kEquivalents.count(ohw))
          rel = {mk("is", "VBX"), mk("same", "JJ"), mk("as", "IN")};
        else
          rel = {mk("is", "VBX"), mk("like", "IN")};
        add(concat({sl.members[0], rel, sl.members[1]}));
        return out;
      }
    }
  }

  // Subject-side clause: ", who are good students,". Only extracted when it
  // distributes over a subject list; a lone subject keeps its clause for
  // the complex templates ("Mary, that is a student, is good").
  Tokens clause_body;
  Token clause_copula = mk("is", "VBX");
  bool clause_plural = false;
  bool have_clause = false;
  Tokens subj_wo = subj_side;
  {
    for (size_t i = 0; i < subj_side.size(); ++i) {
      if (!opens_clause(lex, subj_side, i)) continue;
      size_t body_b = i + 1;
      Token cop = mk("is", "VBX");
      if (body_b < subj_side.size() && is_copula(subj_side[body_b])) {
        cop = subj_side[body_b];
        ++body_b;
      }
      size_t body_e = body_b;
      while (body_e < subj_side.size() && !is_comma(subj_side[body_e]))
        ++body_e;
      // An open clause running into the main IS-A is the Case-3 shape.
      if (body_e == subj_side.size()) break;
      clause_copula = cop;
      std::string c = lower(cop.lexeme);
      clause_plural = (c == "are" || c == "were");
      clause_body = slice(subj_side, body_b, body_e);
      Tokens before = slice(subj_side, 0, i);
      while (!before.empty() && is_comma(before.back())) before.pop_back();
      Tokens after = slice(subj_side, body_e + 1, subj_side.size());
      subj_wo = concat({before, after});
      have_clause = true;
      break;
    }
  }

  // Exemplification is not a list split: such-as segments stay attached.
  bool subj_has_suchas = false;
  for (size_t i = 0; i < subj_wo.size(); ++i)
    if (suchas_marker(lex, subj_wo, i) || lower(subj_wo[i].lexeme) == "such")
      subj_has_suchas = true;

  NpList subjects = subj_has_suchas ? NpList{} : parse_np_list(subj_wo);
  if (subj_has_suchas) subjects.members.push_back(subj_wo);

  if (have_clause && !subjects.has_list && !subjects.disjunctive) {
    // Lone subject: clause survives into characterization.
    have_clause = false;
    subj_wo = subj_side;
    subjects = NpList{};
    subjects.members.push_back(subj_wo);
  }
  subj_side = subj_wo;

  NpList objects;
  bool obj_keep_whole = main->kind == IsaKind::Includes;
  // Adjectival secondary-subject clause: "John is a student who is
  // hard-working" splits into the merged-modifier sentence plus the
  // clause restatement.
  {
    for (size_t i = 0; i < obj_side.size(); ++i) {
      if (!opens_clause(lex, obj_side, i)) continue;
      size_t body_b = i + 1;
      if (body_b < obj_side.size() && is_copula(obj_side[body_b])) ++body_b;
      Tokens rest = slice(obj_side, body_b, obj_side.size());
      while (!rest.empty() && is_comma(rest.back())) rest.pop_back();
      if (rest.empty()) break;
      const Token& rh = rest.back();
      bool adjectival = (rh.tag == "JJ" || rh.tag == "RB") &&
                        rest.size() <= 2;  // bare predicate, no own object
      if (!adjectival || subjects.has_list) break;
      Tokens o1 = slice(obj_side, 0, i);
      while (!o1.empty() && is_comma(o1.back())) o1.pop_back();
      // merged: [subject] [isa] [q?] [rest-mods] [o1 head...]
      size_t at = 0;
      while (at < o1.size() && o1[at].tag == "DT") ++at;
      Tokens merged = concat({subj_side, isa_span, slice(o1, 0, at), rest,
                              slice(o1, at, o1.size())});
      Tokens restate = concat({rest, slice(o1, at, o1.size()),
                               Tokens{mk("is", "VBX")}, rest});
      add(std::move(merged));
      add(std::move(restate));
      return out;
    }
  }
  if (obj_keep_whole) {
    objects.members.push_back(obj_side);
  } else {
    // A clause in the object side keeps the sentence complex; no split.
    bool obj_has_clause = false;
    for (size_t i = 0; i < obj_side.size(); ++i)
      if (opens_clause(lex, obj_side, i)) obj_has_clause = true;
    if (obj_has_clause || subj_has_suchas) {
      objects.members.push_back(obj_side);
    } else {
      objects = parse_np_list(obj_side);
      if (objects.disjunctive) {
        objects = NpList{};
        objects.members.push_back(obj_side);
      } else {
        distribute_shared_head(&objects);
      }
    }
  }

  // Disjunctive subjects stay one unit unless a plural clause distributes.
  std::vector<Tokens> clause_subjects;
  std::vector<Tokens> main_subjects;
  if (subjects.disjunctive) {
    if (have_clause && clause_plural)
      for (const auto& m : subjects.members) clause_subjects.push_back(m);
    else if (have_clause)
      clause_subjects.push_back(subj_side);
    main_subjects.push_back(subj_side);
  } else if (subjects.has_list) {
    for (const auto& m : subjects.members) {
      if (have_clause) clause_subjects.push_back(m);
      main_subjects.push_back(m);
    }
  } else {
    if (have_clause) clause_subjects.push_back(subj_side);
    main_subjects.push_back(subj_side);
  }

  for (const auto& cs : clause_subjects)
    add(concat({cs, Tokens{clause_copula}, clause_body}));
  for (const auto& ms : main_subjects)
    for (const auto& om : objects.members)
      add(concat({ms, isa_span, om}));
  return out;
}

SimpleSentence singularize(const SimpleSentence& in, const Lexicon& lex) {
  SimpleSentence s = in;
  auto main = main_isa(s.tokens, lex);
  size_t split = main ? main->pos : s.tokens.size();

  auto head_plural = [&](size_t b, size_t e) {
    for (size_t i = e; i-- > b;) {
      if (s.tokens[i].tag == "NNS") return true;
      if (s.tokens[i].tag == "NN" || s.tokens[i].tag == "NNP") return false;
    }
    return false;
  };
  s.subject_was_plural = head_plural(0, split);
  s.object_was_plural =
      main ? head_plural(main->pos + main->len, s.tokens.size()) : false;

  for (auto& t : s.tokens) {
    if (t.tag == "NNS") {
      t.lexeme = singular_noun(t.lexeme);
      t.tag = "NN";
    } else if (t.tag == "VBX") {
      std::string w = lower(t.lexeme);
      if (w == "are" || w == "am") t.lexeme = "is";
      else if (w == "were") t.lexeme = "was";
    }
  }
  return s;
}

void note_canonical_object(const SimpleSentence& s, const Lexicon& lex,
                           CanonicalObjects* canon) {
  auto main = main_isa(s.tokens, lex);
  if (!main) return;
  // Object head: last NN/JJ of the object side.
  for (size_t i = s.tokens.size(); i-- > main->pos + main->len;) {
    const Token& t = s.tokens[i];
    if (t.tag == "NN" || t.tag == "JJ") {
      std::string w = lower(t.lexeme);
      auto set = lex.synonyms_of(w);
      if (!set) return;
      for (const auto& member : *set) {
        if (canon->count(member)) return;  // canonical already chosen
      }
      for (const auto& member : *set) (*canon)[member] = w;
      return;
    }
  }
}

namespace {

// Longest quantifier-phrase match at position i; skips spelled numbers
// that head a numeric object modifier ("five foot tall").
struct QMatch {
  QuantifierKind kind;
  int consumed;
};

std::optional<QMatch> quant_at(const Lexicon& lex, const Tokens& toks,
                               size_t i) {
  std::optional<QMatch> best;
  std::string phrase;
  for (size_t n = 0; i + n < toks.size() && n < 4; ++n) {
    if (n) phrase += ' ';
    phrase += lower(toks[i + n].lexeme);
    if (auto q = lex.quantifier(phrase))
      best = QMatch{*q, static_cast<int>(n + 1)};
  }
  if (best && words_to_number(toks[i].lexeme) >= 0 && best->consumed == 1 &&
      i + 1 < toks.size()) {
    // A spelled number heading a numeric modifier ("five foot tall") or a
    // compound modifier ("four wheeled vehicle") is not a quantifier.
    const Token& nxt = toks[i + 1];
    if (lex.unit_by_surface(nxt.lexeme) || nxt.tag == "JJ")
      return std::nullopt;
  }
  return best;
}

const char* canonical_q(QuantifierKind q) {
  switch (q) {
    case QuantifierKind::A: return "a";
    case QuantifierKind::The: return "the";
    case QuantifierKind::Some: return "some";
    case QuantifierKind::All: return "all";
    case QuantifierKind::No: return "no";
    case QuantifierKind::Only: return "only";
    case QuantifierKind::SuchAs: return "such as";
  }
  return "?";
}

std::vector<Token> canonical_isa_tokens(IsaKind k, Tense t) {
  auto w = [](const char* s) { return Token{s, "VBX", 0}; };
  switch (k) {
    case IsaKind::Hyponymy:
    case IsaKind::WasPast:
    case IsaKind::WillBeFuture:
      if (t == Tense::Past) return {w("was")};
      if (t == Tense::Future) return {w("will"), w("be")};
      return {w("is")};
    case IsaKind::Hypernymy: return {w("is"), Token{"class", "NN", 0}, Token{"of", "IN", 0}};
    case IsaKind::SameAs: return {Token{"same", "JJ", 0}, Token{"as", "IN", 0}};
    case IsaKind::Like: return {Token{"like", "IN", 0}};
    case IsaKind::SuchAs: return {Token{"such as", "IN", 0}};
    case IsaKind::Includes: return {Token{"includes", "VBX", 0}};
    case IsaKind::MayBe: return {w("may"), w("be")};
    case IsaKind::CanBecome: return {w("can"), Token{"become", "VB", 0}};
    case IsaKind::CanBe: return {w("can"), w("be")};
    case IsaKind::IsNow: return {w("is"), Token{"now", "RB", 0}};
    case IsaKind::IsStill: return {w("is"), Token{"still", "RB", 0}};
    case IsaKind::IsSometimes: return {w("is"), Token{"sometimes", "RB", 0}};
  }
  return {w("is")};
}

}  // namespace

SimpleSentence normalize(const SimpleSentence& in, const Lexicon& lex,
                         const CanonicalObjects& canon) {
  SimpleSentence s = in;
  auto main = main_isa(s.tokens, lex);
  if (!main)
    throw SentenceRejected("NotIsaSentence", s.source_index, "no IS-A span");

  Tokens subj = slice(s.tokens, 0, main->pos);
  Tokens obj = slice(s.tokens, main->pos + main->len, s.tokens.size());

  // "Such boys as John and Joe" -> "boys , such as John and Joe ,".
  if (!subj.empty() && lower(subj[0].lexeme) == "such") {
    for (size_t i = 1; i < subj.size(); ++i) {
      if (lower(subj[i].lexeme) == "as") {
        Tokens head = slice(subj, 1, i);
        Tokens list = slice(subj, i + 1, subj.size());
        subj = concat({head, Tokens{mk(",", ",")},
                       Tokens{mk("such as", "IN")}, list,
                       Tokens{mk(",", ",")}});
        break;
      }
    }
  }

  auto rewrite_span = [&](Tokens& span, bool is_subject) {
    Tokens out;
    size_t i = 0;
    bool at_phrase_start = true;
    while (i < span.size()) {
      const Token& t = span[i];
      if (is_comma(t)) {
        out.push_back(t);
        ++i;
        at_phrase_start = true;
        continue;
      }
      // Such-as markers normalize to a single "such as" token.
      if (int n = suchas_marker(lex, span, i)) {
        out.push_back(mk("such as", "IN"));
        i += n;
        at_phrase_start = true;
        continue;
      }
      // Clausal markers normalize to "that is".
      if (opens_clause(lex, span, i)) {
        out.push_back(mk("that", "DT"));
        size_t nxt = i + 1;
        if (nxt < span.size() && is_copula(span[nxt])) {
          out.push_back(mk("is", "VBX"));
          i = nxt + 1;
        } else {
          out.push_back(mk("is", "VBX"));
          i = i + 1;
        }
        at_phrase_start = true;
        continue;
      }
      if (at_phrase_start) {
        if (auto q = quant_at(lex, span, i)) {
          QuantifierKind k = q->kind;
          // "the" over an originally plural subject reads as "some"; the
          // singular reading names an instance.
          if (is_subject && k == QuantifierKind::The && s.subject_was_plural)
            k = QuantifierKind::Some;
          std::string c = canonical_q(k);
          out.push_back(mk(c, k == QuantifierKind::SuchAs ? "IN" : "DT"));
          i += q->consumed;
          // only one leading quantifier phrase is folded; "only a" keeps
          // both canonical tokens
          if (k != QuantifierKind::Only && k != QuantifierKind::The)
            at_phrase_start = false;
          continue;
        }
        at_phrase_start = false;
      }
      // Numeric modifiers: "5 ft." -> "five foot".
      if (t.tag == "CD" || words_to_number(t.lexeme) >= 0) {
        long v = is_integer_token(t.lexeme) ? std::stol(t.lexeme)
                                            : words_to_number(t.lexeme);
        if (v >= 0) {
          out.push_back(mk(number_to_words(v), "CD"));
          ++i;
          if (i < span.size()) {
            if (auto u = lex.unit_by_surface(span[i].lexeme)) {
              out.push_back(mk(u->surfaces.front(), "NN"));
              ++i;
            }
          }
          continue;
        }
      }
      out.push_back(t);
      ++i;
    }
    span = out;
  };

  rewrite_span(subj, true);
  rewrite_span(obj, false);

  // Object synonym canonicalization against earlier corpus objects.
  if (!canon.empty()) {
    for (size_t i = obj.size(); i-- > 0;) {
      Token& t = obj[i];
      if (t.tag == "NN" || t.tag == "JJ") {
        auto it = canon.find(lower(t.lexeme));
        if (it != canon.end()) t.lexeme = it->second;
        break;
      }
    }
  }

  IsaKind kind = main->kind;
  Tense tense = main->tense;
  Tokens isa_norm = canonical_isa_tokens(kind, tense);

  SimpleSentence outs = s;
  outs.tokens = concat({subj, isa_norm, obj});
  outs.isa_kind = kind;
  outs.tense = tense;
  outs.isa_pos = static_cast<int>(subj.size());
  outs.isa_len = static_cast<int>(isa_norm.size());
  return outs;
}

}  // namespace isadl
