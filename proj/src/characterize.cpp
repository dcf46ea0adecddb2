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

#include "isadl/characterize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "isadl/text.hpp"

namespace isadl {

namespace {

using Tokens = std::vector<Token>;

bool is_comma(const Token& t) { return t.tag == ","; }

const std::set<std::string> kSubjectTags = {"NN", "NNP", "JJ", "RB", "VBG"};
const std::set<std::string> kModTags = {"NN", "JJ", "JJR", "JJS", "RB",
                                        "RBR", "RBS", "VBG", "CD"};

std::optional<QuantifierKind> canonical_quantifier(const std::string& lexeme) {
  std::string w = lower(lexeme);
  if (w == "a") return QuantifierKind::A;
  if (w == "the") return QuantifierKind::The;
  if (w == "some") return QuantifierKind::Some;
  if (w == "all") return QuantifierKind::All;
  if (w == "no") return QuantifierKind::No;
  if (w == "only") return QuantifierKind::Only;
  if (w == "such as") return QuantifierKind::SuchAs;
  return std::nullopt;
}

struct ListSplit {
  bool disjunctive = false;
  std::vector<Tokens> members;
};

ListSplit split_list(const Tokens& span) {
  ListSplit out;
  Tokens cur;
  for (const auto& t : span) {
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
  return out;
}

// Parses [q] mods* head from a phrase span, folding possessives and
// appositives. `instance` receives an appositive NNP after an NN head.
NounPhrase parse_np(const Tokens& span, int source_index,
                    std::optional<std::string>* instance = nullptr,
                    std::optional<std::string>* appositive_class = nullptr) {
  NounPhrase np;
  size_t i = 0;
  if (i < span.size()) {
    if (auto q = canonical_quantifier(span[i].lexeme);
        q && span[i].tag != "IN" && *q != QuantifierKind::Only) {
      np.q = q;
      ++i;
    }
  }
  std::vector<Word> words;
  while (i < span.size()) {
    const Token& t = span[i];
    if (is_comma(t)) {
      ++i;
      continue;
    }
    if (t.tag == "POS") {  // fold "Mary 's" into one possessive modifier
      if (!words.empty()) {
        words.back().lexeme += "'s";
        words.back().tag = "JJ";
      }
      ++i;
      continue;
    }
    if (t.tag == "NNP" || kModTags.count(t.tag)) {
      words.push_back({t.lexeme, t.tag});
      ++i;
      continue;
    }
    throw SentenceRejected("NoTemplateMatch", source_index,
                           "unexpected token '" + t.lexeme + "'");
  }
  if (words.empty())
    throw SentenceRejected("NoTemplateMatch", source_index, "empty phrase");

  // Appositive pairs: [NN NNP] names an instance of the NN on the subject
  // side ("the name John") and a class on the object side ("the family
  // Felidae"); which one applies is the caller's choice.
  if (words.size() >= 2 && words.back().tag == "NNP" &&
      words[words.size() - 2].tag == "NN") {
    if (instance) {
      *instance = words.back().lexeme;
      words.pop_back();
    } else if (appositive_class) {
      *appositive_class = capitalize(words[words.size() - 2].lexeme);
      Word head = words.back();
      words.pop_back();
      words.pop_back();
      words.push_back(head);
    }
  }
  np.head = words.back();
  words.pop_back();
  np.mods = std::move(words);
  return np;
}

// A compound modifier "four wheeled" merges a number into the following
// modifier word; numeric-dimension shapes ("five foot tall") are kept
// separate and summarized later.
void merge_compound_numbers(std::vector<Word>* mods, const Lexicon& lex) {
  for (size_t i = 0; i + 1 < mods->size(); ++i) {
    Word& cur = (*mods)[i];
    if (cur.tag != "CD" && words_to_number(cur.lexeme) < 0) continue;
    const Word& nxt = (*mods)[i + 1];
    if (lex.unit_by_surface(nxt.lexeme)) continue;
    if (nxt.tag == "JJ" && !lex.dimension_of(nxt.lexeme)) {
      cur.lexeme += " " + nxt.lexeme;
      cur.tag = "JJ";
      mods->erase(mods->begin() + i + 1);
    }
  }
}

size_t find_lexeme(const Tokens& span, const std::string& w) {
  for (size_t i = 0; i < span.size(); ++i)
    if (lower(span[i].lexeme) == w) return i;
  return span.size();
}

// "that is" at or after `from`; returns position of "that" or npos.
size_t find_that_is(const Tokens& span, size_t from = 0) {
  for (size_t i = from; i + 1 < span.size(); ++i)
    if (lower(span[i].lexeme) == "that" && span[i + 1].tag == "VBX") return i;
  return span.size();
}

Tokens strip_commas_end(Tokens t) {
  while (!t.empty() && is_comma(t.back())) t.pop_back();
  return t;
}

}  // namespace

IsaKind validate_pos_dependency(const std::string& s_tag,
                                const std::string& o_tag, IsaKind isa,
                                int source_index) {
  auto bad = [&](const char* why) {
    throw SentenceRejected("InvalidPosDependency", source_index,
                           std::string(why) + " (" + s_tag + " IS-A " + o_tag +
                               ")");
  };
  std::string s = s_tag == "NNS" ? "NN" : s_tag;
  std::string o = o_tag == "NNS" ? "NN" : o_tag;
  if (s == "NNP" && o == "RB") bad("a named entity cannot be a member of an adverb");
  if (s == "RB" && o == "NNP") bad("an adverb cannot be a class of a named entity");
  if (s == "NNP" && o == "VBG") bad("a named entity cannot be a member of an activity");
  if (s == "VBG" && o == "NNP") bad("an activity cannot be a class of a named entity");
  if (s == "JJ" && o == "RB") bad("an adjective cannot subsume an adverb");
  if (s == "JJ" && o == "VBG") bad("an adjective cannot subsume an activity");
  if (s == "NNP" && o == "NNP" && isa == IsaKind::Hyponymy)
    return IsaKind::SameAs;
  return isa;
}

CharSentence characterize(const SimpleSentence& s, const Lexicon& lex) {
  if (!s.isa_kind || s.isa_pos < 0)
    throw SentenceRejected("NoTemplateMatch", s.source_index,
                           "sentence not normalized");
  CharSentence cs;
  cs.isa = *s.isa_kind;
  cs.tense = s.tense;
  cs.subject_was_plural = s.subject_was_plural;
  cs.object_was_plural = s.object_was_plural;
  cs.source_index = s.source_index;
  cs.expansion_id = s.expansion_id;

  Tokens subj(s.tokens.begin(), s.tokens.begin() + s.isa_pos);
  Tokens obj(s.tokens.begin() + s.isa_pos + s.isa_len, s.tokens.end());
  subj = strip_commas_end(subj);
  obj = strip_commas_end(obj);

  // ---- subject side ----
  size_t si = 0;
  if (si < subj.size() && lower(subj[si].lexeme) == "only") {
    cs.only_position = OnlyPosition::Subject;
    ++si;
  }
  if (si < subj.size() && subj[si].tag == "RB" &&
      lex.future_adverbs.count(lower(subj[si].lexeme))) {
    cs.future_adverb = lower(subj[si].lexeme);
    ++si;
  }
  subj = Tokens(subj.begin() + si, subj.end());

  // Exemplification: [S-part] , such as L ,
  if (size_t p = find_lexeme(subj, "such as"); p < subj.size()) {
    Tokens head_part = strip_commas_end(Tokens(subj.begin(), subj.begin() + p));
    Tokens list_part(subj.begin() + p + 1, subj.end());
    list_part = strip_commas_end(list_part);
    ListSplit ls = split_list(list_part);
    PhraseList pl;
    pl.connective = ls.disjunctive ? Connective::Disj : Connective::Conj;
    for (const auto& m : ls.members)
      pl.members.push_back(parse_np(m, s.source_index));
    if (pl.members.empty())
      throw SentenceRejected("NoTemplateMatch", s.source_index,
                             "empty exemplar list");
    cs.such_as = pl;
    subj = head_part;
  }

  // Case-3 clause on the subject: [S] that is [pred]
  Tokens clause1_pred;
  if (size_t p = find_that_is(subj); p < subj.size()) {
    clause1_pred = strip_commas_end(Tokens(subj.begin() + p + 2, subj.end()));
    cs.clause1 = ClauseKind::ThatIs;
    subj = strip_commas_end(Tokens(subj.begin(), subj.begin() + p));
  }

  ListSplit slist = split_list(subj);
  if (slist.members.size() > 1) {
    PhraseList pl;
    pl.connective = slist.disjunctive ? Connective::Disj : Connective::Conj;
    for (const auto& m : slist.members)
      pl.members.push_back(parse_np(m, s.source_index));
    cs.subject_list = pl;
    cs.subject = pl.members.front().head;
    cs.q1 = pl.members.front().q;
  } else {
    std::optional<std::string> instance;
    NounPhrase np = parse_np(subj, s.source_index, &instance);
    cs.q1 = np.q;
    cs.s_mods = np.mods;
    cs.subject = np.head;
    cs.subject_instance = instance;
    merge_compound_numbers(&cs.s_mods, lex);
  }

  // ---- object side ----
  if (!obj.empty() && lower(obj.back().lexeme) == "only") {
    cs.only_position = OnlyPosition::Object;
    obj.pop_back();
  }
  size_t oi = 0;
  if (oi < obj.size() && lower(obj[oi].lexeme) == "only" &&
      !cs.only_position) {
    cs.only_position = OnlyPosition::Object;
    ++oi;
  }
  obj = Tokens(obj.begin() + oi, obj.end());
  // "the only student"
  if (obj.size() >= 2 && lower(obj[0].lexeme) == "the" &&
      lower(obj[1].lexeme) == "only") {
    cs.only_position = OnlyPosition::TheOnly;
    obj.erase(obj.begin() + 1);
  }

  // Comparative reference: "... than Mary"
  if (size_t p = find_lexeme(obj, "than"); p < obj.size()) {
    Tokens ref(obj.begin() + p + 1, obj.end());
    if (ref.empty())
      throw SentenceRejected("NoTemplateMatch", s.source_index,
                             "comparative without reference");
    NounPhrase rnp = parse_np(ref, s.source_index);
    cs.comparative_ref = rnp.head;
    obj = Tokens(obj.begin(), obj.begin() + p);
  }

  // Secondary clause, explicit ("that is") or the bare Case-1 copula.
  std::optional<Tokens> clause2_pred;
  if (size_t p = find_that_is(obj); p < obj.size()) {
    clause2_pred = strip_commas_end(Tokens(obj.begin() + p + 2, obj.end()));
    // Case 4 would need a third clause; it cannot arise because triple
    // extraction never emits two markers, but a second marker in the
    // remainder is rejected for safety.
    if (find_that_is(*clause2_pred) < clause2_pred->size())
      throw SentenceRejected("NoTemplateMatch", s.source_index,
                             "doubly clausal object");
    cs.clause2 = ClauseKind::ThatIs;
    obj = strip_commas_end(Tokens(obj.begin(), obj.begin() + p));
  } else {
    for (size_t i = 0; i < obj.size(); ++i) {
      if (obj[i].tag == "VBX") {
        clause2_pred = Tokens(obj.begin() + i + 1, obj.end());
        cs.clause2 = ClauseKind::ThatIs;  // ambiguous Case 1 reads as Case 2
        obj = Tokens(obj.begin(), obj.begin() + i);
        break;
      }
    }
  }

  // Object list (kept whole for holonymy unions and compound objects).
  ListSplit olist = split_list(obj);
  if (olist.members.size() > 1) {
    // Shared modifiers distribute over a disjunctive modifier pair:
    // "either herbivorous or carnivorous animal".
    if (olist.disjunctive && olist.members.back().size() >= 2 &&
        olist.members.front().size() >= 1) {
      Tokens& last = olist.members.back();
      if (last.back().tag == "NN" || last.back().tag == "NNS") {
        bool headless_front = true;
        for (auto& m : olist.members)
          if (&m != &last && (m.back().tag == "NN" || m.back().tag == "NNS"))
            headless_front = false;
        if (headless_front)
          for (auto& m : olist.members)
            if (&m != &last) m.push_back(last.back());
      }
    }
    PhraseList pl;
    pl.connective = olist.disjunctive ? Connective::Disj : Connective::Conj;
    for (const auto& m : olist.members)
      pl.members.push_back(parse_np(m, s.source_index));
    cs.object_list = pl;
    cs.q2 = pl.members.front().q;
    cs.object1 = pl.members.front().head;
    cs.o_mods = pl.members.front().mods;
  } else {
    std::optional<std::string> appos;
    NounPhrase np = parse_np(obj, s.source_index, nullptr, &appos);
    cs.q2 = np.q;
    cs.o_mods = np.mods;
    cs.object1 = np.head;
    cs.object_appositive_class = appos;
    merge_compound_numbers(&cs.o_mods, lex);
  }
  if (cs.q2 == QuantifierKind::The && cs.only_position &&
      *cs.only_position == OnlyPosition::Object)
    cs.only_position = OnlyPosition::TheOnly;

  if (clause2_pred) {
    cs.object2 = parse_np(*clause2_pred, s.source_index);
  }

  // Case 3 stores the clause predicate as the first object and shifts the
  // main object to the second slot.
  if (cs.clause1) {
    if (cs.object2)
      throw SentenceRejected("NoTemplateMatch", s.source_index,
                             "clauses on both sides");
    NounPhrase main_obj{cs.q2, cs.o_mods, cs.object1};
    NounPhrase pred = parse_np(clause1_pred, s.source_index);
    cs.q2 = pred.q;
    cs.o_mods = pred.mods;
    cs.object1 = pred.head;
    cs.object2 = main_obj;
  }

  // Numeric / superlative summaries from the object modifier chain.
  {
    const std::vector<Word>& m = cs.o_mods;
    for (size_t i = 0; i < m.size(); ++i) {
      if (words_to_number(m[i].lexeme) >= 0 && m[i].lexeme.find(' ') == std::string::npos) {
        NumericModifier num;
        num.value = words_to_number(m[i].lexeme);
        num.spelled = lower(m[i].lexeme);
        if (i + 1 < m.size() && lex.unit_by_surface(m[i + 1].lexeme))
          num.unit = lower(m[i + 1].lexeme);
        cs.numeric = num;
        break;
      }
    }
    long rank = 1;
    for (size_t i = 0; i < m.size(); ++i) {
      long r = ordinal_to_number(m[i].lexeme);
      if (r > 0) rank = r;
      bool most = lower(m[i].lexeme) == "most";
      bool least = lower(m[i].lexeme) == "least";
      if (m[i].tag == "JJS" || ((most || least) && i + 1 < m.size())) {
        SuperlativeModifier sup;
        sup.rank = rank;
        if (m[i].tag == "JJS") {
          sup.adjective = lower(m[i].lexeme);
          std::string base = sup.adjective.substr(0, sup.adjective.size() - 3);
          auto d = lex.dimension_of(base);
          if (!d) d = lex.dimension_of(base + "e");  // "largest" -> "large"
          if (!d && base.size() > 1 && base.back() == base[base.size() - 2])
            d = lex.dimension_of(base.substr(0, base.size() - 1));  // "biggest"
          sup.negative = d && !d->positive;
        } else {
          sup.adjective = lower(m[i + 1].lexeme);
          auto d = lex.dimension_of(sup.adjective);
          sup.negative = least || (d && !d->positive && !most);
          if (least) sup.negative = true;
        }
        cs.superlative = sup;
        break;
      }
    }
  }

  // Template tag sets and the six invalid pairs.
  std::string st = cs.subject.tag == "NNS" ? "NN" : cs.subject.tag;
  if (!kSubjectTags.count(st))
    throw SentenceRejected("NoTemplateMatch", s.source_index,
                           "subject tag " + cs.subject.tag +
                               " outside template set");
  cs.isa = validate_pos_dependency(cs.subject.tag, cs.object1.tag, cs.isa,
                                   s.source_index);
  if (cs.object2)
    validate_pos_dependency(cs.subject.tag, cs.object2->head.tag, cs.isa,
                            s.source_index);
  if (cs.isa == IsaKind::Hyponymy && cs.tense == Tense::Past)
    cs.isa = IsaKind::WasPast;
  if (cs.isa == IsaKind::Hyponymy && cs.tense == Tense::Future)
    cs.isa = IsaKind::WillBeFuture;
  return cs;
}

namespace {

std::string np_text(const NounPhrase& np) {
  std::vector<std::string> w;
  if (np.q) w.push_back(to_string(*np.q));
  for (const auto& m : np.mods) w.push_back(m.lexeme);
  w.push_back(np.head.lexeme);
  return join(w, " ");
}

std::string list_text(const PhraseList& pl) {
  std::vector<std::string> parts;
  for (const auto& m : pl.members) parts.push_back(np_text(m));
  const char* cc = pl.connective == Connective::Disj ? " or " : " and ";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += cc;
    out += parts[i];
  }
  if (pl.connective == Connective::Disj && parts.size() > 1)
    out = "either " + out;
  return out;
}

std::string isa_text(IsaKind k, Tense t) {
  switch (k) {
    case IsaKind::Hyponymy: return "is";
    case IsaKind::WasPast: return "was";
    case IsaKind::WillBeFuture: return "will be";
    case IsaKind::Hypernymy: return "is class of";
    case IsaKind::SameAs: return "same as";
    case IsaKind::Like: return "like";
    case IsaKind::SuchAs: return "such as";
    case IsaKind::Includes: return "includes";
    case IsaKind::MayBe: return "may be";
    case IsaKind::CanBecome: return "can become";
    case IsaKind::CanBe: return "can be";
    case IsaKind::IsNow: return "is now";
    case IsaKind::IsStill: return "is still";
    case IsaKind::IsSometimes: return "is sometimes";
  }
  (void)t;
  return "is";
}

}  // namespace

std::string to_normal_text(const CharSentence& cs) {
  std::vector<std::string> w;
  if (cs.only_position && *cs.only_position == OnlyPosition::Subject)
    w.push_back("only");
  if (cs.future_adverb) w.push_back(*cs.future_adverb);
  if (cs.subject_list) {
    w.push_back(list_text(*cs.subject_list));
  } else {
    if (cs.q1) w.push_back(to_string(*cs.q1));
    for (const auto& m : cs.s_mods) w.push_back(m.lexeme);
    w.push_back(cs.subject.lexeme);
    if (cs.subject_instance) w.push_back(*cs.subject_instance);
  }
  if (cs.such_as) {
    w.push_back(", such as");
    w.push_back(list_text(*cs.such_as));
    w.push_back(",");
  }
  auto first_object = [&] {
    if (cs.q2) w.push_back(to_string(*cs.q2));
    if (cs.only_position && *cs.only_position == OnlyPosition::TheOnly)
      w.push_back("only");
    for (const auto& m : cs.o_mods) w.push_back(m.lexeme);
    if (cs.object_appositive_class)
      w.push_back(lower(*cs.object_appositive_class));
    w.push_back(cs.object1.lexeme);
  };
  if (cs.clause1) {
    w.push_back("that is");
    first_object();
    w.push_back(isa_text(cs.isa, cs.tense));
    if (cs.object2) w.push_back(np_text(*cs.object2));
  } else {
    w.push_back(isa_text(cs.isa, cs.tense));
    if (cs.object_list) {
      w.push_back(list_text(*cs.object_list));
    } else {
      first_object();
    }
    if (cs.comparative_ref) {
      w.push_back("than");
      w.push_back(cs.comparative_ref->lexeme);
    }
    if (cs.clause2 && cs.object2) {
      // bare copula: re-extraction keeps the sentence whole and the
      // ambiguous Case-1 record characterizes identically
      w.push_back("is");
      w.push_back(np_text(*cs.object2));
    }
    if (cs.only_position && *cs.only_position == OnlyPosition::Object)
      w.push_back("only");
  }
  return join(w, " ");
}

namespace {

void json_escape(std::ostringstream& o, const std::string& s) {
  o << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') o << '\\';
    o << c;
  }
  o << '"';
}

void json_word(std::ostringstream& o, const Word& w) {
  o << "{\"lexeme\":";
  json_escape(o, w.lexeme);
  o << ",\"tag\":";
  json_escape(o, w.tag);
  o << "}";
}

void json_np(std::ostringstream& o, const NounPhrase& np) {
  o << "{\"q\":";
  if (np.q) json_escape(o, to_string(*np.q));
  else o << "null";
  o << ",\"mods\":[";
  for (size_t i = 0; i < np.mods.size(); ++i) {
    if (i) o << ",";
    json_word(o, np.mods[i]);
  }
  o << "],\"head\":";
  json_word(o, np.head);
  o << "}";
}

void json_list(std::ostringstream& o, const PhraseList& pl) {
  o << "{\"connective\":\""
    << (pl.connective == Connective::Disj ? "or" : "and") << "\",\"members\":[";
  for (size_t i = 0; i < pl.members.size(); ++i) {
    if (i) o << ",";
    json_np(o, pl.members[i]);
  }
  o << "]}";
}

}  // namespace

std::string to_json(const CharSentence& cs) {
  std::ostringstream o;
  o << "{\"q1\":";
  if (cs.q1) json_escape(o, to_string(*cs.q1));
  else o << "null";
  o << ",\"s_mods\":[";
  for (size_t i = 0; i < cs.s_mods.size(); ++i) {
    if (i) o << ",";
    json_word(o, cs.s_mods[i]);
  }
  o << "],\"subject\":";
  json_word(o, cs.subject);
  o << ",\"subject_instance\":";
  if (cs.subject_instance) json_escape(o, *cs.subject_instance);
  else o << "null";
  o << ",\"isa\":\"" << to_string(cs.isa) << "\"";
  o << ",\"tense\":\"" << to_string(cs.tense) << "\"";
  o << ",\"q2\":";
  if (cs.q2) json_escape(o, to_string(*cs.q2));
  else o << "null";
  o << ",\"o_mods\":[";
  for (size_t i = 0; i < cs.o_mods.size(); ++i) {
    if (i) o << ",";
    json_word(o, cs.o_mods[i]);
  }
  o << "],\"object1\":";
  json_word(o, cs.object1);
  o << ",\"object_appositive_class\":";
  if (cs.object_appositive_class) json_escape(o, *cs.object_appositive_class);
  else o << "null";
  o << ",\"clause1\":";
  if (cs.clause1) json_escape(o, to_string(*cs.clause1));
  else o << "null";
  o << ",\"clause2\":";
  if (cs.clause2) json_escape(o, to_string(*cs.clause2));
  else o << "null";
  o << ",\"object2\":";
  if (cs.object2) json_np(o, *cs.object2);
  else o << "null";
  o << ",\"subject_list\":";
  if (cs.subject_list) json_list(o, *cs.subject_list);
  else o << "null";
  o << ",\"object_list\":";
  if (cs.object_list) json_list(o, *cs.object_list);
  else o << "null";
  o << ",\"such_as\":";
  if (cs.such_as) json_list(o, *cs.such_as);
  else o << "null";
  o << ",\"comparative_ref\":";
  if (cs.comparative_ref) json_word(o, *cs.comparative_ref);
  else o << "null";
  o << ",\"only_position\":";
  if (cs.only_position) {
    switch (*cs.only_position) {
      case OnlyPosition::Subject: o << "\"subject\""; break;
      case OnlyPosition::Object: o << "\"object\""; break;
      case OnlyPosition::TheOnly: o << "\"the_only\""; break;
    }
  } else {
    o << "null";
  }
  o << ",\"numeric\":";
  if (cs.numeric) {
    o << "{\"value\":" << cs.numeric->value << ",\"spelled\":";
    json_escape(o, cs.numeric->spelled);
    o << ",\"unit\":";
    if (cs.numeric->unit) json_escape(o, *cs.numeric->unit);
    else o << "null";
    o << "}";
  } else {
    o << "null";
  }
  o << ",\"superlative\":";
  if (cs.superlative) {
    o << "{\"negative\":" << (cs.superlative->negative ? "true" : "false")
      << ",\"rank\":" << cs.superlative->rank << ",\"adjective\":";
    json_escape(o, cs.superlative->adjective);
    o << "}";
  } else {
    o << "null";
  }
  o << ",\"future_adverb\":";
  if (cs.future_adverb) json_escape(o, *cs.future_adverb);
  else o << "null";
  o << ",\"plural\":{\"subject\":" << (cs.subject_was_plural ? "true" : "false")
    << ",\"object\":" << (cs.object_was_plural ? "true" : "false") << "}";
  o << "}";
  return o.str();
}

}  // namespace isadl
