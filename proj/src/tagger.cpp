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

#include "isadl/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "isadl/text.hpp"

namespace isadl {

namespace {

const std::set<std::string> kDeterminers = {
    "a", "an", "the", "this", "these", "those", "some", "all", "no",
    "any", "every", "each", "such", "either", "neither", "both"};
const std::set<std::string> kConjunctions = {"and", "or", "but", "yet",
                                             "whereas"};
const std::set<std::string> kPrepositions = {
    "of", "as", "than", "in", "at", "by", "with", "for", "from", "under",
    "although", "though", "while", "when", "where", "whereas"};
const std::set<std::string> kModals = {"will", "shall", "may", "might",
                                       "can",  "could", "must"};
const std::set<std::string> kCopulas = {"is", "are", "was", "were",
                                        "am", "be",  "been"};
const std::set<std::string> kPronouns = {"he", "she", "it", "they",
                                         "i",  "you", "we"};

const std::map<std::string, std::string> kIrregularPlural = {
    {"men", "man"},       {"women", "woman"},  {"children", "child"},
    {"people", "person"}, {"feet", "foot"},    {"teeth", "tooth"},
    {"geese", "goose"},   {"mice", "mouse"},   {"oxen", "ox"},
    {"wives", "wife"},    {"lives", "life"},   {"leaves", "leaf"},
    {"wolves", "wolf"},   {"knives", "knife"}, {"cacti", "cactus"},
    {"fungi", "fungus"},  {"stimuli", "stimulus"}};

// Commas split off as their own tokens; possessive 's separates; the
// sentence-final period is dropped. Abbreviation dots ("ft.") survive
// mid-sentence.
std::vector<std::string> tokenize(const std::string& sentence) {
  std::vector<std::string> out;
  for (auto& w : split_ws(sentence)) {
    std::string word = w;
    std::vector<std::string> trail;
    while (!word.empty() && (word.back() == ',' || word.back() == ';' ||
                             word.back() == '?' || word.back() == '!')) {
      trail.push_back(std::string(1, word.back()));
      word.pop_back();
    }
    if (word.size() > 2 && word.substr(word.size() - 2) == "'s") {
      out.push_back(word.substr(0, word.size() - 2));
      out.push_back("'s");
    } else if (!word.empty()) {
      out.push_back(word);
    }
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) out.push_back(*it);
  }
  if (!out.empty() && out.back().size() > 1 && out.back().back() == '.') {
    out.back().pop_back();
  }
  return out;
}

std::string suffix_tag(const std::string& word, bool capitalized) {
  std::string w = lower(word);
  if (is_integer_token(w)) return "CD";
  if (words_to_number(w) >= 0) return "CD";
  if (ordinal_to_number(w) >= 0) return "JJ";
  if (w.size() > 4 && w.substr(w.size() - 3) == "ing") return "VBG";
  if (w.size() > 3 && w.substr(w.size() - 2) == "ly") return "RB";
  if (w.size() > 4 && w.substr(w.size() - 3) == "est") return "JJS";
  if (capitalized) return "NNP";
  return "NN";
}

}  // namespace

std::string singular_noun(const std::string& word) {
  std::string w = lower(word);
  if (auto it = kIrregularPlural.find(w); it != kIrregularPlural.end())
    return it->second;
  if (w.size() > 3 && w.substr(w.size() - 3) == "ies")
    return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 3 && (w.substr(w.size() - 3) == "ses" ||
                       w.substr(w.size() - 3) == "xes" ||
                       w.substr(w.size() - 3) == "hes"))
    return w.substr(0, w.size() - 2);
  if (w.size() > 2 && w.back() == 's' && w[w.size() - 2] != 's' &&
      w[w.size() - 2] != 'u')
    return w.substr(0, w.size() - 1);
  return w;
}

bool is_plural_noun(const std::string& word, const Lexicon& lex) {
  std::string w = lower(word);
  if (kIrregularPlural.count(w)) return true;
  std::string sing = singular_noun(w);
  if (sing == w) return false;
  if (auto it = lex.word_tags.find(sing); it != lex.word_tags.end())
    return it->second == "NN";
  return w.back() == 's';
}

std::vector<Token> tag(const std::string& sentence, const Lexicon& lex) {
  if (trim(sentence).empty()) throw TaggerError("empty sentence");
  std::vector<std::string> words = tokenize(sentence);
  if (words.empty()) throw TaggerError("empty sentence");

  std::vector<Token> tokens;
  std::vector<bool> caps;  // raw capitalization, for the NNP merge pass
  size_t i = 0;
  while (i < words.size()) {
    const std::string raw = words[i];
    std::string w = lower(raw);

    if (raw == ",") {
      tokens.push_back({",", ",", 0});
      caps.push_back(false);
      ++i;
      continue;
    }
    if (raw == "'s") {
      tokens.push_back({"'s", "POS", 0});
      caps.push_back(false);
      ++i;
      continue;
    }

    // Multiword word-list entries ("black hole").
    bool matched = false;
    for (size_t n = std::min<size_t>(3, words.size() - i); n >= 2; --n) {
      std::string phrase = w;
      for (size_t k = 1; k < n; ++k) phrase += " " + lower(words[i + k]);
      if (auto it = lex.word_tags.find(phrase); it != lex.word_tags.end()) {
        tokens.push_back({phrase, it->second, 0});
        caps.push_back(false);
        i += n;
        matched = true;
        break;
      }
    }
    if (matched) continue;

    std::string t;
    if (kCopulas.count(w)) t = "VBX";
    else if (kDeterminers.count(w)) t = "DT";
    else if (kConjunctions.count(w)) t = "CC";
    else if (kModals.count(w)) t = "MD";
    else if (kPrepositions.count(w)) t = "IN";
    else if (w == "to") t = "TO";
    else if (w == "not") t = "RB";
    else if (kPronouns.count(w)) t = "PRP";
    else if (auto it = lex.word_tags.find(w); it != lex.word_tags.end())
      t = it->second;
    else if (kIrregularPlural.count(w)) t = "NNS";
    else if (w.size() > 2 && w.back() == 's' &&
             lex.word_tags.count(singular_noun(w)))
      t = lex.word_tags.at(singular_noun(w)) == "NN" ? "NNS" : "NN";
    else
      t = suffix_tag(raw, starts_with_upper(raw));

    if (t == "FW") t = "NN";
    tokens.push_back({t == "NNP" ? raw : w, t, 0});
    caps.push_back(starts_with_upper(raw));
    ++i;
  }

  // Merge proper-noun runs into one NNP token: NNP NNP, capitalized
  // common word + NNP ("King Williams"), and a trailing model number
  // ("Intel Pentium 4").
  std::vector<Token> merged;
  for (size_t k = 0; k < tokens.size(); ++k) {
    if ((tokens[k].tag == "NNP" || (caps[k] && tokens[k].tag == "NN")) &&
        k + 1 < tokens.size() && tokens[k + 1].tag == "NNP") {
      std::string acc = capitalize(tokens[k].lexeme);
      size_t j = k + 1;
      while (j < tokens.size() && tokens[j].tag == "NNP") {
        acc += " " + tokens[j].lexeme;
        ++j;
      }
      if (j < tokens.size() && tokens[j].tag == "CD" &&
          (j + 1 == tokens.size() || tokens[j + 1].tag == "VBX")) {
        acc += " " + tokens[j].lexeme;
        ++j;
      }
      merged.push_back({acc, "NNP", 0});
      k = j - 1;
      continue;
    }
    merged.push_back(tokens[k]);
  }
  for (size_t k = 0; k < merged.size(); ++k)
    merged[k].index = static_cast<int>(k);
  return merged;
}

std::vector<Token> parse_pretagged(const std::string& line) {
  if (trim(line).empty()) throw TaggerError("empty sentence");
  std::vector<Token> tokens;
  for (auto& w : split_ws(line)) {
    size_t p = w.rfind('_');
    if (p == std::string::npos || p == 0 || p + 1 >= w.size())
      throw TaggerError("malformed pre-tagged token '" + w + "'");
    Token t{w.substr(0, p), w.substr(p + 1), static_cast<int>(tokens.size())};
    std::string lex = lower(t.lexeme);
    if ((t.tag == "VBZ" || t.tag == "VBD" || t.tag == "VBP") &&
        kCopulas.count(lex))
      t.tag = "VBX";
    if (t.tag == "FW") t.tag = "NN";
    tokens.push_back(t);
  }
  return tokens;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) words.push_back(t.lexeme);
  return join(words, " ");
}

}  // namespace isadl
