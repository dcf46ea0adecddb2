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

#include "isadl/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "isadl/preprocess.hpp"
#include "isadl/serialize.hpp"
#include "isadl/tagger.hpp"
#include "isadl/text.hpp"

namespace isadl {

std::vector<std::string> corpus_from_text(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& raw : split(text, '\n')) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open corpus " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return corpus_from_text(buf.str());
}

namespace {

struct WorkItem {
  SentenceRecord record;
  std::vector<SimpleSentence> simples;     // singularized
  std::vector<SimpleSentence> normalized;  // after normalize
  std::vector<CharSentence> chars;
  std::vector<Batch> batches;  // counters unresolved
};

template <typename Fn>
void parallel_for(size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  int workers = std::min<int>(jobs, static_cast<int>(n));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

PipelineResult run_pipeline(const std::vector<std::string>& lines,
                            const Lexicon& lex, const PipelineOptions& opts) {
  std::vector<WorkItem> items(lines.size());

  // Phase 1 (parallel): tag, triple-extract, singularize.
  parallel_for(lines.size(), opts.jobs, [&](size_t i) {
    WorkItem& it = items[i];
    it.record.source_index = static_cast<int>(i);
    it.record.raw = lines[i];
    try {
      std::vector<Token> toks = opts.pretagged ? parse_pretagged(lines[i])
                                               : tag(lines[i], lex);
      auto simples = extract_triples(toks, lex, static_cast<int>(i));
      for (auto& s : simples) it.simples.push_back(singularize(s, lex));
    } catch (const SentenceRejected& e) {
      it.record.rejected = true;
      it.record.reject_code = e.code;
      it.record.reject_reason = e.what();
    } catch (const TaggerError& e) {
      it.record.rejected = true;
      it.record.reject_code = "TaggerError";
      it.record.reject_reason = e.what();
    }
  });

  // Phase 2 (sequential): canonical-object table in corpus order.
  CanonicalObjects canon;
  for (auto& it : items)
    for (auto& s : it.simples) note_canonical_object(s, lex, &canon);

  // Phase 3 (parallel): normalize, characterize, translate.
  parallel_for(items.size(), opts.jobs, [&](size_t i) {
    WorkItem& it = items[i];
    if (it.record.rejected) return;
    try {
      for (const auto& s : it.simples) {
        SimpleSentence n = normalize(s, lex, canon);
        it.normalized.push_back(n);
        CharSentence cs = characterize(n, lex);
        it.chars.push_back(cs);
        it.batches.push_back(translate(cs, lex));
      }
    } catch (const SentenceRejected& e) {
      it.record.rejected = true;
      it.record.reject_code = e.code;
      it.record.reject_reason = e.what();
      it.normalized.clear();
      it.chars.clear();
      it.batches.clear();
    }
  });

  // Phase 4 (sequential): resolve counters and merge in source order.
  PipelineResult result;
  for (auto& it : items) {
    if (it.record.rejected) {
      result.sentences.push_back(std::move(it.record));
      continue;
    }
    for (size_t e = 0; e < it.batches.size(); ++e) {
      resolve_counters(&it.batches[e].axioms, &result.ontology.counters);
      ExpansionRecord rec;
      rec.expansion_id = it.normalized[e].expansion_id;
      rec.normalized = it.normalized[e].text();
      rec.subject_was_plural = it.normalized[e].subject_was_plural;
      rec.object_was_plural = it.normalized[e].object_was_plural;
      rec.tense = it.normalized[e].tense;
      rec.char_json = to_json(it.chars[e]);
      rec.rule_id = it.batches[e].rule_id;
      rec.play_safe = it.batches[e].play_safe;
      for (const auto& a : it.batches[e].axioms) {
        rec.axioms.push_back(to_dl_text(a));
        result.ontology.add(a);
      }
      it.record.expansions.push_back(std::move(rec));
    }
    result.sentences.push_back(std::move(it.record));
  }
  return result;
}

std::string PipelineResult::trace_json() const {
  std::ostringstream o;
  auto esc = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  o << "{\"sentences\":[";
  for (size_t i = 0; i < sentences.size(); ++i) {
    const SentenceRecord& s = sentences[i];
    if (i) o << ",";
    o << "{\"source_index\":" << s.source_index << ",\"raw\":\"" << esc(s.raw)
      << "\"";
    if (s.rejected) {
      o << ",\"rejected\":true,\"reject_code\":\"" << esc(s.reject_code)
        << "\",\"reject_reason\":\"" << esc(s.reject_reason) << "\"";
    }
    if (!s.outcome.empty()) o << ",\"outcome\":\"" << esc(s.outcome) << "\"";
    o << ",\"expansions\":[";
    for (size_t e = 0; e < s.expansions.size(); ++e) {
      const ExpansionRecord& x = s.expansions[e];
      if (e) o << ",";
      o << "{\"expansion_id\":" << x.expansion_id << ",\"normalized\":\""
        << esc(x.normalized) << "\",\"plurality\":{\"subject\":"
        << (x.subject_was_plural ? "true" : "false") << ",\"object\":"
        << (x.object_was_plural ? "true" : "false") << "},\"tense\":\""
        << to_string(x.tense) << "\",\"rule_id\":\"" << esc(x.rule_id)
        << "\",\"play_safe\":" << (x.play_safe ? "true" : "false")
        << ",\"char\":" << x.char_json << ",\"axioms\":[";
      for (size_t a = 0; a < x.axioms.size(); ++a) {
        if (a) o << ",";
        o << "\"" << esc(x.axioms[a]) << "\"";
      }
      o << "]}";
    }
    o << "]}";
  }
  o << "]}";
  return o.str();
}

CharacterizationCounts PipelineResult::char_counts() const {
  CharacterizationCounts c;
  c.total = sentences.size();
  for (const auto& s : sentences) {
    if (s.rejected) continue;
    ++c.characterized;
    if (s.outcome.empty() || s.outcome == "correct" || s.outcome == "partial")
      ++c.correct;
  }
  return c;
}

std::map<int, GoldenSentence> load_golden_axioms(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open golden " + path);
  std::map<int, GoldenSentence> out;
  std::string line;
  int cur = -1;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("#sent ", 0) == 0) {
      auto f = split_ws(t);
      if (f.size() < 3) throw std::runtime_error("bad golden header: " + t);
      cur = std::stoi(f[1]);
      out[cur].outcome = f[2];
      continue;
    }
    if (t[0] == '#') continue;
    if (cur < 0) throw std::runtime_error("golden axiom before #sent header");
    out[cur].axioms.push_back(t);
  }
  return out;
}

std::string render_golden_axioms(const PipelineResult& result,
                                 const std::map<int, std::string>& outcomes) {
  std::ostringstream o;
  for (const auto& s : result.sentences) {
    std::string outcome = "correct";
    if (auto it = outcomes.find(s.source_index); it != outcomes.end())
      outcome = it->second;
    o << "#sent " << s.source_index << " " << outcome << "\n";
    for (const auto& e : s.expansions)
      for (const auto& a : e.axioms) o << a << "\n";
  }
  return o.str();
}

std::map<std::string, std::string> load_golden_chars(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open golden " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    // key<TAB>json
    size_t tab = t.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("bad golden char line: " + t);
    out[t.substr(0, tab)] = t.substr(tab + 1);
  }
  return out;
}

std::string render_golden_chars(const PipelineResult& result) {
  std::ostringstream o;
  for (const auto& s : result.sentences)
    for (const auto& e : s.expansions)
      o << s.source_index << ":" << e.expansion_id << "\t" << e.char_json
        << "\n";
  return o.str();
}

CharacterizationCounts apply_golden(
    PipelineResult* result, const std::map<int, GoldenSentence>& axioms,
    const std::map<std::string, std::string>& chars) {
  for (auto& s : result->sentences) {
    if (s.rejected) {
      s.outcome = "rejected";
      continue;
    }
    bool ok = true;
    if (!axioms.empty()) {
      auto it = axioms.find(s.source_index);
      if (it == axioms.end()) {
        ok = false;
      } else {
        std::vector<std::string> got;
        for (const auto& e : s.expansions)
          got.insert(got.end(), e.axioms.begin(), e.axioms.end());
        ok = got == it->second.axioms;
      }
    }
    if (ok && !chars.empty()) {
      for (const auto& e : s.expansions) {
        std::string key =
            std::to_string(s.source_index) + ":" + std::to_string(e.expansion_id);
        auto it = chars.find(key);
        if (it == chars.end() || it->second != e.char_json) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      s.outcome = "incorrect";
    } else {
      auto it = axioms.find(s.source_index);
      s.outcome = (it != axioms.end() && it->second.outcome == "partial")
                      ? "partial"
                      : "correct";
    }
  }
  CharacterizationCounts c;
  c.total = result->sentences.size();
  for (const auto& s : result->sentences) {
    if (s.rejected) continue;
    ++c.characterized;
    if (s.outcome == "correct" || s.outcome == "partial") ++c.correct;
  }
  return c;
}

}  // namespace isadl
