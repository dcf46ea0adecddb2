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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "isadl/pipeline.hpp"
#include "isadl/preprocess.hpp"
#include "isadl/reason.hpp"
#include "isadl/serialize.hpp"
#include "isadl/tagger.hpp"
#include "isadl/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;

struct Config {
  std::string lexicon_dir = "resources/lexicon";
  std::string ns = isadl::kDefaultNamespace;
};

// key=value config lines; '#' comments.
Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open config " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = isadl::trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) continue;
    std::string key = isadl::trim(t.substr(0, eq));
    std::string val = isadl::trim(t.substr(eq + 1));
    if (key == "lexicon_dir") c.lexicon_dir = val;
    if (key == "namespace") c.ns = val;
  }
  return c;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isadl: IS-A sentences to description-logic ontologies"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::string lexicon_dir;
  std::string ns;
  int jobs = 1;
  std::string seed_order = "fixed";
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--lexicon", lexicon_dir, "lexicon resource directory");
  app.add_option("--namespace", ns, "ontology namespace IRI");
  app.add_option("--jobs", jobs, "parallel translation workers");
  app.add_option("--seed-order", seed_order,
                 "processing order (only 'fixed' is supported)");

  std::string corpus, out_path, trace_path, dlt_path, golden_path;
  bool pretagged = false, strict_isa = false;

  auto* tag_cmd = app.add_subcommand("tag", "tag a corpus, one line each");
  tag_cmd->add_option("--corpus", corpus)->required();

  auto* simplify = app.add_subcommand("simplify", "triple-extraction trace");
  simplify->add_option("--corpus", corpus)->required();
  simplify->add_option("--trace", trace_path);

  auto* characterize_cmd =
      app.add_subcommand("characterize", "characterization trace");
  characterize_cmd->add_option("--corpus", corpus)->required();
  characterize_cmd->add_option("--trace", trace_path);

  auto* learn = app.add_subcommand("learn", "corpus to OWL ontology");
  learn->add_option("--corpus", corpus)->required();
  learn->add_option("--out", out_path)->required();
  learn->add_option("--trace", trace_path);
  learn->add_option("--dlt", dlt_path);
  learn->add_option("--golden", golden_path,
                    "golden axiom file; stamps trace outcomes");
  learn->add_flag("--pretagged", pretagged);
  learn->add_flag("--strict-isa", strict_isa);

  std::string in_path, taxonomy_path, dot_path;
  bool check = false, strict = false;
  auto* classify_cmd = app.add_subcommand("classify", "taxonomy extraction");
  classify_cmd->add_option("--in", in_path)->required();
  classify_cmd->add_option("--taxonomy", taxonomy_path);
  classify_cmd->add_option("--dot", dot_path);
  classify_cmd->add_flag("--check", check);
  classify_cmd->add_flag("--strict", strict);

  std::string learned_path, gold_path, report_path;
  auto* eval_cmd = app.add_subcommand("eval", "learned vs gold metrics");
  eval_cmd->add_option("--learned", learned_path)->required();
  eval_cmd->add_option("--gold", gold_path)->required();
  eval_cmd->add_option("--report", report_path);

  auto* all_cmd = app.add_subcommand("all", "learn then classify");
  all_cmd->add_option("--corpus", corpus)->required();
  all_cmd->add_option("--out", out_path)->required();
  all_cmd->add_option("--taxonomy", taxonomy_path);
  all_cmd->add_option("--trace", trace_path);
  all_cmd->add_flag("--pretagged", pretagged);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config cfg = load_config(config_path);
    if (!lexicon_dir.empty()) cfg.lexicon_dir = lexicon_dir;
    if (!ns.empty()) cfg.ns = ns;
    if (seed_order != "fixed") {
      std::cerr << "only --seed-order fixed is supported\n";
      return kExitUsage;
    }

    isadl::Lexicon lex = isadl::load_lexicon(cfg.lexicon_dir);

    if (*tag_cmd) {
      for (const auto& line : isadl::read_corpus(corpus)) {
        auto toks = isadl::tag(line, lex);
        std::string out;
        for (const auto& t : toks) {
          if (!out.empty()) out += " ";
          out += t.lexeme + "_" + t.tag;
        }
        std::cout << out << "\n";
      }
      return kExitOk;
    }

    if (*simplify || *characterize_cmd || *learn || *all_cmd) {
      isadl::PipelineOptions opts;
      opts.pretagged = pretagged;
      opts.jobs = jobs;
      auto lines = isadl::read_corpus(corpus);
      isadl::PipelineResult r = isadl::run_pipeline(lines, lex, opts);

      for (const auto& s : r.sentences)
        if (s.rejected)
          std::cerr << "rejected #" << s.source_index << " [" << s.reject_code
                    << "] " << s.reject_reason << "\n";
      if (strict_isa)
        for (const auto& s : r.sentences)
          if (s.rejected) return kExitParse;

      if (!golden_path.empty()) {
        auto golden = isadl::load_golden_axioms(golden_path);
        isadl::apply_golden(&r, golden, {});
      }
      if (!trace_path.empty()) write_file(trace_path, r.trace_json() + "\n");
      if (*simplify || *characterize_cmd) {
        if (trace_path.empty()) std::cout << r.trace_json() << "\n";
        return kExitOk;
      }
      write_file(out_path, isadl::to_owl_functional(r.ontology, cfg.ns));
      if (!dlt_path.empty())
        write_file(dlt_path, isadl::to_dl_text(r.ontology));
      if (*all_cmd && !taxonomy_path.empty()) {
        isadl::Reasoner reasoner(r.ontology);
        write_file(taxonomy_path, reasoner.classify().to_tsv());
      }
      return kExitOk;
    }

    if (*classify_cmd) {
      isadl::Ontology onto = isadl::load_ontology_file(in_path);
      isadl::Reasoner reasoner(onto);
      if (check) {
        isadl::ConsistencyReport rep = reasoner.check_consistency();
        for (const auto& u : rep.unsatisfiable)
          std::cout << "unsatisfiable\t" << u << "\n";
        for (const auto& c : rep.abox_clashes) std::cout << "clash\t" << c << "\n";
        if (!rep.consistent() && strict) return kExitInconsistent;
      }
      isadl::TaxonomyGraph g = reasoner.classify();
      if (!taxonomy_path.empty()) write_file(taxonomy_path, g.to_tsv());
      else std::cout << g.to_tsv();
      if (!dot_path.empty()) write_file(dot_path, g.to_dot());
      return kExitOk;
    }

    if (*eval_cmd) {
      isadl::Ontology learned = isadl::load_ontology_file(learned_path);
      isadl::Ontology gold = isadl::load_ontology_file(gold_path);
      isadl::EvalReport rep = isadl::evaluate(learned, gold);
      if (!report_path.empty()) write_file(report_path, rep.to_json() + "\n");
      std::cout << rep.to_table();
      return kExitOk;
    }
  } catch (const isadl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const isadl::LexiconError& e) {
    std::cerr << "lexicon error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
