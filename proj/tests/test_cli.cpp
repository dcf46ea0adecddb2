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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = ISADL_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("isadl_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

int run(const std::string& args) {
  std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string lexicon_flag() { return "--lexicon " + testutil::kLexiconDir; }

}  // namespace

TEST_CASE("learn produces the frozen OWL file") {
  TempDir dir;
  int rc = run(lexicon_flag() + " learn --corpus " + testutil::kCorpusDir +
               "/trivial.txt --out " + dir.file("out.ofn") + " --dlt " +
               dir.file("out.dlt") + " --trace " + dir.file("trace.json"));
  CHECK(rc == 0);
  CHECK(testutil::read_file(dir.file("out.ofn")) ==
        testutil::read_file(testutil::kGoldenDir + "/trivial.ofn"));
  CHECK(testutil::read_file(dir.file("out.dlt")) ==
        testutil::read_file(testutil::kGoldenDir + "/trivial.dlt"));
  std::string trace = testutil::read_file(dir.file("trace.json"));
  CHECK(trace.find("\"source_index\":25") != std::string::npos);
}

TEST_CASE("classify emits the golden taxonomy from both formats") {
  TempDir dir;
  REQUIRE(run(lexicon_flag() + " learn --corpus " + testutil::kCorpusDir +
              "/trivial.txt --out " + dir.file("o.ofn") + " --dlt " +
              dir.file("o.dlt")) == 0);
  for (const char* in : {"o.ofn", "o.dlt"}) {
    int rc = run(lexicon_flag() + " classify --in " + dir.file(in) +
                 " --taxonomy " + dir.file("tax.tsv") + " --dot " +
                 dir.file("tax.dot") + " --check");
    CHECK(rc == 0);
    CHECK(testutil::read_file(dir.file("tax.tsv")) ==
          testutil::read_file(testutil::kGoldenDir + "/trivial.taxonomy.tsv"));
    CHECK(testutil::read_file(dir.file("tax.dot")).find("digraph") == 0);
  }
}

TEST_CASE("eval of an ontology against itself reports ones and zeros") {
  TempDir dir;
  REQUIRE(run(lexicon_flag() + " learn --corpus " + testutil::kCorpusDir +
              "/trivial.txt --out " + dir.file("o.ofn")) == 0);
  int rc = run(lexicon_flag() + " eval --learned " + dir.file("o.ofn") +
               " --gold " + dir.file("o.ofn") + " --report " +
               dir.file("rep.json"));
  CHECK(rc == 0);
  std::string rep = testutil::read_file(dir.file("rep.json"));
  CHECK(rep.find("\"lp\":1.0000") != std::string::npos);
  CHECK(rep.find("\"ol\":0.0000") != std::string::npos);
  CHECK(rep.find("\"tf_prime\":1.0000") != std::string::npos);
}

TEST_CASE("exit codes: usage, parse failure, strict inconsistency") {
  TempDir dir;
  CHECK(run("definitely-not-a-command") == 1);
  // parse failure on a malformed ontology
  {
    std::ofstream bad(dir.file("bad.dlt"));
    bad << "Cat <=\n";
  }
  CHECK(run(lexicon_flag() + " classify --in " + dir.file("bad.dlt")) == 2);
  // inconsistency with --check --strict
  {
    std::ofstream clash(dir.file("clash.dlt"));
    clash << "Tomato <= Human\nTomato <= Fruit\nHuman <= not Fruit\n";
  }
  CHECK(run(lexicon_flag() + " classify --in " + dir.file("clash.dlt") +
            " --check --strict") == 3);
  CHECK(run(lexicon_flag() + " classify --in " + dir.file("clash.dlt") +
            " --check") == 0);
}

TEST_CASE("strict-isa upgrades rejected sentences to exit 2") {
  TempDir dir;
  {
    std::ofstream corpus(dir.file("c.txt"));
    corpus << "John is a student\nGreen ideas sleep furiously together\n";
  }
  CHECK(run(lexicon_flag() + " learn --corpus " + dir.file("c.txt") +
            " --out " + dir.file("o.ofn")) == 0);
  CHECK(run(lexicon_flag() + " learn --corpus " + dir.file("c.txt") +
            " --out " + dir.file("o.ofn") + " --strict-isa") == 2);
}

TEST_CASE("pretagged input bypasses the built-in tagger") {
  TempDir dir;
  {
    std::ofstream corpus(dir.file("pre.txt"));
    // FW rewrites to NN, so the foreign word reads as a noun concept
    corpus << "Glorblat_FW is_VBZ a_DT vehicle_NN\n"
           << "Zorblax_NNP is_VBZ a_DT vehicle_NN\n";
  }
  REQUIRE(run(lexicon_flag() + " learn --pretagged --corpus " +
              dir.file("pre.txt") + " --out " + dir.file("o.ofn") + " --dlt " +
              dir.file("o.dlt")) == 0);
  std::string dlt = testutil::read_file(dir.file("o.dlt"));
  CHECK(dlt.find("Glorblat <= Vehicle") != std::string::npos);
  CHECK(dlt.find("Vehicle(Zorblax)") != std::string::npos);
  CHECK(dlt.find("VehicleZorblax <= {Zorblax}") != std::string::npos);
}

TEST_CASE("config file sets defaults and flags override") {
  TempDir dir;
  {
    std::ofstream cfg(dir.file("cfg"));
    cfg << "lexicon_dir=" << testutil::kLexiconDir << "\n"
        << "namespace=https://example.org/custom#\n";
  }
  {
    std::ofstream corpus(dir.file("c.txt"));
    corpus << "John is a student\n";
  }
  REQUIRE(run("--config " + dir.file("cfg") + " learn --corpus " +
              dir.file("c.txt") + " --out " + dir.file("o.ofn")) == 0);
  CHECK(testutil::read_file(dir.file("o.ofn"))
            .find("Prefix(:=<https://example.org/custom#>)") == 0);
}

TEST_CASE("learn --golden stamps outcomes into the trace") {
  TempDir dir;
  int rc = run(lexicon_flag() + " learn --corpus " + testutil::kCorpusDir +
               "/nontrivial.txt --out " + dir.file("o.ofn") + " --golden " +
               testutil::kGoldenDir + "/nontrivial.axioms --trace " +
               dir.file("t.json"));
  CHECK(rc == 0);
  std::string trace = testutil::read_file(dir.file("t.json"));
  CHECK(trace.find("\"outcome\":\"partial\"") != std::string::npos);
  CHECK(trace.find("\"outcome\":\"correct\"") != std::string::npos);
  CHECK(trace.find("\"outcome\":\"incorrect\"") == std::string::npos);
}

TEST_CASE("all runs learn and classify in one step") {
  TempDir dir;
  int rc = run(lexicon_flag() + " all --corpus " + testutil::kCorpusDir +
               "/trivial.txt --out " + dir.file("o.ofn") + " --taxonomy " +
               dir.file("tax.tsv"));
  CHECK(rc == 0);
  CHECK(testutil::read_file(dir.file("o.ofn")) ==
        testutil::read_file(testutil::kGoldenDir + "/trivial.ofn"));
  CHECK(testutil::read_file(dir.file("tax.tsv")) ==
        testutil::read_file(testutil::kGoldenDir + "/trivial.taxonomy.tsv"));
}

TEST_CASE("tag subcommand prints pre-taggable lines") {
  TempDir dir;
  {
    std::ofstream corpus(dir.file("c.txt"));
    corpus << "John is a student\n";
  }
  std::string cmd = kCli + " " + lexicon_flag() + " tag --corpus " +
                    dir.file("c.txt") + " > " + dir.file("tagged.txt") +
                    " 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(testutil::read_file(dir.file("tagged.txt")) ==
        "John_NNP is_VBX a_DT student_NN\n");
}
