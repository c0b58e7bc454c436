#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ramsey/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int exit_code;
  std::string out, err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"rarrow"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ramsey::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("arrow on the separating instance") {
    CliRun r = run_cli({"arrow", "--name", "K6", "--pattern", "K3+K2"});
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "NotArrows");
    CHECK(j["graph"] == "E~~w");
    CHECK(j["pattern"] == "K3+K2");
    CHECK(j["witness"].is_array());
    CHECK(j["millis"].is_null());
    CHECK(j["nodes"].is_number());

    CliRun arrows = run_cli({"arrow", "--name", "K6", "--pattern", "K3"});
    json ja = json::parse(arrows.out);
    CHECK(ja["verdict"] == "Arrows");
    CHECK(ja["witness"].is_null());
  }

  TEST_CASE("byte-for-byte reproducibility in sequential mode") {
    CliRun a = run_cli({"arrow", "--g6", "E~~w", "--pattern", "K3+K2"});
    CliRun b = run_cli({"arrow", "--g6", "E~~w", "--pattern", "K3+K2"});
    CHECK(a.out == b.out);
    CliRun s1 = run_cli({"scenario", "--n", "6"});
    CliRun s2 = run_cli({"scenario", "--n", "6"});
    CHECK(s1.out == s2.out);
  }

  TEST_CASE("usage and parse failures exit 2") {
    CHECK(run_cli({"arrow", "--name", "K6"}).exit_code == 2);          // missing pattern
    CHECK(run_cli({"arrow", "--name", "K6", "--pattern", "K1"}).exit_code == 2);
    CHECK(run_cli({"arrow", "--g6", "????", "--pattern", "K3"}).exit_code == 2);
    CHECK(run_cli({"arrow", "--pattern", "K3"}).exit_code == 2);       // no graph source
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
  }

  TEST_CASE("gadget verify and scenario exit codes") {
    CliRun ok = run_cli({"gadget-verify", "--name", "theorem1_final", "--n", "5"});
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j["passes"] == true);
    CHECK(j["violations"].empty());

    CliRun sc = run_cli({"scenario", "--n", "7"});
    CHECK(sc.exit_code == 0);
    CHECK(json::parse(sc.out)["all_hold"] == true);
  }

  TEST_CASE("gadget build and search emit specs") {
    CliRun b = run_cli({"gadget-build", "--name", "lemma3_stage2", "--n", "5"});
    CHECK(b.exit_code == 0);
    json spec = json::parse(b.out);
    CHECK(spec["name"] == "lemma3_stage2");
    CHECK(spec["classes"].size() == 6);

    CliRun s = run_cli({"gadget-search", "--name", "cor_small_k4"});
    CHECK(s.exit_code == 0);
    CHECK(json::parse(s.out)["name"] == "cor_small_k4");
  }

  TEST_CASE("cnf export") {
    CliRun r = run_cli({"cnf", "--name", "K4", "--pattern", "K3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("p cnf 6 8\n") != std::string::npos);
    CHECK(r.out.find("c edge 1 = (0,1)\n") != std::string::npos);
  }

  TEST_CASE("enumerate, scan and divergence round trip through files") {
    std::string corpus_path = "cli_test_corpus.g6";
    CliRun en = run_cli({"enumerate", "--n", "4", "-o", corpus_path});
    CHECK(en.exit_code == 0);

    CliRun scan = run_cli({"scan", "--corpus", corpus_path, "--target", "K3", "--cotarget",
                           "K3+K2"});
    CHECK(scan.exit_code == 0);
    std::istringstream lines(scan.out);
    std::string line, last;
    int count = 0;
    while (std::getline(lines, line)) {
      last = line;
      ++count;
    }
    CHECK(count == 12);  // 11 records plus the summary footer
    json foot = json::parse(last);
    CHECK(foot["summary"]["total"] == 11);
    CHECK(foot["summary"]["violations"].empty());

    CliRun div = run_cli({"divergence", "--max-n", "4", "--p1", "K3", "--p2", "K3+K2"});
    CHECK(div.exit_code == 0);
    json dj = json::parse(div.out);
    CHECK(dj["members"].empty());
    CHECK(dj["scanned"] == 18);

    std::remove(corpus_path.c_str());
  }

  TEST_CASE("minimal subcommand") {
    CliRun r = run_cli({"minimal", "--name", "K6", "--pattern", "K3"});
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["is_minimal"] == true);
    CHECK(j["critical_edges"].size() == 15);
  }

  TEST_CASE("mono subcommand reads a colouring file") {
    std::string path = "cli_test_colouring.txt";
    {
      std::ofstream f(path);
      // red K4 on {0..3} inside K6, rest blue
      for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
          f << u << " " << v << " " << ((u < 4 && v < 4) ? "R" : "B") << "\n";
    }
    CliRun none = run_cli({"mono", "--name", "K6", "--pattern", "K3+K2", "--colouring", path});
    CHECK(none.exit_code == 0);
    CHECK(json::parse(none.out)["found"] == false);

    CliRun red = run_cli({"mono", "--name", "K6", "--pattern", "K3", "--colouring", path,
                          "--colour", "R"});
    json j = json::parse(red.out);
    CHECK(j["found"] == true);
    CHECK(j["colour"] == "R");
    std::remove(path.c_str());
  }

  TEST_CASE("witness file output") {
    std::string path = "cli_test_witness.txt";
    CliRun r = run_cli({"arrow", "--name", "K6", "--pattern", "K3+K2", "--witness-out", path});
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["witness_file"] == path);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string first;
    std::getline(f, first);
    CHECK(first.size() >= 5);
    std::remove(path.c_str());
  }
}
