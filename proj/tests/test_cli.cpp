#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "engel/report.hpp"
#include "test_helpers.hpp"

using namespace engel;
using json = nlohmann::ordered_json;

TEST_CASE("analyze report for S3") {
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.groups = {"S3"};
  cfg.seed = 7;
  RunResult r = run_analyze(cfg);
  CHECK(r.exit_code == 0);
  const json& g = r.json["groups"][0];
  CHECK(g["spec"] == "S3");
  CHECK(g["order"] == 6);
  CHECK(g["engel"]["left"]["set"].size() == 3);
  CHECK(g["engel"]["right"]["set"].size() == 1);
  CHECK(g["engel"]["rho"].size() == 1);
  CHECK(g["structure"]["radicals"]["fitting"].size() == 3);
  CHECK(r.json["meta"]["seed"] == 7);
}

TEST_CASE("analyze report for the trivial group") {
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.groups = {"C1"};
  RunResult r = run_analyze(cfg);
  const json& g = r.json["groups"][0];
  CHECK(g["order"] == 1);
  for (const char* path : {"set", "bounded"}) {
    CHECK(g["engel"]["left"][path] == json::array({"1"}));
    CHECK(g["engel"]["right"][path] == json::array({"1"}));
  }
  CHECK(g["engel"]["rho"] == json::array({"1"}));
  CHECK(g["structure"]["radicals"]["fitting"] == json::array({"1"}));
}

TEST_CASE("analyze wreath(C2,C2xC2): L2 is proper but generates") {
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.groups = {"wreath(C2,C2xC2)"};
  cfg.max_n = 4;
  RunResult r = run_analyze(cfg);
  const json& g = r.json["groups"][0];
  REQUIRE(g["order"] == 64);
  CHECK(g["engel"]["left"]["levels"]["2"].size() < 64);
  CHECK(g["engel"]["left"]["levels"]["2"].size() > 0);

  // <L_2> = G, checked through the engine
  const FiniteGroup& W = testutil::cached_group("wreath(C2,C2xC2)");
  EngelReport rep = engel_level_sets(W, 4, false);
  CHECK(rep.left_levels[1].size() < 64);
  CHECK(closure_elements(W, rep.left_levels[1]).size() == 64);
}

TEST_CASE("analyze rejects black-box specs with a capacity error") {
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.groups = {"gl(p=2,k=3)"};
  CHECK_THROWS_AS(run_analyze(cfg), capacity_error);
}

TEST_CASE("verify single suite on one group") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.suite = "heineken_inclusions";
  cfg.groups = {"S4"};
  cfg.seed = 7;
  RunResult r = run_verify(cfg);
  CHECK(r.exit_code == 0);
  const json& checks = r.json["groups"][0]["checks"];
  REQUIRE(checks.size() == 1);
  CHECK(checks[0]["id"] == "heineken_inclusions");
  CHECK(checks[0]["outcome"] == "pass");
}

TEST_CASE("verify unknown suite is a usage error") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.suite = "not_a_check";
  cfg.groups = {"S3"};
  CHECK_THROWS_AS(run_verify(cfg), usage_error);
}

TEST_CASE("identical configs give byte-identical reports") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.suite = "levi_kappe_identities";
  cfg.groups = {"S4", "fnil4(k=3)"};  // the second one samples
  cfg.seed = 7;
  RunResult a = run_verify(cfg);
  RunResult b = run_verify(cfg);
  CHECK(render(a, cfg) == render(b, cfg));
}

TEST_CASE("zoo files") {
  std::string path = "test_zoo_tmp.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "S3\n"
        << "\n"
        << "C2 x C2\n";
  }
  RunConfig cfg;
  cfg.command = "verify";
  cfg.zoo = path;
  std::vector<GroupSpec> zoo = resolve_zoo(cfg);
  std::remove(path.c_str());
  REQUIRE(zoo.size() == 2);
  CHECK(zoo[0].to_string() == "S3");
  CHECK(zoo[1].to_string() == "C2xC2");
}

TEST_CASE("explicit groups override the zoo") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.groups = {"S3"};
  cfg.zoo = "default";
  std::vector<GroupSpec> zoo = resolve_zoo(cfg);
  REQUIRE(zoo.size() == 1);
  CHECK(zoo[0].to_string() == "S3");
}

TEST_CASE("search command reports found or absent") {
  RunConfig cfg;
  cfg.command = "search";
  cfg.predicate = "macdonald_r3";
  cfg.groups = {"C2xC2", "D8"};  // no witness possible here
  RunResult r = run_search(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.json["search"]["predicate"] == "macdonald_r3");
  CHECK(r.json["search"]["found"] == false);
}

TEST_CASE("text rendering mentions outcomes") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.suite = "peng_R";
  cfg.groups = {"S3"};
  cfg.format = "text";
  RunResult r = run_verify(cfg);
  std::string text = render(r, cfg);
  CHECK(text.find("[pass] peng_R") != std::string::npos);
  CHECK(text.find("S3") != std::string::npos);
}
