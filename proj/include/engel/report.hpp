#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "engel/checks.hpp"

namespace engel {

// Everything a run needs; echoed verbatim into the report so identical
// configs (including the seed) reproduce byte-identical JSON.
struct RunConfig {
  std::string command;               // analyze | verify | search
  std::vector<std::string> groups;   // explicit --group specs
  std::string zoo = "default";       // "default" or a file of specs
  std::string suite = "all";         // verify: check id or "all"
  std::string predicate;             // search predicate id
  int max_n = 8;
  int cap = 4096;
  int samples = 512;
  std::uint64_t seed = 1;
  std::string out;                   // empty = stdout
  std::string format = "json";       // json | text
};

struct RunResult {
  nlohmann::ordered_json json;
  std::string text;
  int exit_code = 0;  // 0 ok, 1 check failure
};

RunResult run_analyze(const RunConfig& cfg);
RunResult run_verify(const RunConfig& cfg);
RunResult run_search(const RunConfig& cfg);

// The groups a command operates on: explicit --group specs if any, else the
// zoo ("default" or a file with one spec per line, # comments allowed).
std::vector<GroupSpec> resolve_zoo(const RunConfig& cfg);

AnalysisOptions analysis_options(const RunConfig& cfg);
CheckOptions check_options(const RunConfig& cfg);

std::string render(const RunResult& result, const RunConfig& cfg);

}  // namespace engel
