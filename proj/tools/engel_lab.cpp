// engel-lab: build finite groups, compute their Engel structure, and run the
// verification catalog.
//
// Exit codes: 0 ok, 1 check failure, 2 usage error, 3 capacity exceeded,
// 4 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "engel/report.hpp"

namespace {

void add_common_options(CLI::App* cmd, engel::RunConfig& cfg) {
  cmd->add_option("-g,--group", cfg.groups,
                  "group spec (repeatable); overrides --zoo");
  cmd->add_option("--zoo", cfg.zoo, "'default' or a file with one spec per line");
  cmd->add_option("--max-n", cfg.max_n, "Engel level sets go up to L_n/R_n");
  cmd->add_option("--cap", cfg.cap, "maximum enumerable group order");
  cmd->add_option("--samples", cfg.samples, "samples for checks above order 256");
  cmd->add_option("--seed", cfg.seed, "seed for all sampled computations");
  cmd->add_option("-o,--out", cfg.out, "output file (default stdout)");
  cmd->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void emit(const engel::RunResult& result, const engel::RunConfig& cfg) {
  std::string body = engel::render(result, cfg);
  if (cfg.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw engel::usage_error("cannot write to '" + cfg.out + "'");
    out << body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group Engel structure laboratory"};
  app.require_subcommand(1);

  engel::RunConfig cfg;
  if (const char* cap_env = std::getenv("ENGEL_LAB_CAP")) {
    int cap = std::atoi(cap_env);
    if (cap > 0) cfg.cap = cap;
  }

  CLI::App* analyze = app.add_subcommand(
      "analyze", "structure and Engel report for the given groups");
  add_common_options(analyze, cfg);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the theorem-check catalog over groups or the zoo");
  add_common_options(verify, cfg);
  verify->add_option("--suite", cfg.suite, "check id or 'all'");

  CLI::App* search = app.add_subcommand(
      "search", "bounded counterexample search over constructed 2-groups");
  add_common_options(search, cfg);
  search
      ->add_option("--predicate", cfg.predicate,
                   "macdonald_r3 or macdonald_rn_ln")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    engel::RunResult result;
    if (analyze->parsed()) {
      cfg.command = "analyze";
      if (cfg.groups.empty() && cfg.zoo == "default") {
        std::cerr << "analyze: pass at least one --group or a --zoo file\n";
        return 2;
      }
      result = engel::run_analyze(cfg);
    } else if (verify->parsed()) {
      cfg.command = "verify";
      result = engel::run_verify(cfg);
    } else {
      cfg.command = "search";
      result = engel::run_search(cfg);
    }
    emit(result, cfg);
    return result.exit_code;
  } catch (const engel::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const engel::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const engel::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const engel::invariant_violation& e) {
    std::cerr << "internal invariant violation (engine bug): " << e.what() << "\n";
    return 4;
  }
}
