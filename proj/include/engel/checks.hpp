#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engel/analysis.hpp"
#include "engel/gupta_levin.hpp"

namespace engel {

enum class Outcome { pass, fail, skipped };

std::string outcome_name(Outcome o);

struct CheckStats {
  long long examined = 0;  // elements/pairs/tuples actually tested
  bool sampled = false;
  std::uint64_t seed = 0;
  std::string note;
};

struct CheckResult {
  std::string id;
  std::string group_name;
  Outcome outcome = Outcome::skipped;
  std::vector<std::string> witness;  // element labels, present on fail/found
  std::string detail;                // failure description or skip reason
  CheckStats stats;
};

struct CheckOptions {
  int exhaustive_max = 256;  // exhaustive tuple quantification up to this order
  int samples = 512;         // seeded samples above it
  std::uint64_t seed = 1;
  int max_n = 8;
};

// Catalog of executable checks, one per in-scope structure theorem. Check
// ids, in fixed catalog order.
const std::vector<std::string>& check_catalog();
bool check_exists(const std::string& id);
// gupta_levin_6engel runs on black-box groups; heineken_identity runs on
// both; everything else needs an enumerable group.
bool check_supports_blackbox(const std::string& id);
bool check_supports_enumerable(const std::string& id);

CheckResult run_check(const std::string& id, GroupAnalysis& A,
                      const CheckOptions& opts);
CheckResult run_check(const std::string& id, const GuptaLevinGroup& M,
                      const CheckOptions& opts);

// Bounded counterexample search. predicate is one of:
//   macdonald_r3    — an element a with a in R_3 but a^-1 not in R_3
//   macdonald_rn_ln — an element a with a in R_n, a not in L_n, a^-1 not in
//                     L_n for some n
// Scans the zoo in order and returns the first witness; absence is not a
// refutation, the search is bounded.
std::optional<CheckResult> search_witness(const std::string& predicate,
                                          const std::vector<GroupSpec>& zoo,
                                          const AnalysisOptions& opts);

std::vector<GroupSpec> default_zoo();         // enumerable groups only
std::vector<GroupSpec> default_zoo_full();    // plus the black-box gl(p=2,k=3)
std::vector<GroupSpec> default_search_zoo();  // constructed 2-groups

}  // namespace engel
