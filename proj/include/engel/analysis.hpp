#pragma once

#include <memory>
#include <optional>

#include "engel/constructions.hpp"
#include "engel/engel_sets.hpp"
#include "engel/structure.hpp"

namespace engel {

struct AnalysisOptions {
  BuildOptions build{};
  int max_n = 8;
  int exhaustive_max = 256;
  int samples = 512;
  std::uint64_t seed = 1;
};

// One enumerable group together with everything the checks and reports need,
// computed once. The heavier rho computation is deferred until requested.
class GroupAnalysis {
 public:
  GroupAnalysis(const GroupSpec& spec, const AnalysisOptions& opts);

  const GroupSpec& spec() const { return spec_; }
  const AnalysisOptions& options() const { return opts_; }
  const FiniteGroup& group() const { return *G_; }
  const EngelReport& engel() const { return engel_; }
  const RadicalReport& radicals() const { return radicals_; }
  const SeriesResult& upper_central() const { return upper_; }
  const SeriesResult& lower_central() const { return lower_; }
  const SeriesResult& derived_series() const { return derived_; }
  const ConjugacyInfo& classes() const { return classes_; }

  const std::vector<Element>& hypercenter_elements() const {
    return upper_.terms.back().elements;
  }
  // zeta_k, clamped to the hypercenter once the series has stabilized.
  const std::vector<Element>& zeta(int k) const;

  std::optional<int> nilpotency_class() const;
  std::optional<int> derived_length() const;

  const std::vector<Element>& rho();      // computes on first use
  const std::vector<Element>& rho_bar();

 private:
  GroupSpec spec_;
  AnalysisOptions opts_;
  std::unique_ptr<FiniteGroup> G_;  // stable address for Subgroup parents
  EngelReport engel_;
  RadicalReport radicals_;
  SeriesResult upper_, lower_, derived_;
  ConjugacyInfo classes_;
  std::optional<std::pair<std::vector<Element>, std::vector<Element>>> rho_;
};

}  // namespace engel
