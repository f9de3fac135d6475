#include "engel/analysis.hpp"

namespace engel {

GroupAnalysis::GroupAnalysis(const GroupSpec& spec, const AnalysisOptions& opts)
    : spec_(spec), opts_(opts) {
  BuildOptions build = opts.build;
  build.exhaustive_max = opts.exhaustive_max;
  build.samples = opts.samples;
  build.seed = opts.seed;
  G_ = std::make_unique<FiniteGroup>(make_group(spec, build));
  engel_ = engel_level_sets(*G_, opts.max_n, /*with_rho=*/false);
  radicals_ = engel::radicals(*G_);
  upper_ = series(*G_, SeriesKind::upper_central);
  lower_ = series(*G_, SeriesKind::lower_central);
  derived_ = series(*G_, SeriesKind::derived);
  classes_ = conjugacy_classes(*G_);
}

const std::vector<Element>& GroupAnalysis::zeta(int k) const {
  int top = upper_.length;  // hypercenter index
  if (k > top) k = top;
  return upper_.terms[k].elements;
}

std::optional<int> GroupAnalysis::nilpotency_class() const {
  if (!lower_.terms.back().is_trivial()) return std::nullopt;
  return lower_.length;
}

std::optional<int> GroupAnalysis::derived_length() const {
  if (!derived_.terms.back().is_trivial()) return std::nullopt;
  return derived_.length;
}

const std::vector<Element>& GroupAnalysis::rho() {
  if (!rho_) rho_ = rho_sets(*G_);
  return rho_->first;
}

const std::vector<Element>& GroupAnalysis::rho_bar() {
  if (!rho_) rho_ = rho_sets(*G_);
  return rho_->second;
}

}  // namespace engel
