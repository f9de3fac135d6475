#pragma once

#include <map>
#include <memory>
#include <string>

#include "engel/constructions.hpp"

namespace testutil {

// Groups are immutable; build each spec once per test process.
inline const engel::FiniteGroup& cached_group(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<engel::FiniteGroup>> cache;
  auto it = cache.find(spec);
  if (it == cache.end()) {
    it = cache
             .emplace(spec, std::make_unique<engel::FiniteGroup>(
                                engel::make_group(spec)))
             .first;
  }
  return *it->second;
}

inline engel::Element by_label(const engel::FiniteGroup& G,
                               const std::string& label) {
  for (engel::Element e = 0; e < G.order(); ++e)
    if (G.label(e) == label) return e;
  throw std::runtime_error("no element labeled " + label);
}

}  // namespace testutil
