#pragma once

#include <cstdint>

#include "reprules/itemset.hpp"

namespace reprules {

using RuleId = std::uint32_t;

// X -> Y with X, Y non-empty and disjoint.
struct Rule {
  RuleId id = 0;
  Itemset premise;
  Itemset conclusion;

  Itemset items() const { return premise.unite(conclusion); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

}  // namespace reprules
