#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reprules/dataset.hpp"
#include "reprules/rational.hpp"
#include "reprules/rule.hpp"

namespace reprules {

struct FrequentItemset {
  Itemset items;
  std::uint64_t support = 0;

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

// Level-wise Apriori. Returns every itemset x with support(x)/|D| >= min_freq,
// ordered lexicographically by item id. min_freq must lie in (0, 1].
std::vector<FrequentItemset> mine_frequent(const TransactionDataset& ds, const Rational& min_freq);

// Every split X -> Y of each frequent itemset of size >= 2. Itemsets are
// visited in lexicographic order and, within one itemset of size n, premises
// follow the bit mask 1 .. 2^n - 2 (bit i selects the i-th smallest item).
// Ids start at 1.
std::vector<Rule> generate_rules(std::span<const FrequentItemset> frequent);

// Memo seeded with every mined support, for measure evaluation.
SupportCache make_support_cache(const TransactionDataset& ds,
                                std::span<const FrequentItemset> frequent);

}  // namespace reprules
