#include "reprules/miner.hpp"

#include <algorithm>
#include <unordered_set>

#include "reprules/errors.hpp"

namespace reprules {

namespace {

struct Candidate {
  Itemset items;
  TidSet tids;
};

bool all_subsets_frequent(const std::vector<ItemId>& cand,
                          const std::unordered_set<Itemset, ItemsetHash>& prev) {
  // The two generating parents (drop last, drop second-to-last) are known
  // frequent; check the others.
  std::vector<ItemId> sub(cand.size() - 1);
  for (std::size_t skip = 0; skip + 2 < cand.size(); ++skip) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (i != skip) sub[j++] = cand[i];
    if (!prev.contains(Itemset::from_sorted(sub))) return false;
  }
  return true;
}

}  // namespace

std::vector<FrequentItemset> mine_frequent(const TransactionDataset& ds, const Rational& min_freq) {
  if (min_freq <= Rational(0) || min_freq > Rational(1))
    throw ParameterError("min_freq must lie in (0, 1], got " + min_freq.str());

  const auto n = static_cast<std::int64_t>(ds.transaction_count());
  const auto min_count = static_cast<std::size_t>(min_freq.ceil_mul(n));

  std::vector<FrequentItemset> out;
  std::vector<Candidate> level;
  for (ItemId id = 0; id < ds.item_count(); ++id) {
    const auto& t = ds.tids(id);
    if (t.count() >= min_count) level.push_back({Itemset{id}, t});
  }

  while (!level.empty()) {
    for (const auto& c : level) out.push_back({c.items, c.tids.count()});

    std::unordered_set<Itemset, ItemsetHash> known;
    known.reserve(level.size());
    for (const auto& c : level) known.insert(c.items);

    // Level is sorted lexicographically, so itemsets sharing a (k-1)-prefix
    // are contiguous.
    std::vector<Candidate> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto a = level[i].items.items();
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        const auto b = level[j].items.items();
        if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
        std::vector<ItemId> cand(a.begin(), a.end());
        cand.push_back(b.back());
        if (!all_subsets_frequent(cand, known)) continue;
        TidSet tids = level[i].tids & level[j].tids;
        if (tids.count() >= min_count)
          next.push_back({Itemset::from_sorted(std::move(cand)), std::move(tids)});
      }
    }
    level = std::move(next);
  }

  std::sort(out.begin(), out.end(),
            [](const FrequentItemset& x, const FrequentItemset& y) { return x.items < y.items; });
  return out;
}

std::vector<Rule> generate_rules(std::span<const FrequentItemset> frequent) {
  std::vector<const FrequentItemset*> order;
  order.reserve(frequent.size());
  for (const auto& f : frequent)
    if (f.items.size() >= 2) order.push_back(&f);
  std::sort(order.begin(), order.end(),
            [](const auto* x, const auto* y) { return x->items < y->items; });

  std::vector<Rule> rules;
  RuleId next_id = 1;
  for (const auto* f : order) {
    const std::size_t k = f->items.size();
    if (k >= 32) throw ParameterError("frequent itemset too large for rule enumeration");
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<ItemId> premise, conclusion;
      for (std::size_t i = 0; i < k; ++i)
        ((mask >> i) & 1U ? premise : conclusion).push_back(f->items[i]);
      rules.push_back(Rule{next_id++, Itemset::from_sorted(std::move(premise)),
                           Itemset::from_sorted(std::move(conclusion))});
    }
  }
  return rules;
}

SupportCache make_support_cache(const TransactionDataset& ds,
                                std::span<const FrequentItemset> frequent) {
  SupportCache cache(ds);
  for (const auto& f : frequent) cache.seed(f.items, f.support);
  return cache;
}

}  // namespace reprules
