#include "fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "reprules/measures.hpp"
#include "reprules/miner.hpp"
#include "reprules/synth.hpp"

namespace fixtures {

using namespace reprules;

const std::array<PrintedRule, 14> kPrinted{{
    {1, "a", "d", 0.20, 0.66, 0.02},
    {2, "b", "c", 0.20, 0.66, 0.05},
    {3, "b", "d", 0.20, 0.66, 0.02},
    {4, "c", "b", 0.20, 0.40, 0.05},
    {5, "c", "d", 0.20, 0.40, 0.10},
    {6, "d", "a", 0.20, 0.33, 0.02},
    {7, "d", "b", 0.20, 0.33, 0.01},
    {8, "d", "c", 0.20, 0.33, 0.10},
    {9, "b", "cd", 0.10, 0.33, 0.03},
    {10, "c", "bd", 0.10, 0.20, 0.00},
    {11, "d", "bc", 0.10, 0.16, 0.02},
    {12, "bc", "d", 0.10, 0.50, 0.02},
    {13, "bd", "c", 0.10, 0.50, 0.00},
    {14, "cd", "b", 0.10, 0.50, 0.04},
}};

namespace {

Itemset letters(std::string_view s) {
  std::vector<ItemId> ids;
  for (char c : s) ids.push_back(static_cast<ItemId>(c - 'a'));
  return Itemset(std::move(ids));
}

std::vector<std::string> sorted_labels(const TransactionDataset& ds, const Itemset& s) {
  std::vector<std::string> out;
  for (auto id : s) out.push_back(ds.item(id).label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> chars(std::string_view s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

}  // namespace

TransactionDataset running_dataset() {
  std::istringstream in{std::string(kRunningBasket)};
  return load_basket(in);
}

RelationalTable printed_table() {
  std::vector<Rule> rules;
  std::vector<double> values;
  for (const auto& p : kPrinted) {
    rules.push_back(Rule{static_cast<RuleId>(p.number), letters(p.premise), letters(p.conclusion)});
    values.insert(values.end(), {p.freq, p.conf, p.pearl});
  }
  return RelationalTable(std::move(rules),
                         {MeasureId::frequency, MeasureId::confidence, MeasureId::pearl},
                         std::move(values));
}

MinedExample mined_example() {
  auto ds = running_dataset();
  auto frequent = mine_frequent(ds, Rational::parse("0.10"));
  auto cache = make_support_cache(ds, frequent);
  auto table = build_table(cache, generate_rules(frequent),
                           {MeasureId::frequency, MeasureId::confidence, MeasureId::pearl});
  std::array<std::size_t, 15> row_of{};
  row_of.fill(SIZE_MAX);
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const auto prem = sorted_labels(ds, table.rule(r).premise);
    const auto conc = sorted_labels(ds, table.rule(r).conclusion);
    for (const auto& p : kPrinted)
      if (prem == chars(p.premise) && conc == chars(p.conclusion)) row_of[p.number] = r;
  }
  return MinedExample{std::move(ds), std::move(table), row_of};
}

std::set<int> rule_numbers(const MinedExample& ex, const std::vector<std::size_t>& rows) {
  std::set<int> out;
  for (auto r : rows)
    for (int n = 1; n <= 14; ++n)
      if (ex.row_of[n] == r) out.insert(n);
  return out;
}

std::set<int> rule_numbers_printed(const RelationalTable& t, const std::vector<std::size_t>& rows) {
  std::set<int> out;
  for (auto r : rows) out.insert(static_cast<int>(t.rule(r).id));
  return out;
}

RandomInstance random_mined_instance(std::uint64_t seed, std::size_t max_rules) {
  std::mt19937_64 rng(seed);
  SynthConfig cfg;
  cfg.seed = seed;
  cfg.items = 5 + rng() % 4;
  cfg.transactions = 20 + rng() % 60;
  cfg.density = 0.25 + 0.1 * static_cast<double>(rng() % 4);
  auto basket = synthesize(cfg);
  if (basket.rows.empty()) basket.rows.push_back({"i0", "i1"});
  auto ds = TransactionDataset::from_tokens(basket.rows);

  const Rational min_freq(1 + static_cast<std::int64_t>(rng() % 3), 10);
  auto frequent = mine_frequent(ds, min_freq);
  auto rules = generate_rules(frequent);
  if (rules.empty()) {
    // Fall back to the lowest threshold so the instance is never empty.
    frequent = mine_frequent(ds, Rational(1, static_cast<std::int64_t>(ds.transaction_count())));
    rules = generate_rules(frequent);
  }
  std::shuffle(rules.begin(), rules.end(), rng);
  if (rules.size() > max_rules) rules.resize(max_rules);

  std::vector<MeasureId> all;
  for (const auto& m : measure_registry()) all.push_back(m.id);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(2 + rng() % 3);

  auto cache = make_support_cache(ds, frequent);
  auto raw = build_table(cache, std::move(rules), all);
  auto norm = normalize(raw);
  return RandomInstance{seed, std::move(raw), std::move(norm)};
}

RelationalTable random_level_table(std::mt19937_64& rng, std::size_t n, std::size_t k,
                                   int levels) {
  const ItemId universe = 5;
  std::vector<Rule> rules;
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ItemId> prem, conc;
    for (ItemId it = 0; it < universe; ++it) {
      auto roll = rng() % 4;
      if (roll == 0) prem.push_back(it);
      else if (roll == 1) conc.push_back(it);
    }
    if (prem.empty()) prem.push_back(static_cast<ItemId>(rng() % universe));
    std::erase_if(conc, [&](ItemId it) {
      return std::find(prem.begin(), prem.end(), it) != prem.end();
    });
    for (ItemId it = 0; it < universe && conc.empty(); ++it)
      if (std::find(prem.begin(), prem.end(), it) == prem.end()) conc.push_back(it);
    if (conc.empty()) {  // premise took the whole universe
      conc.push_back(prem.back());
      prem.pop_back();
    }
    rules.push_back(Rule{static_cast<RuleId>(i + 1), Itemset(prem), Itemset(conc)});
    for (std::size_t c = 0; c < k; ++c)
      values.push_back(static_cast<double>(rng() % static_cast<std::uint64_t>(levels)) /
                       static_cast<double>(levels - 1));
  }
  std::vector<MeasureId> ms{MeasureId::frequency, MeasureId::confidence, MeasureId::recall,
                            MeasureId::pearl};
  ms.resize(k);
  return RelationalTable(std::move(rules), std::move(ms), std::move(values));
}

}  // namespace fixtures
