#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reprules/dataset.hpp"
#include "reprules/table.hpp"

namespace fixtures {

// The ten transactions t1..t10 of the running example, one per line.
inline constexpr std::string_view kRunningBasket =
    "c d\n"
    "a\n"
    "a d\n"
    "c\n"
    "b d\n"
    "a d\n"
    "c\n"
    "d\n"
    "b c d\n"
    "b c\n";

struct PrintedRule {
  int number;  // r1 .. r14
  std::string_view premise;
  std::string_view conclusion;
  double freq, conf, pearl;  // as printed, two decimals
};

extern const std::array<PrintedRule, 14> kPrinted;

reprules::TransactionDataset running_dataset();

// Printed values, rule id = rule number, items a..d -> ids 0..3.
reprules::RelationalTable printed_table();

// Mined from the basket at min_freq 0.10 with exact freq, conf, pearl.
struct MinedExample {
  reprules::TransactionDataset ds;
  reprules::RelationalTable table;
  std::array<std::size_t, 15> row_of;  // rule number -> row (index 0 unused)
};
MinedExample mined_example();

// Rule numbers r1..r14 of the given rows, matched by premise/conclusion labels.
std::set<int> rule_numbers(const MinedExample& ex, const std::vector<std::size_t>& rows);
std::set<int> rule_numbers_printed(const reprules::RelationalTable& t,
                                    const std::vector<std::size_t>& rows);

// A small mined instance: synthetic basket, <= max_rules rules, 2..4 measures,
// min-max normalized. Returns std::nullopt-equivalent (0 rows) rarely.
struct RandomInstance {
  std::uint64_t seed;
  reprules::RelationalTable raw;
  reprules::RelationalTable normalized;
};
RandomInstance random_mined_instance(std::uint64_t seed, std::size_t max_rules = 100);

// Rules over a small item universe with values drawn from a few discrete
// levels, so ties and equivalent rules are common.
reprules::RelationalTable random_level_table(std::mt19937_64& rng, std::size_t rules,
                                             std::size_t measures, int levels);

}  // namespace fixtures
