#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "reprules/dataset.hpp"
#include "reprules/rar.hpp"
#include "reprules/rule.hpp"
#include "reprules/table.hpp"

namespace reprules {

// Shortest decimal text that reads back to the same double.
std::string format_value(double v);

// Item labels indexed by id.
std::vector<std::string> item_labels(const TransactionDataset& ds);

// `id,premise,conclusion`, items space-separated inside a field.
void write_rules_csv(std::ostream& out, std::span<const Rule> rules,
                     std::span<const std::string> labels);

// `id,premise,conclusion,<measure short names...>` with round-trip exact
// values. The second overload writes only `rows`, in that order.
void write_table_csv(std::ostream& out, const RelationalTable& t,
                     std::span<const std::string> labels);
void write_table_csv(std::ostream& out, const RelationalTable& t,
                     std::span<const std::string> labels, std::span<const std::size_t> rows);

struct LoadedTable {
  RelationalTable table;
  std::vector<std::string> labels;
};

// Reads what write_table_csv wrote. Items are interned in first-appearance
// order. Throws InputError on malformed content.
LoadedTable read_table_csv(std::istream& in);

// One JSON object per line:
// step, chosen_rule_id, degsim, rr_size, incomp_size, candidates_remaining, eliminated
void write_trace_jsonl(std::ostream& out, std::span<const TraceStep> trace);

}  // namespace reprules
