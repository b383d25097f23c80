#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reprules/measures.hpp"
#include "reprules/rule.hpp"
#include "reprules/table.hpp"

namespace reprules {

// Instrumentation for comparing selection strategies.
struct Counters {
  std::uint64_t dominance_tests = 0;
};

enum class ValueDominance { neither, dominates, strictly_dominates };

ValueDominance value_dominates(double x, double y, MeasureId m);
ValueDominance value_dominates(double x, double y, Preference direction);

enum class DominanceOutcome { strictly_dominates, strictly_dominated, equivalent, incomparable };

const char* to_string(DominanceOutcome o);

// Outcome of a versus b.
DominanceOutcome compare_vectors(std::span<const double> a, std::span<const double> b,
                                 std::span<const Preference> directions);
DominanceOutcome compare_rows(const RelationalTable& t, std::size_t a, std::size_t b,
                              Counters* counters = nullptr);
// Throws DomainError for ids outside the table.
DominanceOutcome compare_rules(const RelationalTable& t, RuleId a, RuleId b);

// a ≻ b
inline bool strictly_dominates(const RelationalTable& t, std::size_t a, std::size_t b,
                               Counters* counters = nullptr) {
  return compare_rows(t, a, b, counters) == DominanceOutcome::strictly_dominates;
}

// (X ⊆ X' and Y ⊆ Y') or (X' ⊆ X and Y' ⊆ Y)
bool comparable(const Rule& a, const Rule& b);

// Rows no other row strictly dominates, by all-pairs comparison. Sorted.
std::vector<std::size_t> skyline_naive(const RelationalTable& t, Counters* counters = nullptr);

// Rows strictly dominated by `row` and not comparable with it. Sorted.
std::vector<std::size_t> icomp(const RelationalTable& t, std::size_t row);

// Rows not strictly dominated by any comparable skyline row. Sorted.
// Ground truth for the RAR implementation.
std::vector<std::size_t> representative_oracle(const RelationalTable& t,
                                               Counters* counters = nullptr);

}  // namespace reprules
