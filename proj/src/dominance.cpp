#include "reprules/dominance.hpp"

#include "reprules/errors.hpp"

namespace reprules {

ValueDominance value_dominates(double x, double y, Preference direction) {
  const bool better = direction == Preference::higher ? x > y : x < y;
  if (better) return ValueDominance::strictly_dominates;
  if (x == y) return ValueDominance::dominates;
  return ValueDominance::neither;
}

ValueDominance value_dominates(double x, double y, MeasureId m) {
  return value_dominates(x, y, info(m).direction);
}

const char* to_string(DominanceOutcome o) {
  switch (o) {
    case DominanceOutcome::strictly_dominates: return "strictly_dominates";
    case DominanceOutcome::strictly_dominated: return "strictly_dominated";
    case DominanceOutcome::equivalent: return "equivalent";
    case DominanceOutcome::incomparable: return "incomparable_by_dominance";
  }
  return "?";
}

DominanceOutcome compare_vectors(std::span<const double> a, std::span<const double> b,
                                 std::span<const Preference> directions) {
  bool a_better = false, b_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i], y = b[i];
    if (x == y) continue;
    const bool x_wins = (directions[i] == Preference::higher) == (x > y);
    (x_wins ? a_better : b_better) = true;
    if (a_better && b_better) return DominanceOutcome::incomparable;
  }
  if (a_better) return DominanceOutcome::strictly_dominates;
  if (b_better) return DominanceOutcome::strictly_dominated;
  return DominanceOutcome::equivalent;
}

DominanceOutcome compare_rows(const RelationalTable& t, std::size_t a, std::size_t b,
                              Counters* counters) {
  if (counters) ++counters->dominance_tests;
  return compare_vectors(t.row(a), t.row(b), t.directions());
}

DominanceOutcome compare_rules(const RelationalTable& t, RuleId a, RuleId b) {
  return compare_rows(t, t.row_of(a), t.row_of(b));
}

bool comparable(const Rule& a, const Rule& b) {
  return (a.premise.is_subset_of(b.premise) && a.conclusion.is_subset_of(b.conclusion)) ||
         (b.premise.is_subset_of(a.premise) && b.conclusion.is_subset_of(a.conclusion));
}

std::vector<std::size_t> skyline_naive(const RelationalTable& t, Counters* counters) {
  std::vector<std::size_t> sky;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    bool dominated = false;
    for (std::size_t o = 0; o < t.rows() && !dominated; ++o)
      dominated = o != r && strictly_dominates(t, o, r, counters);
    if (!dominated) sky.push_back(r);
  }
  return sky;
}

std::vector<std::size_t> icomp(const RelationalTable& t, std::size_t row) {
  if (row >= t.rows()) throw DomainError("icomp: row out of range");
  std::vector<std::size_t> out;
  for (std::size_t o = 0; o < t.rows(); ++o)
    if (strictly_dominates(t, row, o) && !comparable(t.rule(row), t.rule(o))) out.push_back(o);
  return out;
}

std::vector<std::size_t> representative_oracle(const RelationalTable& t, Counters* counters) {
  const auto sky = skyline_naive(t, counters);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    bool eliminated = false;
    for (std::size_t s : sky) {
      if (s == r) continue;
      if (comparable(t.rule(s), t.rule(r)) && strictly_dominates(t, s, r, counters)) {
        eliminated = true;
        break;
      }
    }
    if (!eliminated) out.push_back(r);
  }
  return out;
}

}  // namespace reprules
