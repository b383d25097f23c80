#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "reprules/dominance.hpp"
#include "reprules/errors.hpp"
#include "reprules/rar.hpp"

using namespace reprules;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> all_rows(const RelationalTable& t) {
  std::vector<std::size_t> v(t.rows());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("RAR returns the representative rules of the running example") {
  const auto ex = fixtures::mined_example();
  const auto n = normalize(ex.table);
  const auto result = rar(n);
  CHECK(sorted(result.representatives) == representative_oracle(n));
  CHECK(fixtures::rule_numbers(ex, result.representatives) ==
        std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 14});
  CHECK(result.counters.dominance_tests > 0);

  // measures share [0, 1], so the raw table is acceptable as well
  CHECK(sorted(rar(ex.table).representatives) == representative_oracle(ex.table));

  const auto printed = fixtures::printed_table();
  CHECK(sorted(rar(printed).representatives) == representative_oracle(printed));
  CHECK(sorted(rar(normalize(printed)).representatives) == representative_oracle(printed));
}

TEST_CASE("the first representative is the rule closest to the reference rule") {
  const auto ex = fixtures::mined_example();
  const auto trace = rar_trace(normalize(ex.table));
  REQUIRE_FALSE(trace.empty());
  CHECK(trace[0].row == ex.row_of[2]);
  CHECK(trace[0].source == CandidateSource::subspace);
  CHECK(trace[0].step == 1);
  const auto printed = fixtures::printed_table();
  CHECK(rar_trace(printed)[0].chosen_rule_id == 2);
}

TEST_CASE("trace bookkeeping") {
  const auto ex = fixtures::mined_example();
  const auto n = normalize(ex.table);
  const auto result = rar(n);
  REQUIRE(result.trace.size() == result.representatives.size());
  std::size_t eliminated = 0;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const auto& s = result.trace[i];
    CHECK(s.step == i + 1);
    CHECK(s.rr_size == i + 1);
    CHECK(s.row == result.representatives[i]);
    CHECK(s.chosen_rule_id == n.rule(s.row).id);
    if (i > 0) CHECK(s.degsim >= result.trace[i - 1].degsim);
    eliminated += s.eliminated;
  }
  CHECK(result.trace.back().candidates_remaining == 0);
  CHECK(result.representatives.size() + eliminated == n.rows());
  CHECK(rar(n, RarOptions{RarMode::definitional, false}).trace.empty());
}

TEST_CASE("undominated spaces of the skyline rules") {
  const auto ex = fixtures::mined_example();
  const auto& t = ex.table;
  const auto rows = all_rows(t);

  const auto s2 = undominated_space(t, ex.row_of[2], rows);
  REQUIRE(s2.subspaces.size() == 3);
  CHECK(s2.subspaces[0].empty());
  CHECK(s2.subspaces[1].empty());
  CHECK(fixtures::rule_numbers(ex, s2.subspaces[2]) == std::set<int>{5, 8});

  const auto s5 = undominated_space(t, ex.row_of[5], rows);
  CHECK(s5.subspaces[0].empty());
  CHECK(fixtures::rule_numbers(ex, s5.subspaces[1]) == std::set<int>{1, 2, 3, 12, 13, 14});
  CHECK(s5.subspaces[2].empty());
  CHECK(fixtures::rule_numbers(ex, s5.members()) == std::set<int>{1, 2, 3, 12, 13, 14});
}

TEST_CASE("partitioning candidates against a representative") {
  const auto ex = fixtures::mined_example();
  const auto& t = ex.table;
  const auto rows = all_rows(t);

  auto p = partition_subspace(t, ex.row_of[2], rows);
  CHECK(fixtures::rule_numbers(ex, p.discarded) == std::set<int>{9, 13});
  CHECK(p.to_incomp == icomp(t, ex.row_of[2]));
  CHECK(p.equivalent.empty());
  CHECK(fixtures::rule_numbers(ex, p.space.members()) == std::set<int>{5, 8});

  p = partition_subspace(t, ex.row_of[1], rows);
  CHECK(fixtures::rule_numbers(ex, p.equivalent) == std::set<int>{3});
  const auto total = p.discarded.size() + p.to_incomp.size() + p.equivalent.size() +
                     p.space.members().size();
  CHECK(total == t.rows() - 1);
}

TEST_CASE("literal pseudocode reading on the running example") {
  const auto ex = fixtures::mined_example();
  const auto result = rar(normalize(ex.table), RarOptions{RarMode::faithful_alg1, true});
  CHECK(fixtures::rule_numbers(ex, result.representatives) ==
        std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 14});
}

TEST_CASE("edge cases") {
  // one rule
  RelationalTable one({{1, Itemset{0}, Itemset{1}}}, {MeasureId::frequency}, {0.5});
  CHECK(rar(one).representatives == std::vector<std::size_t>{0});

  // no rules
  RelationalTable none({}, {MeasureId::frequency}, {});
  CHECK(rar(none).representatives.empty());

  // every rule equivalent: none is strictly dominated, all are kept
  std::vector<Rule> rules;
  std::vector<double> values;
  for (RuleId i = 1; i <= 6; ++i) {
    rules.push_back({i, Itemset{0}, Itemset{i}});
    values.insert(values.end(), {0.5, 0.5});
  }
  RelationalTable same(rules, {MeasureId::frequency, MeasureId::confidence}, values);
  CHECK(rar(same).representatives.size() == 6);
  CHECK(rar(same, RarOptions{RarMode::faithful_alg1, true}).representatives.size() <= 6);

  // heterogeneous ranges need normalization first
  RelationalTable mixed({{1, Itemset{0}, Itemset{1}}}, {MeasureId::confidence, MeasureId::zhang},
                        {0.5, -0.2});
  CHECK_THROWS_AS(rar(mixed), PreconditionError);
  CHECK_NOTHROW(rar(normalize(mixed)));
}

TEST_CASE("RAR is deterministic") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = fixtures::random_mined_instance(seed);
    const auto a = rar(inst.normalized), b = rar(inst.normalized);
    CHECK(a.representatives == b.representatives);
    CHECK(a.counters.dominance_tests == b.counters.dominance_tests);
  }
}

TEST_CASE("property: RAR equals the definition on tie-heavy tables") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = fixtures::random_level_table(rng, 1 + rng() % 40, 1 + rng() % 4, 2 + rng() % 3);
    const auto result = rar(t);
    CAPTURE(trial);
    CHECK(sorted(result.representatives) == representative_oracle(t));
    // representatives are never repeated
    auto reps = sorted(result.representatives);
    CHECK(std::adjacent_find(reps.begin(), reps.end()) == reps.end());
    // the literal reading terminates, never repeats a rule and keeps the skyline rules it
    // does not drop as equivalents
    auto faithful = sorted(rar(t, RarOptions{RarMode::faithful_alg1, false}).representatives);
    CHECK(std::adjacent_find(faithful.begin(), faithful.end()) == faithful.end());
    CHECK_FALSE(faithful.empty());
  }
}
