#include "reprules/table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reprules/errors.hpp"

namespace reprules {

namespace {
constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();
}

RelationalTable::RelationalTable(std::vector<Rule> rules, std::vector<MeasureId> measures,
                                 std::vector<double> values, bool normalized)
    : rules_(std::move(rules)),
      measures_(std::move(measures)),
      values_(std::move(values)),
      normalized_(normalized) {
  if (measures_.empty()) throw ParameterError("relational table needs at least one measure");
  if (values_.size() != rules_.size() * measures_.size())
    throw ParameterError("value matrix does not match rules x measures");
  for (double v : values_)
    if (!std::isfinite(v)) throw ParameterError("non-finite measure value");

  directions_.reserve(measures_.size());
  for (auto m : measures_) directions_.push_back(info(m).direction);

  const std::size_t k = measures_.size();
  col_min_.assign(k, std::numeric_limits<double>::infinity());
  col_max_.assign(k, -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < rules_.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) {
      col_min_[c] = std::min(col_min_[c], value(r, c));
      col_max_[c] = std::max(col_max_[c], value(r, c));
    }

  RuleId max_id = 0;
  for (const auto& r : rules_) max_id = std::max(max_id, r.id);
  if (!rules_.empty()) row_by_id_.assign(static_cast<std::size_t>(max_id) + 1, kNoRow);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto& slot = row_by_id_[rules_[i].id];
    if (slot != kNoRow) throw ParameterError("duplicate rule id " + std::to_string(rules_[i].id));
    slot = i;
  }
}

std::optional<std::size_t> RelationalTable::find_row(RuleId id) const {
  if (id >= row_by_id_.size() || row_by_id_[id] == kNoRow) return std::nullopt;
  return row_by_id_[id];
}

std::size_t RelationalTable::row_of(RuleId id) const {
  auto r = find_row(id);
  if (!r) throw DomainError("rule " + std::to_string(id) + " is not in the table");
  return *r;
}

std::vector<RuleId> RelationalTable::ids(std::span<const std::size_t> rows) const {
  std::vector<RuleId> out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(rules_.at(r).id);
  return out;
}

RelationalTable build_table(SupportCache& supports, std::vector<Rule> rules,
                            std::vector<MeasureId> measures) {
  if (rules.empty()) throw ParameterError("build_table: no rules");
  if (measures.empty()) throw ParameterError("build_table: no measures");
  std::vector<double> values;
  values.reserve(rules.size() * measures.size());
  std::vector<ClampEvent> clamps;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const auto counts = support_counts(supports, rules[r]);
    for (auto m : measures) {
      auto ev = evaluate_exact(counts, m);
      if (ev.clamped) clamps.push_back({r, m});
      values.push_back(ev.value.to_double());
    }
  }
  RelationalTable t(std::move(rules), std::move(measures), std::move(values));
  t.set_clamps(std::move(clamps));
  return t;
}

RelationalTable build_table(const TransactionDataset& ds, std::vector<Rule> rules,
                            std::vector<MeasureId> measures) {
  SupportCache cache(ds);
  return build_table(cache, std::move(rules), std::move(measures));
}

RelationalTable normalize(const RelationalTable& t) {
  if (t.normalized()) throw PreconditionError("table is already normalized");
  const std::size_t k = t.cols();
  std::vector<double> out(t.values().begin(), t.values().end());
  for (std::size_t c = 0; c < k; ++c) {
    const double lo = t.column_min(c), hi = t.column_max(c);
    const double span = hi - lo;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      double& v = out[r * k + c];
      v = span > 0 ? (v - lo) / span : 0.0;
    }
  }
  RelationalTable n(t.rules(), t.measures(), std::move(out), true);
  n.set_clamps(t.clamps());
  return n;
}

bool shares_one_domain(const RelationalTable& t) {
  const auto& first = info(t.measures().front());
  return std::all_of(t.measures().begin(), t.measures().end(), [&](MeasureId m) {
    return info(m).domain_lo == first.domain_lo && info(m).domain_hi == first.domain_hi;
  });
}

ReferenceRule reference_rule(const RelationalTable& t) {
  if (t.rows() == 0) throw PreconditionError("reference rule of an empty table");
  ReferenceRule ref;
  ref.values.reserve(t.cols());
  for (std::size_t c = 0; c < t.cols(); ++c)
    ref.values.push_back(t.directions()[c] == Preference::higher ? t.column_max(c)
                                                                 : t.column_min(c));
  return ref;
}

double deg_sim(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ParameterError("deg_sim: vectors differ in length");
  if (a.empty()) throw ParameterError("deg_sim: empty vectors");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

}  // namespace reprules
