#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "reprules/dataset.hpp"
#include "reprules/measures.hpp"
#include "reprules/rule.hpp"

namespace reprules {

// A measure value that had to be substituted (see Evaluation::clamped).
struct ClampEvent {
  std::size_t row = 0;
  MeasureId measure{};
};

// Ω = (R, M): one row per rule, one column per measure, row-major values.
// Immutable once built.
class RelationalTable {
 public:
  RelationalTable(std::vector<Rule> rules, std::vector<MeasureId> measures,
                  std::vector<double> values, bool normalized = false);

  std::size_t rows() const { return rules_.size(); }
  std::size_t cols() const { return measures_.size(); }

  double value(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols(), cols()};
  }
  std::span<const double> values() const { return values_; }

  const Rule& rule(std::size_t row) const { return rules_[row]; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<MeasureId>& measures() const { return measures_; }
  std::span<const Preference> directions() const { return directions_; }

  bool normalized() const { return normalized_; }
  // Active-domain bounds per column.
  double column_min(std::size_t col) const { return col_min_[col]; }
  double column_max(std::size_t col) const { return col_max_[col]; }

  std::optional<std::size_t> find_row(RuleId id) const;
  // Throws DomainError when the id is absent.
  std::size_t row_of(RuleId id) const;

  std::vector<RuleId> ids(std::span<const std::size_t> rows) const;

  const std::vector<ClampEvent>& clamps() const { return clamps_; }
  void set_clamps(std::vector<ClampEvent> c) { clamps_ = std::move(c); }

 private:
  std::vector<Rule> rules_;
  std::vector<MeasureId> measures_;
  std::vector<Preference> directions_;
  std::vector<double> values_;
  std::vector<double> col_min_, col_max_;
  std::vector<std::size_t> row_by_id_;  // dense lookup, SIZE_MAX for gaps
  bool normalized_ = false;
  std::vector<ClampEvent> clamps_;
};

RelationalTable build_table(SupportCache& supports, std::vector<Rule> rules,
                            std::vector<MeasureId> measures);
RelationalTable build_table(const TransactionDataset& ds, std::vector<Rule> rules,
                            std::vector<MeasureId> measures);

// Per-column min-max rescaling onto [0, 1]; constant columns become 0.
RelationalTable normalize(const RelationalTable& t);

// True when every measure of t declares the same value range, so degrees of
// similarity are comparable without rescaling.
bool shares_one_domain(const RelationalTable& t);

struct ReferenceRule {
  std::vector<double> values;
};

// Best value of each column's active domain (maximum for higher-is-preferred).
ReferenceRule reference_rule(const RelationalTable& t);

// Mean absolute difference of two equal-length vectors.
double deg_sim(std::span<const double> a, std::span<const double> b);

}  // namespace reprules
