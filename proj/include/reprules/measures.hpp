#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reprules/dataset.hpp"
#include "reprules/rational.hpp"
#include "reprules/rule.hpp"

namespace reprules {

enum class MeasureId { frequency, confidence, recall, pearl, loevinger, zhang };

enum class Preference { higher, lower };

struct MeasureInfo {
  MeasureId id;
  std::string_view name;
  std::string_view short_name;  // CLI spelling
  Preference direction;
  // Declared value range; -inf/+inf for open ends.
  double domain_lo;
  double domain_hi;
};

std::span<const MeasureInfo> measure_registry();
const MeasureInfo& info(MeasureId m);
std::string_view name(MeasureId m);

// Accepts either the full or the short name.
std::optional<MeasureId> parse_measure(std::string_view text);
// Comma-separated list; throws ParameterError naming the valid choices.
std::vector<MeasureId> parse_measure_list(std::string_view text);
std::string valid_measure_names();

struct SupportCounts {
  std::int64_t transactions = 0;  // |D|
  std::int64_t premise = 0;       // supp(X)
  std::int64_t conclusion = 0;    // supp(Y)
  std::int64_t joint = 0;         // supp(X ∪ Y)
};

struct Evaluation {
  Rational value;
  // True when the formula was undefined and a neutral value was substituted.
  bool clamped = false;
};

// Frequency   supp(XY)/|D|
// Confidence  supp(XY)/supp(X)
// Recall      supp(XY)/supp(Y)
// Pearl       P(X) * |conf - P(Y)|
// Loevinger   (conf - P(Y)) / (1 - P(Y)); 1 if conf = 1 else 0 when P(Y) = 1
// Zhang       (P(XY) - P(X)P(Y)) / max(P(XY)(1 - P(Y)), P(Y)(P(X) - P(XY))); 0 on a zero denominator
Evaluation evaluate_exact(const SupportCounts& s, MeasureId m);

SupportCounts support_counts(SupportCache& cache, const Rule& r);
double evaluate(const TransactionDataset& ds, const Rule& r, MeasureId m);

}  // namespace reprules
