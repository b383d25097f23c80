#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "reprules/table.hpp"

namespace reprules {

// One ε per table column.
struct ThresholdVector {
  std::vector<double> epsilon;
};

// ε_m = worst value of m over rr (the minimum for higher-is-preferred).
ThresholdVector thresholds_from_rr(const RelationalTable& t, std::span<const std::size_t> rr);

// Rows meeting every threshold inclusively. Sorted.
std::vector<std::size_t> tb_rules(const RelationalTable& t, const ThresholdVector& eps);

// |tb| / |rr|
double gain(std::size_t tb_size, std::size_t rr_size);

struct GainSummary {
  double mean_of_gains = 0.0;     // average of per-dataset ratios
  double ratio_of_means = 0.0;    // mean |tb| / mean |rr|
};

// Each pair is (|tb|, |rr|) for one dataset.
GainSummary summarize_gains(std::span<const std::pair<std::size_t, std::size_t>> runs);

}  // namespace reprules
