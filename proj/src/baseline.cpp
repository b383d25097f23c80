#include "reprules/baseline.hpp"

#include "reprules/dominance.hpp"
#include "reprules/errors.hpp"

namespace reprules {

ThresholdVector thresholds_from_rr(const RelationalTable& t, std::span<const std::size_t> rr) {
  if (rr.empty()) throw ParameterError("thresholds_from_rr: empty representative set");
  ThresholdVector eps;
  eps.epsilon.reserve(t.cols());
  for (std::size_t c = 0; c < t.cols(); ++c) {
    double worst = t.value(rr.front(), c);
    for (std::size_t r : rr) {
      if (r >= t.rows()) throw DomainError("thresholds_from_rr: row out of range");
      if (value_dominates(worst, t.value(r, c), t.directions()[c]) ==
          ValueDominance::strictly_dominates)
        worst = t.value(r, c);
    }
    eps.epsilon.push_back(worst);
  }
  return eps;
}

std::vector<std::size_t> tb_rules(const RelationalTable& t, const ThresholdVector& eps) {
  if (eps.epsilon.size() != t.cols())
    throw ParameterError("tb_rules: threshold count does not match measures");
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    bool keep = true;
    for (std::size_t c = 0; c < t.cols() && keep; ++c)
      keep = value_dominates(t.value(r, c), eps.epsilon[c], t.directions()[c]) !=
             ValueDominance::neither;
    if (keep) out.push_back(r);
  }
  return out;
}

double gain(std::size_t tb_size, std::size_t rr_size) {
  if (rr_size == 0) throw ParameterError("gain: empty representative set");
  return static_cast<double>(tb_size) / static_cast<double>(rr_size);
}

GainSummary summarize_gains(std::span<const std::pair<std::size_t, std::size_t>> runs) {
  if (runs.empty()) throw ParameterError("summarize_gains: no runs");
  GainSummary s;
  double tb_total = 0, rr_total = 0;
  for (auto [tb, rr] : runs) {
    s.mean_of_gains += gain(tb, rr);
    tb_total += static_cast<double>(tb);
    rr_total += static_cast<double>(rr);
  }
  s.mean_of_gains /= static_cast<double>(runs.size());
  s.ratio_of_means = tb_total / rr_total;
  return s;
}

}  // namespace reprules
