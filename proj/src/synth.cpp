#include "reprules/synth.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "reprules/errors.hpp"

namespace reprules {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

SynthBasket synthesize(const SynthConfig& config) {
  if (config.items == 0) throw ParameterError("synth: need at least one item");
  if (!(config.density >= 0.0 && config.density <= 1.0))
    throw ParameterError("synth: density must lie in [0, 1]");
  const std::size_t profiles = std::max<std::size_t>(1, config.profiles);

  std::mt19937_64 rng(config.seed);
  // weight in [0, 2): mean 1, so the expected density is preserved.
  std::vector<std::vector<double>> weight(profiles, std::vector<double>(config.items));
  for (auto& p : weight)
    for (auto& w : p) w = 2.0 * unit(rng);

  SynthBasket out;
  for (std::size_t t = 0; t < config.transactions; ++t) {
    const auto& w = weight[rng() % profiles];
    std::vector<std::string> row;
    for (std::size_t i = 0; i < config.items; ++i)
      if (unit(rng) < std::min(1.0, config.density * w[i])) row.push_back("i" + std::to_string(i));
    if (row.empty())
      ++out.suppressed_empty;
    else
      out.rows.push_back(std::move(row));
  }
  return out;
}

void write_basket(std::ostream& out, const SynthBasket& basket) {
  for (const auto& row : basket.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

}  // namespace reprules
