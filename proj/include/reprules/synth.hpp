#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace reprules {

struct SynthConfig {
  std::size_t items = 20;
  std::size_t transactions = 500;
  double density = 0.3;  // expected fraction of items per transaction
  std::uint64_t seed = 7;
  std::size_t profiles = 4;  // latent customer types; induces correlations
};

struct SynthBasket {
  std::vector<std::vector<std::string>> rows;  // empty transactions already removed
  std::size_t suppressed_empty = 0;
};

// Deterministic for a given config on every platform: uses mt19937_64 and
// its raw output only.
SynthBasket synthesize(const SynthConfig& config);

void write_basket(std::ostream& out, const SynthBasket& basket);

}  // namespace reprules
