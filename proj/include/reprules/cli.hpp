#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reprules/measures.hpp"
#include "reprules/rar.hpp"

namespace reprules::cli {

enum ExitCode : int { kOk = 0, kInvariant = 1, kUsage = 2, kIo = 3 };

enum class Mode { rar, skyline, oracle, tb, all };

struct RunConfig {
  std::string input;
  std::string min_freq = "0.1";
  std::vector<MeasureId> measures;  // empty: defaults (or the CSV's columns)
  Mode mode = Mode::all;
  std::string out;         // CSV destination; empty = stdout for mine, none for select
  std::string report;      // JSON report; empty = stdout
  std::string trace;       // RAR trace JSON lines
  std::string thresholds;  // JSON object measure -> epsilon
  bool faithful_alg1 = false;
  bool timings = false;
};

struct SynthArgs {
  std::size_t items = 20;
  std::size_t transactions = 500;
  double density = 0.3;
  std::uint64_t seed = 7;
  std::string out;
};

int cmd_mine(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_select(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; maps exceptions to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reprules::cli
