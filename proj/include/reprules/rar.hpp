#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "reprules/dominance.hpp"
#include "reprules/table.hpp"

namespace reprules {

enum class RarMode {
  // Only undominated representatives purge Incomp; rules equivalent to a
  // selected representative stay candidates. Output equals
  // representative_oracle.
  definitional,
  // The published pseudocode read literally: every selected rule purges
  // Incomp and equivalents of a subspace owner are dropped.
  faithful_alg1,
};

struct RarOptions {
  RarMode mode = RarMode::definitional;
  bool record_trace = true;
};

// The k per-measure sets of rules not strictly dominated by `owner` that beat
// it on measure i. A rule may appear under several measures.
struct UndominatedSpace {
  std::size_t owner = 0;
  std::vector<std::vector<std::size_t>> subspaces;

  // Deduplicated union, sorted.
  std::vector<std::size_t> members() const;
};

UndominatedSpace undominated_space(const RelationalTable& t, std::size_t owner,
                                   std::span<const std::size_t> candidates,
                                   Counters* counters = nullptr);

struct Partition {
  std::vector<std::size_t> discarded;   // dominated by the owner and comparable
  std::vector<std::size_t> to_incomp;   // dominated by the owner, not comparable
  std::vector<std::size_t> equivalent;  // identical measure vector
  UndominatedSpace space;               // everything else
};

// Splits candidates against a freshly selected representative. The owner
// itself, if present, is ignored.
Partition partition_subspace(const RelationalTable& t, std::size_t owner,
                             std::span<const std::size_t> candidates,
                             Counters* counters = nullptr);

enum class CandidateSource { subspace, incomp, retained };

struct TraceStep {
  std::size_t step = 0;  // 1-based
  RuleId chosen_rule_id = 0;
  std::size_t row = 0;
  double degsim = 0.0;
  CandidateSource source = CandidateSource::subspace;
  std::size_t rr_size = 0;
  std::size_t incomp_size = 0;
  std::size_t candidates_remaining = 0;
  std::size_t eliminated = 0;
};

struct RarResult {
  std::vector<std::size_t> representatives;  // discovery order
  std::vector<TraceStep> trace;
  Counters counters;
};

// Requires a normalized table, or one whose measures all share a declared
// domain; throws PreconditionError otherwise.
RarResult rar(const RelationalTable& t, const RarOptions& options = {});

std::vector<TraceStep> rar_trace(const RelationalTable& t, RarMode mode = RarMode::definitional);

}  // namespace reprules
