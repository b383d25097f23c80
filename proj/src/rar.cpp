#include "reprules/rar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "reprules/errors.hpp"

namespace reprules {

std::vector<std::size_t> UndominatedSpace::members() const {
  std::vector<std::size_t> out;
  for (const auto& s : subspaces) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Places a rule the owner does not strictly dominate under every measure
// where it beats the owner. Returns false when it beats it nowhere.
bool place(const RelationalTable& t, std::size_t owner, std::size_t row, UndominatedSpace& space) {
  bool placed = false;
  const auto o = t.row(owner), r = t.row(row);
  for (std::size_t i = 0; i < t.cols(); ++i) {
    if (value_dominates(r[i], o[i], t.directions()[i]) == ValueDominance::strictly_dominates) {
      space.subspaces[i].push_back(row);
      placed = true;
    }
  }
  return placed;
}

}  // namespace

UndominatedSpace undominated_space(const RelationalTable& t, std::size_t owner,
                                   std::span<const std::size_t> candidates, Counters* counters) {
  UndominatedSpace space{owner, std::vector<std::vector<std::size_t>>(t.cols())};
  for (std::size_t row : candidates) {
    if (row == owner || strictly_dominates(t, owner, row, counters)) continue;
    place(t, owner, row, space);
  }
  return space;
}

Partition partition_subspace(const RelationalTable& t, std::size_t owner,
                             std::span<const std::size_t> candidates, Counters* counters) {
  Partition p;
  p.space = UndominatedSpace{owner, std::vector<std::vector<std::size_t>>(t.cols())};
  for (std::size_t row : candidates) {
    if (row == owner) continue;
    switch (compare_rows(t, owner, row, counters)) {
      case DominanceOutcome::strictly_dominates:
        (comparable(t.rule(owner), t.rule(row)) ? p.discarded : p.to_incomp).push_back(row);
        break;
      case DominanceOutcome::equivalent:
        p.equivalent.push_back(row);
        break;
      default:
        place(t, owner, row, p.space);
        break;
    }
  }
  return p;
}

namespace {

enum class State : unsigned char { in_space, in_incomp, retained, selected, gone };

class RarRun {
 public:
  RarRun(const RelationalTable& t, const RarOptions& options)
      : t_(t),
        opt_(options),
        state_(t.rows(), State::in_space),
        member_of_(t.rows()),
        live_count_(t.rows(), 0),
        stamp_(t.rows(), 0),
        remaining_(t.rows()) {
    const auto ref = reference_rule(t);
    degsim_.resize(t.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) degsim_[r] = deg_sim(ref.values, t.row(r));

    order_.resize(t.rows());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (degsim_[a] != degsim_[b]) return degsim_[a] < degsim_[b];
      return t.rule(a).id < t.rule(b).id;
    });

    // S starts as one pseudo-space holding all of R.
    std::vector<std::size_t> all(t.rows());
    std::iota(all.begin(), all.end(), std::size_t{0});
    add_space(std::move(all));
  }

  RarResult run() {
    RarResult result;
    std::size_t step = 0;
    while (auto next = next_candidate()) {
      const std::size_t chosen = *next;
      const State source = state_[chosen];
      result.representatives.push_back(chosen);
      state_[chosen] = State::selected;
      --remaining_;
      std::size_t eliminated = 0;

      // A rule taken from Incomp is itself dominated and, by definition,
      // cannot eliminate anything.
      if (opt_.mode == RarMode::faithful_alg1 || source != State::in_incomp)
        eliminated += purge_incomp(chosen);

      if (source == State::in_incomp) {
        --incomp_size_;
      } else if (source == State::in_space) {
        eliminated += split_spaces(chosen);
      }

      if (opt_.record_trace) {
        TraceStep s;
        s.step = ++step;
        s.chosen_rule_id = t_.rule(chosen).id;
        s.row = chosen;
        s.degsim = degsim_[chosen];
        s.source = source == State::in_incomp   ? CandidateSource::incomp
                   : source == State::retained ? CandidateSource::retained
                                               : CandidateSource::subspace;
        s.rr_size = result.representatives.size();
        s.incomp_size = incomp_size_;
        s.candidates_remaining = remaining_;
        s.eliminated = eliminated;
        result.trace.push_back(s);
      }
    }
    result.counters = counters_;
    return result;
  }

 private:
  static bool is_candidate(State s) {
    return s == State::in_space || s == State::in_incomp || s == State::retained;
  }

  // Candidates only ever leave, and deg_sim is fixed, so the argmin is the
  // first live entry of the presorted order.
  std::optional<std::size_t> next_candidate() {
    while (cursor_ < order_.size() && !is_candidate(state_[order_[cursor_]])) ++cursor_;
    if (cursor_ == order_.size()) return std::nullopt;
    return order_[cursor_];
  }

  void add_space(std::vector<std::size_t> members) {
    const auto id = static_cast<std::uint32_t>(spaces_.size());
    for (auto r : members) {
      member_of_[r].push_back(id);
      ++live_count_[r];
    }
    spaces_.push_back(Space{std::move(members), true});
  }

  void kill_space(std::uint32_t id) {
    auto& s = spaces_[id];
    s.live = false;
    for (auto r : s.members) --live_count_[r];
    s.members.clear();
    s.members.shrink_to_fit();
  }

  void drop(std::size_t row) {
    state_[row] = State::gone;
    --remaining_;
  }

  std::size_t purge_incomp(std::size_t chosen) {
    std::size_t eliminated = 0;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < incomp_.size(); ++i) {
      const std::size_t r = incomp_[i];
      if (state_[r] != State::in_incomp) continue;
      if (r != chosen && strictly_dominates(t_, chosen, r, &counters_) &&
          comparable(t_.rule(chosen), t_.rule(r))) {
        drop(r);
        --incomp_size_;
        ++eliminated;
        continue;
      }
      incomp_[keep++] = r;
    }
    incomp_.resize(keep);
    return eliminated;
  }

  std::size_t split_spaces(std::size_t chosen) {
    ++epoch_;
    std::vector<std::uint32_t> hosts;
    for (auto id : member_of_[chosen])
      if (spaces_[id].live) hosts.push_back(id);

    std::vector<std::size_t> candidates;
    for (auto id : hosts)
      for (auto r : spaces_[id].members) {
        if (r == chosen || stamp_[r] == epoch_ || state_[r] != State::in_space) continue;
        stamp_[r] = epoch_;
        candidates.push_back(r);
      }

    Partition p = partition_subspace(t_, chosen, candidates, &counters_);

    for (auto r : p.discarded) drop(r);
    for (auto r : p.to_incomp) {
      state_[r] = State::in_incomp;
      incomp_.push_back(r);
      ++incomp_size_;
    }
    if (opt_.mode == RarMode::definitional)
      for (auto r : p.equivalent) state_[r] = State::retained;

    for (auto id : hosts) kill_space(id);
    for (auto& s : p.space.subspaces)
      if (!s.empty()) add_space(std::move(s));

    std::size_t eliminated = p.discarded.size();
    if (opt_.mode == RarMode::faithful_alg1) {
      // Equivalents fall through every new subspace and vanish unless some
      // other live subspace still holds them.
      for (auto r : p.equivalent)
        if (live_count_[r] == 0) {
          drop(r);
          ++eliminated;
        }
    }
    return eliminated;
  }

  struct Space {
    std::vector<std::size_t> members;
    bool live = false;
  };

  const RelationalTable& t_;
  RarOptions opt_;
  std::vector<State> state_;
  std::vector<double> degsim_;
  std::vector<std::size_t> order_;
  std::size_t cursor_ = 0;

  std::vector<Space> spaces_;
  std::vector<std::vector<std::uint32_t>> member_of_;
  std::vector<std::uint32_t> live_count_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;

  std::vector<std::size_t> incomp_;
  std::size_t incomp_size_ = 0;
  std::size_t remaining_ = 0;
  Counters counters_;
};

}  // namespace

RarResult rar(const RelationalTable& t, const RarOptions& options) {
  if (!t.normalized() && !shares_one_domain(t))
    throw PreconditionError(
        "rar: measures have different value ranges; normalize the table first");
  if (t.rows() == 0) return {};
  return RarRun(t, options).run();
}

std::vector<TraceStep> rar_trace(const RelationalTable& t, RarMode mode) {
  return rar(t, RarOptions{mode, true}).trace;
}

}  // namespace reprules
