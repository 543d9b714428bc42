#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "scdprolog/term.hpp"

namespace scd {

struct EngineOptions {
  bool occurs_check = true;
  bool strict_unknown = false;
  /// Maximum number of atomic-goal calls before DepthLimitExceeded.
  std::optional<std::uint64_t> depth_limit;
};

/// One answer: every named query variable mapped to its resolved value, in
/// query order. Unbound variables map to themselves.
struct Solution {
  Bindings bindings;

  const Term* find(std::string_view name) const;
};

enum class ChoicePointKind { ClauseAlt, ScdAlt };

struct ChoicePointInfo {
  ChoicePointKind kind;
  std::uint64_t barrier_id;  // 0 for ClauseAlt
  std::size_t trail_checkpoint;

  friend bool operator==(const ChoicePointInfo&, const ChoicePointInfo&) = default;
};

/// Reported each time the proof of a `;;` first disjunct completes.
struct CommitEvent {
  std::uint64_t barrier_id;
  bool removed;  // false on later solutions, once the barrier is already gone
  std::vector<ChoicePointInfo> before;
  std::vector<ChoicePointInfo> after;
};

/// Depth-first solver for Horn clauses with sequential-choice goals.
///
/// Atomic goals backchain over the program's clauses in textual order,
/// leaving a choice point for the remaining clauses. A goal `G0 ;; G1`
/// pushes a barrier choice point holding G1, then solves G0 followed by a
/// commit marker. Reaching the marker deletes exactly that barrier, so G1 is
/// never tried once G0 has produced an answer while G0's own alternatives
/// stay available. If G0 fails finitely, backtracking reaches the barrier
/// and G1 runs in its place.
///
/// Answers are computed on demand by next(). The program must outlive the
/// engine.
class Engine {
 public:
  Engine(const Program& program, const Goal& goal, EngineOptions options = {});

  /// Next answer, or nullopt once the search space is exhausted. After
  /// exhaustion the binding store is empty again.
  std::optional<Solution> next();

  bool exhausted() const { return exhausted_; }
  /// True if backtracking could still produce another answer.
  bool has_alternatives() const { return !exhausted_ && !choicepoints_.empty(); }
  std::uint64_t step_count() const { return steps_; }
  const BindingStore& store() const { return store_; }
  const std::vector<Term>& answer_variables() const { return answer_vars_; }
  std::vector<ChoicePointInfo> choicepoints() const;

  void set_commit_observer(std::function<void(const CommitEvent&)> observer) {
    commit_observer_ = std::move(observer);
  }

 private:
  struct CommitMarker {
    std::uint64_t barrier_id;
  };
  using Frame = std::variant<Goal, CommitMarker>;
  struct ContNode;
  using Cont = std::shared_ptr<ContNode>;

  struct ChoicePoint {
    ChoicePointKind kind;
    Cont resume;
    BindingStore::Mark trail;
    // ClauseAlt
    std::optional<Term> goal;
    std::span<const std::size_t> clauses;
    std::size_t next_clause = 0;
    // ScdAlt
    std::optional<Goal> second;
    std::uint64_t barrier_id = 0;
  };

  static Cont push(Frame frame, Cont next);
  bool run();
  bool backtrack();
  bool call(const Term& goal);
  bool backchain(const Term& goal, std::span<const std::size_t> clauses, std::size_t start,
                 BindingStore::Mark mark);
  void commit(std::uint64_t barrier_id);
  Solution make_solution() const;
  void finish();

  const Program& program_;
  EngineOptions options_;
  BindingStore store_;
  VarAllocator vars_;
  Cont cont_;
  std::vector<ChoicePoint> choicepoints_;
  std::vector<Term> answer_vars_;
  std::uint64_t steps_ = 0;
  std::uint64_t next_barrier_ = 1;
  std::unordered_set<std::uint64_t> live_barriers_;
  bool started_ = false;
  bool exhausted_ = false;
  std::function<void(const CommitEvent&)> commit_observer_;
};

/// Lazy answer stream for `goal` against `program`.
Engine solve(const Program& program, const Goal& goal, EngineOptions options = {});

/// Pulls up to `max` answers (all when unset).
std::vector<Solution> solve_all(const Program& program, const Goal& goal, EngineOptions options = {},
                                std::optional<std::size_t> max = std::nullopt);

/// "X = 1, Y = f(Z)". Variables left unbound are omitted; "true" when
/// nothing remains.
std::string format_solution(const Solution& s);

}  // namespace scd
