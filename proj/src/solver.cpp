#include "scdprolog/solver.hpp"

#include <algorithm>

#include "scdprolog/builtins.hpp"
#include "scdprolog/errors.hpp"
#include "scdprolog/parser.hpp"
#include "scdprolog/unify.hpp"

namespace scd {

struct Engine::ContNode {
  Frame frame;
  Cont next;

  // Unlink iteratively so long continuations do not recurse on destruction.
  ~ContNode() {
    Cont n = std::move(next);
    while (n && n.use_count() == 1) n = std::move(n->next);
  }
};

const Term* Solution::find(std::string_view name) const {
  for (const auto& [n, v] : bindings) {
    if (n == name) return &v;
  }
  return nullptr;
}

Engine::Engine(const Program& program, const Goal& goal, EngineOptions options)
    : program_(program), options_(options), answer_vars_(scd::answer_variables(goal)) {
  if (auto m = max_var_id(goal)) vars_.reserve_above(*m);
  cont_ = push(goal, nullptr);
}

Engine::Cont Engine::push(Frame frame, Cont next) {
  return std::make_shared<ContNode>(ContNode{std::move(frame), std::move(next)});
}

std::vector<ChoicePointInfo> Engine::choicepoints() const {
  std::vector<ChoicePointInfo> out;
  out.reserve(choicepoints_.size());
  for (const auto& cp : choicepoints_) out.push_back({cp.kind, cp.barrier_id, cp.trail});
  return out;
}

std::optional<Solution> Engine::next() {
  if (exhausted_) return std::nullopt;
  try {
    if (started_ && !backtrack()) {
      finish();
      return std::nullopt;
    }
    started_ = true;
    if (!run()) {
      finish();
      return std::nullopt;
    }
    return make_solution();
  } catch (...) {
    finish();
    throw;
  }
}

void Engine::finish() {
  exhausted_ = true;
  choicepoints_.clear();
  live_barriers_.clear();
  cont_.reset();
  store_.undo_to(0);
}

// Drives the continuation until it is empty (an answer) or every
// alternative has failed.
bool Engine::run() {
  while (cont_) {
    Cont node = cont_;
    cont_ = node->next;
    if (const auto* marker = std::get_if<CommitMarker>(&node->frame)) {
      commit(marker->barrier_id);
      continue;
    }
    const Goal& goal = std::get<Goal>(node->frame);
    switch (goal.kind()) {
      case GoalKind::Conj:
        cont_ = push(goal.left(), push(goal.right(), cont_));
        break;
      case GoalKind::Scd: {
        const std::uint64_t barrier = next_barrier_++;
        live_barriers_.insert(barrier);
        choicepoints_.push_back(ChoicePoint{.kind = ChoicePointKind::ScdAlt,
                                            .resume = cont_,
                                            .trail = store_.mark(),
                                            .second = goal.right(),
                                            .barrier_id = barrier});
        cont_ = push(goal.left(), push(CommitMarker{barrier}, cont_));
        break;
      }
      case GoalKind::Atomic:
        if (!call(goal.term()) && !backtrack()) return false;
        break;
    }
  }
  return true;
}

bool Engine::call(const Term& goal) {
  if (options_.depth_limit && steps_ >= *options_.depth_limit) throw DepthLimitExceeded(steps_);
  ++steps_;
  const Term atom = deref(goal, store_);
  if (auto result = call_builtin(atom, store_, options_.occurs_check)) return *result;
  const PredicateKey key{atom.name(), atom.arity()};
  const auto clauses = program_.lookup(key);
  if (clauses.empty()) {
    if (options_.strict_unknown) throw UnknownPredicate(key.name, key.arity);
    return false;
  }
  return backchain(atom, clauses, 0, store_.mark());
}

namespace {

// Cheap pre-unification filter on the principal functors of the arguments.
bool may_match(const Term& head, const Term& goal, const BindingStore& store) {
  for (std::size_t i = 0; i < head.arity(); ++i) {
    const Term& h = head.args()[i];
    const Term g = deref(goal.args()[i], store);
    if (h.is_var() || g.is_var()) continue;
    if (h.kind() != g.kind()) return false;
    if (h.is_integer() && h.as_integer().value != g.as_integer().value) return false;
    if ((h.is_atom() || h.is_compound()) && (h.name() != g.name() || h.arity() != g.arity())) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool Engine::backchain(const Term& goal, std::span<const std::size_t> clauses, std::size_t start,
                       BindingStore::Mark mark) {
  const Cont rest = cont_;
  for (std::size_t i = start; i < clauses.size(); ++i) {
    const Clause& stored = program_.clause(clauses[i]);
    if (!may_match(stored.head, goal, store_)) continue;
    std::size_t next = i + 1;
    while (next < clauses.size() && !may_match(program_.clause(clauses[next]).head, goal, store_)) {
      ++next;
    }
    Clause clause = rename_fresh(stored, vars_);
    if (!unify(clause.head, goal, store_, options_.occurs_check)) continue;

    if (next < clauses.size()) {
      choicepoints_.push_back(ChoicePoint{.kind = ChoicePointKind::ClauseAlt,
                                          .resume = rest,
                                          .trail = mark,
                                          .goal = goal,
                                          .clauses = clauses,
                                          .next_clause = next});
    }
    cont_ = clause.body ? push(*clause.body, rest) : rest;
    return true;
  }
  return false;
}

bool Engine::backtrack() {
  while (!choicepoints_.empty()) {
    ChoicePoint cp = std::move(choicepoints_.back());
    choicepoints_.pop_back();
    store_.undo_to(cp.trail);
    cont_ = cp.resume;
    if (cp.kind == ChoicePointKind::ScdAlt) {
      live_barriers_.erase(cp.barrier_id);
      cont_ = push(*cp.second, cont_);
      return true;
    }
    if (backchain(*cp.goal, cp.clauses, cp.next_clause, cp.trail)) return true;
  }
  return false;
}

void Engine::commit(std::uint64_t barrier_id) {
  std::vector<ChoicePointInfo> before;
  if (commit_observer_) before = choicepoints();
  const bool removed = live_barriers_.erase(barrier_id) > 0;
  if (removed) {
    auto it = std::find_if(choicepoints_.rbegin(), choicepoints_.rend(), [&](const ChoicePoint& cp) {
      return cp.kind == ChoicePointKind::ScdAlt && cp.barrier_id == barrier_id;
    });
    choicepoints_.erase(std::next(it).base());
  }
  if (commit_observer_) commit_observer_(CommitEvent{barrier_id, removed, std::move(before), choicepoints()});
}

Solution Engine::make_solution() const {
  Solution s;
  s.bindings.reserve(answer_vars_.size());
  for (const auto& v : answer_vars_) s.bindings.emplace_back(v.as_var().hint, resolve(v, store_));
  return s;
}

Engine solve(const Program& program, const Goal& goal, EngineOptions options) {
  return Engine(program, goal, options);
}

std::vector<Solution> solve_all(const Program& program, const Goal& goal, EngineOptions options,
                                std::optional<std::size_t> max) {
  Engine engine(program, goal, options);
  std::vector<Solution> out;
  while (!max || out.size() < *max) {
    auto s = engine.next();
    if (!s) break;
    out.push_back(std::move(*s));
  }
  return out;
}

std::string format_solution(const Solution& s) {
  std::string out;
  for (const auto& [name, value] : s.bindings) {
    if (value.is_var() && value.as_var().hint == name) continue;
    if (!out.empty()) out += ", ";
    out += name;
    out += " = ";
    out += format_term(value, {.use_hints = true});
  }
  return out.empty() ? "true" : out;
}

}  // namespace scd
