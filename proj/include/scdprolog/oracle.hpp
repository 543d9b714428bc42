#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "scdprolog/term.hpp"

// Reference evaluator for differential testing. It enumerates complete
// answer lists by naive tree search over explicit substitutions and shares
// nothing with the solver beyond the term and goal types: it has its own
// unifier, renaming and builtins.
namespace scd::oracle {

/// Idempotent substitution: no variable in the domain occurs in any value.
using Substitution = std::map<VarId, Term>;

Term apply(const Substitution& s, const Term& t);

/// Robinson unification with occurs check, composing eagerly. Returns the
/// extended substitution, or nullopt if `a` and `b` do not unify under `s`.
std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& s = {});

enum class Outcome {
  Solutions,
  DepthExhausted,   // some branch needed more than depth_bound backchaining steps
  BudgetExhausted,  // the total node budget ran out first
};

struct OracleResult {
  Outcome outcome;
  std::vector<Bindings> solutions;  // meaningful only for Outcome::Solutions
};

struct OracleLimits {
  std::size_t depth_bound = 200;
  std::size_t node_budget = std::numeric_limits<std::size_t>::max();
  bool strict_unknown = false;
};

/// Complete depth-first answer list of `goal`. A `;;` goal is evaluated
/// by its definition: the answers of the first disjunct if there are any,
/// otherwise the answers of the second.
OracleResult oracle_solve(const Program& program, const Goal& goal, OracleLimits limits = {});

inline OracleResult oracle_solve(const Program& program, const Goal& goal, std::size_t depth_bound) {
  return oracle_solve(program, goal, OracleLimits{.depth_bound = depth_bound});
}

}  // namespace scd::oracle
