#include "support/generators.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace scd::testing {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T, std::size_t N>
const T& pick(Rng& rng, const std::array<T, N>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(N) - 1))];
}

constexpr std::array<const char*, 5> kConstants{"a", "b", "c", "d", "e"};
constexpr std::array<const char*, 6> kRichAtoms{"a", "[]", "hello world", "+", "it's", "x_1"};
constexpr std::array<const char*, 3> kVarNames{"A", "B", "C"};
constexpr std::array<const char*, 3> kQueryVars{"X", "Y", "Z"};

Term constant(Rng& rng) { return Term::atom(pick(rng, kConstants)); }

Term term_rec(Rng& rng, const TermShape& shape, int depth) {
  const int leaf = uniform(rng, 0, 9);
  if (depth >= shape.max_depth || leaf < 4) {
    if (leaf % 2 == 0 && shape.var_pool > 0) {
      const int id = uniform(rng, 0, shape.var_pool - 1);
      return Term::var(static_cast<VarId>(id), "V" + std::to_string(id));
    }
    if (shape.rich && chance(rng, 0.4)) return Term::integer(uniform(rng, -3, 12));
    if (shape.rich) return Term::atom(pick(rng, kRichAtoms));
    return Term::atom(pick(rng, std::array<const char*, 3>{"a", "b", "c"}));
  }
  static constexpr std::array<std::pair<const char*, int>, 3> kPlain{{{"f", 1}, {"g", 2}, {"h", 3}}};
  static constexpr std::array<std::pair<const char*, int>, 9> kRich{{
      {"f", 1}, {"g", 2}, {"h", 3}, {":", 2}, {"+", 2}, {"-", 2}, {"=", 2}, {",", 2}, {";;", 2}}};
  if (shape.rich && chance(rng, 0.15)) {
    std::vector<Term> items;
    const int n = uniform(rng, 1, 3);
    for (int i = 0; i < n; ++i) items.push_back(term_rec(rng, shape, depth + 1));
    std::optional<Term> tail;
    if (chance(rng, 0.3)) tail = term_rec(rng, shape, depth + 1);
    return Term::list(items, tail);
  }
  const auto [name, arity] = shape.rich ? pick(rng, kRich) : pick(rng, kPlain);
  std::vector<Term> args;
  for (int i = 0; i < arity; ++i) args.push_back(term_rec(rng, shape, depth + 1));
  return Term::compound(name, std::move(args));
}

struct ClauseScope {
  std::array<const char*, 3> names;
  int vars;  // how many of `names` are in scope
};

Term scope_var(Rng& rng, const ClauseScope& scope) {
  const int i = uniform(rng, 0, scope.vars - 1);
  return Term::var(static_cast<VarId>(i), scope.names[static_cast<std::size_t>(i)]);
}

Term argument(Rng& rng, const ClauseScope& scope, bool rich) {
  if (chance(rng, 0.5)) return scope_var(rng, scope);
  if (rich && chance(rng, 0.2)) {
    return Term::compound("s", {chance(rng, 0.5) ? scope_var(rng, scope) : constant(rng)});
  }
  return constant(rng);
}

Goal literal(Rng& rng, const Instance& inst, const ProgramShape& shape, int current,
             const ClauseScope& scope) {
  const int roll = uniform(rng, 0, 99);
  if (roll < 75 && !inst.predicates.empty()) {
    const int n = static_cast<int>(inst.predicates.size());
    int target = -1;
    if (current < 0 || chance(rng, shape.recursion_rate)) {
      target = uniform(rng, 0, n - 1);
    } else if (current + 1 < n) {
      target = uniform(rng, current + 1, n - 1);
    }
    if (target >= 0) {
      const auto& key = inst.predicates[static_cast<std::size_t>(target)];
      std::vector<Term> args;
      for (std::size_t i = 0; i < key.arity; ++i) args.push_back(argument(rng, scope, shape.rich_terms));
      return Goal::atomic(Term::compound(key.name, std::move(args)));
    }
  }
  if (roll < 88) {
    return Goal::atomic(Term::compound("=", {scope_var(rng, scope), argument(rng, scope, shape.rich_terms)}));
  }
  if (roll < 93) return Goal::atomic(Term::atom("true"));
  if (roll < 96) return Goal::atomic(Term::atom("fail"));
  return Goal::atomic(Term::compound("\\=", {scope_var(rng, scope), argument(rng, scope, shape.rich_terms)}));
}

Goal combine(Rng& rng, std::span<const Goal> lits, int& scd_budget) {
  if (lits.size() == 1) return lits[0];
  const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(lits.size()) - 1));
  Goal left = combine(rng, lits.subspan(0, k), scd_budget);
  Goal right = combine(rng, lits.subspan(k), scd_budget);
  if (scd_budget > 0 && chance(rng, 0.45)) {
    --scd_budget;
    return Goal::scd(left, right);
  }
  return Goal::conj(left, right);
}

Goal body(Rng& rng, const Instance& inst, const ProgramShape& shape, int current,
          const ClauseScope& scope, int max_literals) {
  const int n = uniform(rng, 1, max_literals);
  std::vector<Goal> lits;
  for (int i = 0; i < n; ++i) lits.push_back(literal(rng, inst, shape, current, scope));
  int budget = shape.allow_scd ? shape.max_scd_per_clause : 0;
  // A lone literal can still become `L ;; M` so single-literal bodies see ;; too.
  if (n == 1 && budget > 0 && chance(rng, 0.3)) {
    lits.push_back(literal(rng, inst, shape, current, scope));
  }
  return combine(rng, lits, budget);
}

}  // namespace

Term random_term(Rng& rng, const TermShape& shape) { return term_rec(rng, shape, 0); }

Instance random_program(Rng& rng, const ProgramShape& shape) {
  Instance inst;
  const int npreds = uniform(rng, 1, shape.max_predicates);
  for (int i = 0; i < npreds; ++i) {
    inst.predicates.push_back({"p" + std::to_string(i), static_cast<std::size_t>(uniform(rng, 0, shape.max_arity))});
  }
  for (int i = 0; i < npreds; ++i) {
    const auto& key = inst.predicates[static_cast<std::size_t>(i)];
    // Occasionally leave a predicate undefined so calls to it fail.
    const int nclauses = chance(rng, 0.08) ? 0 : uniform(rng, 1, shape.max_clauses);
    for (int c = 0; c < nclauses; ++c) {
      const ClauseScope scope{kVarNames, 3};
      const ClauseScope head_scope{kVarNames, 2};
      std::vector<Term> args;
      for (std::size_t a = 0; a < key.arity; ++a) args.push_back(argument(rng, head_scope, shape.rich_terms));
      Clause clause{Term::compound(key.name, std::move(args)), std::nullopt};
      if (chance(rng, 0.6)) clause.body = body(rng, inst, shape, i, scope, shape.max_body_literals);
      inst.program.add(std::move(clause));
    }
  }
  return inst;
}

Goal random_goal(Rng& rng, const Instance& inst, const ProgramShape& shape, int max_literals) {
  const ClauseScope scope{kQueryVars, 2};
  return body(rng, inst, shape, -1, scope, max_literals);
}

Bindings project(const Bindings& b, std::span<const Term> names) {
  Bindings out;
  for (const auto& v : names) {
    for (const auto& [n, t] : b) {
      if (n == v.as_var().hint) out.emplace_back(n, t);
    }
  }
  return out;
}

bool same_answers(std::span<const Bindings> a, std::span<const Bindings> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    std::vector<Term> ta, tb;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j].first != b[i][j].first) return false;
      ta.push_back(a[i][j].second);
      tb.push_back(b[i][j].second);
    }
    if (!is_variant(ta, tb)) return false;
  }
  return true;
}

std::vector<Bindings> bindings_of(std::span<const Solution> s) {
  std::vector<Bindings> out;
  for (const auto& x : s) out.push_back(x.bindings);
  return out;
}

std::string describe(std::span<const Bindings> answers) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (i > 0) os << "; ";
    os << format_solution(Solution{answers[i]});
  }
  os << "]";
  return os.str();
}

}  // namespace scd::testing
