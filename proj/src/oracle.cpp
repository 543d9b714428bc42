#include "scdprolog/oracle.hpp"

#include <string>

#include "scdprolog/errors.hpp"
#include "scdprolog/parser.hpp"

namespace scd::oracle {

Term apply(const Substitution& s, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = s.find(t.var_id());
      return it == s.end() ? t : it->second;
    }
    case TermKind::Compound: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(oracle::apply(s, a));
      return Term::compound(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

namespace {

bool occurs(VarId id, const Term& t) {
  if (t.is_var()) return t.var_id() == id;
  for (const auto& a : t.args()) {
    if (occurs(id, a)) return true;
  }
  return false;
}

// Adds x -> t to an idempotent substitution, keeping it idempotent.
void compose(Substitution& s, VarId x, const Term& t) {
  const Substitution single{{x, t}};
  for (auto& [id, value] : s) value = oracle::apply(single, value);
  s.emplace(x, t);
}

bool unify_into(const Term& a0, const Term& b0, Substitution& s) {
  const Term a = oracle::apply(s, a0);
  const Term b = oracle::apply(s, b0);
  if (a.is_var() && b.is_var() && a.var_id() == b.var_id()) return true;
  if (a.is_var()) {
    if (occurs(a.var_id(), b)) return false;
    compose(s, a.var_id(), b);
    return true;
  }
  if (b.is_var()) return unify_into(b, a, s);
  if (a.is_integer() || b.is_integer()) {
    return a.is_integer() && b.is_integer() && a.as_integer().value == b.as_integer().value;
  }
  if (a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!unify_into(a.args()[i], b.args()[i], s)) return false;
  }
  return true;
}

std::int64_t eval(const Term& t, const std::string& who) {
  if (t.is_integer()) return t.as_integer().value;
  if (t.is_var()) throw InstantiationError(who);
  if (t.arity() == 2) {
    const std::string& op = t.name();
    if (op == "+") return eval(t.args()[0], who) + eval(t.args()[1], who);
    if (op == "-") return eval(t.args()[0], who) - eval(t.args()[1], who);
    if (op == "*") return eval(t.args()[0], who) * eval(t.args()[1], who);
    if (op == "//" || op == "mod") {
      const std::int64_t x = eval(t.args()[0], who);
      const std::int64_t y = eval(t.args()[1], who);
      if (y == 0) throw EvaluationError(who, "division by zero");
      if (op == "//") return x / y;
      return ((x % y) + y) % y;
    }
  }
  throw TypeError(who, format_term(t));
}

struct Answer {
  Substitution subst;
  std::size_t depth;
};

class Search {
 public:
  Search(const Program& program, OracleLimits limits, VarId first_fresh)
      : program_(program), limits_(limits), next_var_(first_fresh) {}

  bool depth_hit = false;
  bool budget_hit = false;

  bool aborted() const { return depth_hit || budget_hit; }

  // All answers of the goal list, in depth-first order.
  std::vector<Answer> solve(const std::vector<Goal>& goals, const Substitution& s, std::size_t depth) {
    if (aborted()) return {};
    if (++nodes_ > limits_.node_budget) {
      budget_hit = true;
      return {};
    }
    if (goals.empty()) return {{s, depth}};
    const Goal& g = goals.front();
    const std::vector<Goal> rest(goals.begin() + 1, goals.end());
    switch (g.kind()) {
      case GoalKind::Conj: {
        std::vector<Goal> expanded{g.left(), g.right()};
        expanded.insert(expanded.end(), rest.begin(), rest.end());
        return solve(expanded, s, depth);
      }
      case GoalKind::Scd: {
        std::vector<Answer> chosen = solve({g.left()}, s, depth);
        if (aborted()) return {};
        if (chosen.empty()) chosen = solve({g.right()}, s, depth);
        std::vector<Answer> out;
        for (const auto& a : chosen) append(out, solve(rest, a.subst, a.depth));
        return out;
      }
      case GoalKind::Atomic:
        return atomic(oracle::apply(s, g.term()), rest, s, depth);
    }
    return {};
  }

 private:
  static void append(std::vector<Answer>& out, std::vector<Answer> more) {
    for (auto& a : more) out.push_back(std::move(a));
  }

  std::vector<Answer> atomic(const Term& t, const std::vector<Goal>& rest, const Substitution& s,
                             std::size_t depth) {
    if (t.is_var()) throw InstantiationError("call/1");
    const std::string& name = t.name();
    const std::size_t arity = t.arity();
    if (name == "true" && arity == 0) return solve(rest, s, depth);
    if (name == "fail" && arity == 0) return {};
    if (arity == 2 && (name == "=" || name == "\\=")) {
      Substitution u = s;
      const bool ok = unify_into(t.args()[0], t.args()[1], u);
      if (name == "=") return ok ? solve(rest, u, depth) : std::vector<Answer>{};
      return ok ? std::vector<Answer>{} : solve(rest, s, depth);
    }
    if (arity == 2 && name == "is") {
      Substitution u = s;
      const Term value = Term::integer(eval(t.args()[1], "is/2"));
      return unify_into(t.args()[0], value, u) ? solve(rest, u, depth) : std::vector<Answer>{};
    }
    if (arity == 2 && (name == "<" || name == "=<" || name == ">" || name == ">=")) {
      const std::string who = name + "/2";
      const std::int64_t x = eval(t.args()[0], who);
      const std::int64_t y = eval(t.args()[1], who);
      const bool holds = name == "<" ? x < y : name == "=<" ? x <= y : name == ">" ? x > y : x >= y;
      return holds ? solve(rest, s, depth) : std::vector<Answer>{};
    }

    bool defined = false;
    std::vector<Answer> out;
    for (const auto& clause : program_.clauses()) {
      if (clause.head.name() != name || clause.head.arity() != arity) continue;
      defined = true;
      if (depth + 1 > limits_.depth_bound) {
        depth_hit = true;
        return {};
      }
      const auto [head, body] = rename(clause);
      Substitution u = s;
      if (!unify_into(head, t, u)) continue;
      std::vector<Goal> goals;
      if (body) goals.push_back(*body);
      goals.insert(goals.end(), rest.begin(), rest.end());
      append(out, solve(goals, u, depth + 1));
      if (aborted()) return {};
    }
    if (!defined && limits_.strict_unknown) throw UnknownPredicate(name, arity);
    return out;
  }

  std::pair<Term, std::optional<Goal>> rename(const Clause& c) {
    Substitution fresh;
    auto add = [&](const Term& t) {
      for (const auto& v : variables_of(t)) {
        if (!fresh.contains(v.var_id())) fresh.emplace(v.var_id(), Term::var(next_var_++));
      }
    };
    add(c.head);
    std::optional<Goal> body;
    if (c.body) {
      for (const auto& v : variables_of(*c.body)) {
        if (!fresh.contains(v.var_id())) fresh.emplace(v.var_id(), Term::var(next_var_++));
      }
      body = rename_goal(*c.body, fresh);
    }
    return {oracle::apply(fresh, c.head), body};
  }

  static Goal rename_goal(const Goal& g, const Substitution& fresh) {
    switch (g.kind()) {
      case GoalKind::Atomic:
        return Goal::atomic(oracle::apply(fresh, g.term()));
      case GoalKind::Conj:
        return Goal::conj(rename_goal(g.left(), fresh), rename_goal(g.right(), fresh));
      case GoalKind::Scd:
        return Goal::scd(rename_goal(g.left(), fresh), rename_goal(g.right(), fresh));
    }
    return g;
  }

  const Program& program_;
  OracleLimits limits_;
  VarId next_var_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& s) {
  Substitution u = s;
  if (!unify_into(a, b, u)) return std::nullopt;
  return u;
}

OracleResult oracle_solve(const Program& program, const Goal& goal, OracleLimits limits) {
  VarId first = 0;
  if (auto m = max_var_id(goal)) first = *m + 1;
  Search search(program, limits, first);
  const auto answers = search.solve({goal}, {}, 0);
  if (search.depth_hit) return {Outcome::DepthExhausted, {}};
  if (search.budget_hit) return {Outcome::BudgetExhausted, {}};
  OracleResult result{Outcome::Solutions, {}};
  const auto vars = answer_variables(goal);
  for (const auto& a : answers) {
    Bindings b;
    for (const auto& v : vars) b.emplace_back(v.as_var().hint, oracle::apply(a.subst, v));
    result.solutions.push_back(std::move(b));
  }
  return result;
}

}  // namespace scd::oracle
