#include "scdprolog/builtins.hpp"

#include <array>
#include <cstdint>
#include <string>

#include "scdprolog/errors.hpp"
#include "scdprolog/unify.hpp"

namespace scd {
namespace {

struct BuiltinName {
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<BuiltinName, 9> kBuiltins{{
    {"true", 0}, {"fail", 0}, {"=", 2}, {"\\=", 2}, {"<", 2},
    {"=<", 2}, {">", 2}, {">=", 2}, {"is", 2},
}};

void check_overflow(bool overflow, std::string_view builtin) {
  if (overflow) throw EvaluationError(std::string(builtin), "integer overflow");
}

}  // namespace

bool is_builtin(std::string_view name, std::size_t arity) {
  for (const auto& b : kBuiltins) {
    if (b.name == name && b.arity == arity) return true;
  }
  return false;
}

std::int64_t evaluate(const Term& expr, const BindingStore& store, std::string_view builtin) {
  const Term t = deref(expr, store);
  const std::string who(builtin);
  switch (t.kind()) {
    case TermKind::Integer:
      return t.as_integer().value;
    case TermKind::Var:
      throw InstantiationError(who);
    case TermKind::Atom:
      throw TypeError(who, print_term(t, store));
    case TermKind::Compound:
      break;
  }
  if (t.arity() != 2) throw TypeError(who, print_term(t, store));
  const std::string& op = t.name();
  if (op != "+" && op != "-" && op != "*" && op != "//" && op != "mod") {
    throw TypeError(who, print_term(t, store));
  }
  const std::int64_t x = evaluate(t.args()[0], store, builtin);
  const std::int64_t y = evaluate(t.args()[1], store, builtin);
  std::int64_t r = 0;
  if (op == "+" || op == "-" || op == "*") {
    const bool overflow = op == "+"   ? __builtin_add_overflow(x, y, &r)
                          : op == "-" ? __builtin_sub_overflow(x, y, &r)
                                      : __builtin_mul_overflow(x, y, &r);
    check_overflow(overflow, builtin);
    return r;
  }
  if (y == 0) throw EvaluationError(who, "division by zero");
  if (op == "//") {
    if (x == INT64_MIN && y == -1) throw EvaluationError(who, "integer overflow");
    return x / y;  // truncates toward zero
  }
  if (y == -1) return 0;
  // mod takes the sign of the divisor
  const std::int64_t m = x % y;
  return (m != 0 && ((m < 0) != (y < 0))) ? m + y : m;
}

std::optional<bool> call_builtin(const Term& goal, BindingStore& store, bool occurs_check) {
  if (!is_builtin(goal.name(), goal.arity())) return std::nullopt;
  const std::string& name = goal.name();
  if (name == "true") return true;
  if (name == "fail") return false;

  const Term& lhs = goal.args()[0];
  const Term& rhs = goal.args()[1];
  if (name == "=") return unify(lhs, rhs, store, occurs_check);
  if (name == "\\=") {
    const auto m = store.mark();
    const bool unifiable = unify(lhs, rhs, store, occurs_check);
    store.undo_to(m);
    return !unifiable;
  }
  const std::string who = name + "/2";
  if (name == "is") return unify(lhs, Term::integer(evaluate(rhs, store, who)), store, occurs_check);

  const std::int64_t x = evaluate(lhs, store, who);
  const std::int64_t y = evaluate(rhs, store, who);
  if (name == "<") return x < y;
  if (name == "=<") return x <= y;
  if (name == ">") return x > y;
  return x >= y;
}

}  // namespace scd
