#include "scdprolog/term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "scdprolog/errors.hpp"
#include "scdprolog/operators.hpp"

namespace scd {

// ---------------------------------------------------------------------------
// Term

Term Term::var(VarId id, std::string hint) {
  return Term(std::make_shared<const Node>(Node{Var{id, std::move(hint)}, false}));
}

Term Term::atom(std::string name) {
  return Term(std::make_shared<const Node>(Node{Atom{std::move(name)}, true}));
}

Term Term::integer(std::int64_t value) {
  return Term(std::make_shared<const Node>(Node{Integer{value}, true}));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return atom(std::move(functor));
  const bool ground =
      std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
  return Term(std::make_shared<const Node>(
      Node{Compound{std::move(functor), std::move(args)}, ground}));
}

Term Term::list(std::span<const Term> items, std::optional<Term> tail) {
  Term result = tail ? *tail : atom("[]");
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    result = compound(".", {*it, result});
  }
  return result;
}

TermKind Term::kind() const { return static_cast<TermKind>(node_->data.index()); }

const std::string& Term::name() const {
  if (is_atom()) return as_atom().name;
  return as_compound().functor;
}

std::size_t Term::arity() const { return is_compound() ? as_compound().args.size() : 0; }

std::span<const Term> Term::args() const {
  if (!is_compound()) return {};
  return as_compound().args;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var:
      return a.var_id() == b.var_id();
    case TermKind::Atom:
      return a.as_atom().name == b.as_atom().name;
    case TermKind::Integer:
      return a.as_integer().value == b.as_integer().value;
    case TermKind::Compound: {
      const auto& ca = a.as_compound();
      const auto& cb = b.as_compound();
      return ca.functor == cb.functor && ca.args == cb.args;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// BindingStore

const Term* BindingStore::lookup(VarId id) const {
  auto it = bindings_.find(id);
  return it == bindings_.end() ? nullptr : &it->second;
}

void BindingStore::bind(VarId id, Term value) {
  auto [it, inserted] = bindings_.try_emplace(id, std::move(value));
  if (!inserted) throw std::logic_error("variable _G" + std::to_string(id) + " is already bound");
  trail_.push_back(id);
}

void BindingStore::undo_to(Mark m) {
  while (trail_.size() > m) {
    bindings_.erase(trail_.back());
    trail_.pop_back();
  }
}

std::map<VarId, Term> BindingStore::snapshot() const {
  return {bindings_.begin(), bindings_.end()};
}

// ---------------------------------------------------------------------------
// Goal, Clause, Program

Goal Goal::atomic(Term term) {
  return Goal(std::make_shared<const Node>(Node{GoalKind::Atomic, std::move(term), {}}));
}

Goal Goal::conj(Goal left, Goal right) {
  return Goal(std::make_shared<const Node>(
      Node{GoalKind::Conj, Term::atom(","), {std::move(left), std::move(right)}}));
}

Goal Goal::scd(Goal first, Goal second) {
  return Goal(std::make_shared<const Node>(
      Node{GoalKind::Scd, Term::atom(";;"), {std::move(first), std::move(second)}}));
}

bool operator==(const Goal& a, const Goal& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == GoalKind::Atomic) return a.term() == b.term();
  return a.left() == b.left() && a.right() == b.right();
}

std::string to_string(const PredicateKey& key) {
  return key.name + "/" + std::to_string(key.arity);
}

void Program::add(Clause clause) {
  PredicateKey key{clause.head.name(), clause.head.arity()};
  auto m = scd::max_var_id(clause.head);
  if (clause.body) m = std::max(m, scd::max_var_id(*clause.body));
  if (m) max_var_ = std::max(max_var_, m);
  index_[std::move(key)].push_back(clauses_.size());
  clauses_.push_back(std::move(clause));
}

void Program::append(const Program& other) {
  for (const auto& c : other.clauses()) add(c);
}

std::span<const std::size_t> Program::lookup(const PredicateKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return {};
  return it->second;
}

// ---------------------------------------------------------------------------
// Dereferencing and resolution

Term deref(const Term& t, const BindingStore& store) {
  Term cur = t;
  std::size_t steps = 0;
  while (cur.is_var()) {
    const Term* next = store.lookup(cur.var_id());
    if (next == nullptr) break;
    if (++steps > store.size()) throw CyclicTerm();
    cur = *next;
  }
  return cur;
}

namespace {

Term resolve_rec(const Term& t, const BindingStore& store, std::unordered_set<VarId>& active) {
  if (t.is_ground()) return t;
  if (t.is_var()) {
    const Term* value = store.lookup(t.var_id());
    if (value == nullptr) return t;
    if (!active.insert(t.var_id()).second) throw CyclicTerm();
    Term r = resolve_rec(*value, store, active);
    active.erase(t.var_id());
    return r;
  }
  const auto& c = t.as_compound();
  std::vector<Term> args;
  args.reserve(c.args.size());
  bool changed = false;
  for (const auto& a : c.args) {
    args.push_back(resolve_rec(a, store, active));
    changed = changed || args.back().node_address() != a.node_address();
  }
  return changed ? Term::compound(c.functor, std::move(args)) : t;
}

Term rename_rec(const Term& t, std::vector<std::pair<VarId, Term>>& map, VarAllocator& vars) {
  if (t.is_ground()) return t;
  if (t.is_var()) {
    for (const auto& [old_id, fresh] : map) {
      if (old_id == t.var_id()) return fresh;
    }
    map.emplace_back(t.var_id(), vars.fresh());
    return map.back().second;
  }
  const auto& c = t.as_compound();
  std::vector<Term> args;
  args.reserve(c.args.size());
  for (const auto& a : c.args) args.push_back(rename_rec(a, map, vars));
  return Term::compound(c.functor, std::move(args));
}

template <class TermFn>
Goal map_goal(const Goal& g, TermFn&& fn) {
  switch (g.kind()) {
    case GoalKind::Atomic:
      return Goal::atomic(fn(g.term()));
    case GoalKind::Conj:
      return Goal::conj(map_goal(g.left(), fn), map_goal(g.right(), fn));
    case GoalKind::Scd:
      return Goal::scd(map_goal(g.left(), fn), map_goal(g.right(), fn));
  }
  return g;
}

template <class Visit>
void for_each_var(const Term& t, Visit&& visit) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    visit(t);
    return;
  }
  for (const auto& a : t.args()) for_each_var(a, visit);
}

template <class Visit>
void for_each_term(const Goal& g, Visit&& visit) {
  if (g.kind() == GoalKind::Atomic) {
    visit(g.term());
    return;
  }
  for_each_term(g.left(), visit);
  for_each_term(g.right(), visit);
}

}  // namespace

Term resolve(const Term& t, const BindingStore& store) {
  std::unordered_set<VarId> active;
  return resolve_rec(t, store, active);
}

Goal resolve(const Goal& g, const BindingStore& store) {
  return map_goal(g, [&](const Term& t) { return resolve(t, store); });
}

Clause rename_fresh(const Clause& c, VarAllocator& vars) {
  std::vector<std::pair<VarId, Term>> map;
  Clause out{rename_rec(c.head, map, vars), std::nullopt};
  if (c.body) {
    out.body = map_goal(*c.body, [&](const Term& t) { return rename_rec(t, map, vars); });
  }
  return out;
}

Goal rename_fresh(const Goal& g, VarAllocator& vars) {
  std::vector<std::pair<VarId, Term>> map;
  return map_goal(g, [&](const Term& t) { return rename_rec(t, map, vars); });
}

std::vector<Term> variables_of(const Term& t) {
  std::vector<Term> out;
  for_each_var(t, [&](const Term& v) {
    if (std::none_of(out.begin(), out.end(), [&](const Term& o) { return o.var_id() == v.var_id(); }))
      out.push_back(v);
  });
  return out;
}

std::vector<Term> variables_of(const Goal& g) {
  std::vector<Term> out;
  for_each_term(g, [&](const Term& t) {
    for (auto& v : variables_of(t)) {
      if (std::none_of(out.begin(), out.end(), [&](const Term& o) { return o.var_id() == v.var_id(); }))
        out.push_back(v);
    }
  });
  return out;
}

std::optional<VarId> max_var_id(const Term& t) {
  std::optional<VarId> m;
  for_each_var(t, [&](const Term& v) { m = std::max(m, std::optional<VarId>(v.var_id())); });
  return m;
}

std::optional<VarId> max_var_id(const Goal& g) {
  std::optional<VarId> m;
  for_each_term(g, [&](const Term& t) { m = std::max(m, max_var_id(t)); });
  return m;
}

namespace {

bool variant_rec(const Term& a, const Term& b, std::unordered_map<VarId, VarId>& ab,
                 std::unordered_map<VarId, VarId>& ba) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      auto [ia, new_a] = ab.try_emplace(a.var_id(), b.var_id());
      auto [ib, new_b] = ba.try_emplace(b.var_id(), a.var_id());
      return ia->second == b.var_id() && ib->second == a.var_id();
    }
    case TermKind::Atom:
    case TermKind::Integer:
      return a == b;
    case TermKind::Compound: {
      if (a.name() != b.name() || a.arity() != b.arity()) return false;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!variant_rec(a.args()[i], b.args()[i], ab, ba)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_variant(const Term& a, const Term& b) {
  std::unordered_map<VarId, VarId> ab, ba;
  return variant_rec(a, b, ab, ba);
}

bool is_variant(std::span<const Term> a, std::span<const Term> b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<VarId, VarId> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!variant_rec(a[i], b[i], ab, ba)) return false;
  }
  return true;
}

Term goal_to_term(const Goal& g) {
  switch (g.kind()) {
    case GoalKind::Atomic:
      return g.term();
    case GoalKind::Conj:
      return Term::compound(",", {goal_to_term(g.left()), goal_to_term(g.right())});
    case GoalKind::Scd:
      return Term::compound(";;", {goal_to_term(g.left()), goal_to_term(g.right())});
  }
  return g.term();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool is_alnum_atom(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_symbol_atom(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_symbol_char) && s.back() != '.';
}

std::string quote_atom(std::string_view s) {
  if (s == "[]" || is_alnum_atom(s) || is_symbol_atom(s)) return std::string(s);
  std::string out = "'";
  for (char c : s) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '\'';
  return out;
}

std::string var_name(const Var& v, const PrintOptions& opts) {
  if (opts.use_hints && !v.hint.empty() && v.hint != "_") return v.hint;
  return "_G" + std::to_string(v.id);
}

// Joins operands around an infix operator without letting adjacent
// symbol characters fuse into one token.
std::string join_infix(const std::string& left, std::string_view op, const std::string& right) {
  const bool spaced = op == ":-" || op == ";;" || op == ";" || op == "*->" || is_alnum_atom(op);
  std::string out = left;
  if (op == ",") {
    out += ", ";
  } else if (spaced) {
    out += ' ';
    out += op;
    out += ' ';
  } else {
    if (!left.empty() && is_symbol_char(left.back())) out += ' ';
    out += op;
    if (!right.empty() && is_symbol_char(right.front())) out += ' ';
  }
  out += right;
  return out;
}

std::string format_rec(const Term& t, int max_prec, const PrintOptions& opts);

std::string format_list(const Term& t, const PrintOptions& opts) {
  std::string out = "[";
  Term cur = t;
  bool first = true;
  while (cur.is_compound() && cur.name() == "." && cur.arity() == 2) {
    if (!first) out += ',';
    out += format_rec(cur.args()[0], kArgPrecedence, opts);
    first = false;
    cur = cur.args()[1];
  }
  if (!(cur.is_atom() && cur.name() == "[]")) {
    out += '|';
    out += format_rec(cur, kArgPrecedence, opts);
  }
  out += ']';
  return out;
}

std::string format_rec(const Term& t, int max_prec, const PrintOptions& opts) {
  switch (t.kind()) {
    case TermKind::Var:
      return var_name(t.as_var(), opts);
    case TermKind::Integer:
      return std::to_string(t.as_integer().value);
    case TermKind::Atom: {
      std::string s = quote_atom(t.name());
      if (max_prec < kArgPrecedence && is_operator(t.name())) return "(" + s + ")";
      return s;
    }
    case TermKind::Compound:
      break;
  }
  const auto& c = t.as_compound();
  if (c.functor == "." && c.args.size() == 2) return format_list(t, opts);
  if (c.args.size() == 2) {
    if (auto op = infix_operator(c.functor)) {
      std::string s = join_infix(format_rec(c.args[0], op->left_max(), opts), c.functor,
                                 format_rec(c.args[1], op->right_max(), opts));
      if (op->precedence > max_prec) return "(" + s + ")";
      return s;
    }
  }
  std::string out = quote_atom(c.functor);
  out += '(';
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i > 0) out += ',';
    out += format_rec(c.args[i], kArgPrecedence, opts);
  }
  out += ')';
  return out;
}

}  // namespace

std::string format_term(const Term& t, PrintOptions opts) {
  return format_rec(t, kArgPrecedence, opts);
}

std::string format_goal(const Goal& g, PrintOptions opts) {
  return format_rec(goal_to_term(g), kMaxPrecedence - 1, opts);
}

std::string format_clause(const Clause& c, PrintOptions opts) {
  std::string out = format_rec(c.head, kMaxPrecedence - 1, opts);
  if (c.body) {
    out += " :- ";
    out += format_goal(*c.body, opts);
  }
  out += '.';
  return out;
}

std::string format_program(const Program& p) {
  std::string out;
  for (const auto& c : p.clauses()) {
    out += format_clause(c, {.use_hints = true});
    out += '\n';
  }
  return out;
}

std::string print_term(const Term& t, const BindingStore& store) {
  return format_term(resolve(t, store));
}

}  // namespace scd
