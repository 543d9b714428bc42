#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace scd {

using VarId = std::uint64_t;

struct Var {
  VarId id;
  std::string hint;  // source name, empty for generated variables
};

struct Atom {
  std::string name;
};

struct Integer {
  std::int64_t value;
};

class Term;

struct Compound {
  std::string functor;
  std::vector<Term> args;
};

enum class TermKind { Var, Atom, Integer, Compound };

/// Immutable first-order term with shared structure.
///
/// Copying a Term is cheap; the node it points to is never modified after
/// construction. Ground subterms are flagged at construction so renaming and
/// resolution can return them untouched.
class Term {
 public:
  static Term var(VarId id, std::string hint = {});
  static Term atom(std::string name);
  static Term integer(std::int64_t value);
  /// Builds name(args...). An empty argument list yields the atom `name`.
  static Term compound(std::string functor, std::vector<Term> args);
  /// Builds '.'/2 cells over `items` terminated by `tail` (default `[]`).
  static Term list(std::span<const Term> items, std::optional<Term> tail = std::nullopt);

  TermKind kind() const;
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_atom() const { return kind() == TermKind::Atom; }
  bool is_integer() const { return kind() == TermKind::Integer; }
  bool is_compound() const { return kind() == TermKind::Compound; }
  bool is_callable() const { return is_atom() || is_compound(); }
  bool is_ground() const { return node_->ground; }

  const Var& as_var() const { return std::get<Var>(node_->data); }
  const Atom& as_atom() const { return std::get<Atom>(node_->data); }
  const Integer& as_integer() const { return std::get<Integer>(node_->data); }
  const Compound& as_compound() const { return std::get<Compound>(node_->data); }

  VarId var_id() const { return as_var().id; }
  /// Functor name of an atom or compound.
  const std::string& name() const;
  std::size_t arity() const;
  std::span<const Term> args() const;

  /// Identity of the underlying node, stable for the node's lifetime.
  const void* node_address() const { return node_.get(); }

  /// Structural equality; variables compare by id.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    std::variant<Var, Atom, Integer, Compound> data;
    bool ground;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Monotonic source of variable ids that have never been handed out.
class VarAllocator {
 public:
  explicit VarAllocator(VarId first = 0) : next_(first) {}
  Term fresh() { return Term::var(next_++); }
  VarId peek() const { return next_; }
  /// Ensures every future id is strictly greater than `id`.
  void reserve_above(VarId id) {
    if (next_ <= id) next_ = id + 1;
  }

 private:
  VarId next_;
};

/// Variable bindings plus the undo log used for backtracking.
class BindingStore {
 public:
  using Mark = std::size_t;

  const Term* lookup(VarId id) const;
  bool is_bound(VarId id) const { return lookup(id) != nullptr; }
  /// Binds an unbound variable and records it on the trail.
  /// Throws std::logic_error if `id` is already bound.
  void bind(VarId id, Term value);

  Mark mark() const { return trail_.size(); }
  /// Undoes every binding made after `m` was taken.
  void undo_to(Mark m);

  std::size_t size() const { return bindings_.size(); }
  std::size_t trail_size() const { return trail_.size(); }
  std::map<VarId, Term> snapshot() const;

 private:
  std::unordered_map<VarId, Term> bindings_;
  std::vector<VarId> trail_;
};

enum class GoalKind { Atomic, Conj, Scd };

/// Goal tree: an atomic goal, `left, right`, or `first ;; second`.
class Goal {
 public:
  static Goal atomic(Term term);
  static Goal conj(Goal left, Goal right);
  static Goal scd(Goal first, Goal second);

  GoalKind kind() const;
  const Term& term() const;
  const Goal& left() const;
  const Goal& right() const;

  friend bool operator==(const Goal& a, const Goal& b);

 private:
  struct Node;
  explicit Goal(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Goal::Node {
  GoalKind kind;
  Term term;
  std::vector<Goal> children;
};

inline GoalKind Goal::kind() const { return node_->kind; }
inline const Term& Goal::term() const { return node_->term; }
inline const Goal& Goal::left() const { return node_->children[0]; }
inline const Goal& Goal::right() const { return node_->children[1]; }

struct Clause {
  Term head;
  std::optional<Goal> body;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct PredicateKey {
  std::string name;
  std::size_t arity;

  friend auto operator<=>(const PredicateKey&, const PredicateKey&) = default;
};

std::string to_string(const PredicateKey& key);

/// Ordered clause sequence with a functor/arity index.
class Program {
 public:
  void add(Clause clause);
  void append(const Program& other);

  const std::vector<Clause>& clauses() const { return clauses_; }
  /// Clause positions for `key` in textual order, empty if undefined.
  std::span<const std::size_t> lookup(const PredicateKey& key) const;
  const Clause& clause(std::size_t i) const { return clauses_[i]; }
  bool defines(const PredicateKey& key) const { return index_.contains(key); }
  /// Largest variable id appearing in any clause, if any.
  std::optional<VarId> max_var_id() const { return max_var_; }

 private:
  std::vector<Clause> clauses_;
  std::map<PredicateKey, std::vector<std::size_t>> index_;
  std::optional<VarId> max_var_;
};

using Bindings = std::vector<std::pair<std::string, Term>>;

// Term operations.

/// Follows the outermost variable chain of `t`.
Term deref(const Term& t, const BindingStore& store);
/// Replaces every bound variable in `t` by its value, recursively.
Term resolve(const Term& t, const BindingStore& store);
Goal resolve(const Goal& g, const BindingStore& store);

Clause rename_fresh(const Clause& c, VarAllocator& vars);
Goal rename_fresh(const Goal& g, VarAllocator& vars);

/// Variables of `t` in left-to-right first-occurrence order.
std::vector<Term> variables_of(const Term& t);
std::vector<Term> variables_of(const Goal& g);
std::optional<VarId> max_var_id(const Term& t);
std::optional<VarId> max_var_id(const Goal& g);

/// True if `a` and `b` are equal up to a consistent bijective renaming of variables.
bool is_variant(const Term& a, const Term& b);
bool is_variant(std::span<const Term> a, std::span<const Term> b);

Term goal_to_term(const Goal& g);

struct PrintOptions {
  /// Print variables by their source name when they have one.
  bool use_hints = false;
};

/// Concrete syntax for an already-resolved term.
std::string format_term(const Term& t, PrintOptions opts = {});
std::string format_goal(const Goal& g, PrintOptions opts = {});
std::string format_clause(const Clause& c, PrintOptions opts = {});
std::string format_program(const Program& p);

/// Renders resolve(t, store); unbound variables print as `_G<n>`.
std::string print_term(const Term& t, const BindingStore& store);

}  // namespace scd
