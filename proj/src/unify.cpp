#include "scdprolog/unify.hpp"

#include <set>
#include <utility>
#include <vector>

namespace scd {

bool occurs_in(VarId id, const Term& t, const BindingStore& store) {
  std::vector<Term> work{t};
  while (!work.empty()) {
    Term cur = deref(work.back(), store);
    work.pop_back();
    if (cur.is_var()) {
      if (cur.var_id() == id) return true;
    } else if (cur.is_compound() && !cur.is_ground()) {
      for (const auto& a : cur.args()) work.push_back(a);
    }
  }
  return false;
}

bool unify(const Term& a, const Term& b, BindingStore& store, bool occurs_check) {
  const auto start = store.mark();
  std::vector<std::pair<Term, Term>> work{{a, b}};
  // Without the occurs check the store may hold cycles; compound pairs
  // already under comparison are assumed equal so the walk terminates.
  std::set<std::pair<const void*, const void*>> seen;
  while (!work.empty()) {
    auto [x0, y0] = std::move(work.back());
    work.pop_back();
    Term x = deref(x0, store);
    Term y = deref(y0, store);
    if (x.node_address() == y.node_address()) continue;

    if (x.is_var() && y.is_var()) {
      if (x.var_id() == y.var_id()) continue;
      if (x.var_id() < y.var_id()) std::swap(x, y);
      store.bind(x.var_id(), y);
      continue;
    }
    if (y.is_var()) std::swap(x, y);
    if (x.is_var()) {
      if (occurs_check && occurs_in(x.var_id(), y, store)) {
        store.undo_to(start);
        return false;
      }
      store.bind(x.var_id(), y);
      continue;
    }

    bool same = false;
    switch (x.kind()) {
      case TermKind::Atom:
        same = y.is_atom() && x.name() == y.name();
        break;
      case TermKind::Integer:
        same = y.is_integer() && x.as_integer().value == y.as_integer().value;
        break;
      case TermKind::Compound:
        same = y.is_compound() && x.name() == y.name() && x.arity() == y.arity();
        if (same && !occurs_check && !seen.emplace(x.node_address(), y.node_address()).second) {
          break;
        }
        if (same) {
          // Push in reverse so arguments are processed left to right.
          for (std::size_t i = x.arity(); i-- > 0;) work.emplace_back(x.args()[i], y.args()[i]);
        }
        break;
      case TermKind::Var:
        break;
    }
    if (!same) {
      store.undo_to(start);
      return false;
    }
  }
  return true;
}

}  // namespace scd
