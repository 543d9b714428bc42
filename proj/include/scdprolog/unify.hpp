#pragma once

#include "scdprolog/term.hpp"

namespace scd {

/// Unifies `a` and `b`, extending `store` to a most general unifier.
///
/// Every new binding is trailed. On failure the store is restored to its
/// state before the call. Variable-variable pairs bind the higher id to the
/// lower one. The traversal uses an explicit worklist, so term depth is not
/// limited by the call stack.
bool unify(const Term& a, const Term& b, BindingStore& store, bool occurs_check = true);

/// True if variable `id` occurs in `t` under the bindings in `store`.
bool occurs_in(VarId id, const Term& t, const BindingStore& store);

}  // namespace scd
