#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "scdprolog/term.hpp"

namespace scd {

// true/0, fail/0, =/2, \=/2, </2, =</2, >/2, >=/2, is/2
bool is_builtin(std::string_view name, std::size_t arity);

/// Runs `goal` if it names a builtin: the result is whether it succeeded,
/// or nullopt for user predicates. Builtins are deterministic; on failure
/// the store is left as it was.
std::optional<bool> call_builtin(const Term& goal, BindingStore& store, bool occurs_check);

/// Integer value of an arithmetic expression over + - * // mod.
std::int64_t evaluate(const Term& expr, const BindingStore& store, std::string_view builtin);

}  // namespace scd
