#pragma once

#include <optional>
#include <string>

#include "scdprolog/term.hpp"

namespace scd {

// Rewrites `G0 ;; G1` as the soft-cut conditional `( G0 *-> true ; G1 )`.
std::string translate_goal(const Goal& g);
std::string translate_clause(const Clause& c);

/// Standard Prolog text for `program`. With `occurs_check` the output
/// starts with a directive enabling it. When `query` is given it is emitted
/// as a clause for '$scd_query'/N over the query's answer variables.
std::string translate_to_std(const Program& program, const std::optional<Goal>& query = std::nullopt,
                             bool occurs_check = true);

}  // namespace scd
