#pragma once

#include <optional>
#include <string_view>

namespace scd {

enum class Fixity { InfixLeft, InfixRight, InfixNon, Prefix };

struct OperatorDef {
  int precedence;
  Fixity fixity;

  int left_max() const { return fixity == Fixity::InfixLeft ? precedence : precedence - 1; }
  int right_max() const { return fixity == Fixity::InfixRight ? precedence : precedence - 1; }
};

inline constexpr int kMaxPrecedence = 1200;
inline constexpr int kArgPrecedence = 999;

// Fixed table. `;` and `*->` exist only so translated standard-Prolog text
// can be read back; they are rejected as goals in programs.
std::optional<OperatorDef> infix_operator(std::string_view symbol);
// Only `:-` (directives) and `?-` (queries).
std::optional<OperatorDef> prefix_operator(std::string_view symbol);
bool is_operator(std::string_view symbol);

bool is_symbol_char(char c);

}  // namespace scd
