#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scdprolog/errors.hpp"
#include "scdprolog/term.hpp"

namespace scd {

enum class TokenKind { Atom, Variable, Integer, Punct, End };

struct Token {
  TokenKind kind;
  std::string text;  // quoted atoms carry their unescaped name
  Position position;
  bool quoted = false;
  bool layout_before = false;  // whitespace or a comment precedes the token

  std::string describe() const;
};

/// Splits `source` into tokens. End marks a clause-terminating `.` (one
/// followed by layout, `%` or end of input).
std::vector<Token> tokenize(std::string_view source);

Program parse_program(std::string_view source);
/// Parses one goal terminated by `.`; a leading `?-` is skipped.
Goal parse_query(std::string_view source);
/// Parses one term terminated by `.`, without goal conversion.
Term parse_term(std::string_view source);
/// Reads every clause of `source` as a raw term. Accepts the full operator
/// table including `;`, `*->` and `:-` directives.
std::vector<Term> read_terms(std::string_view source);

/// Named variables of a query, in first-occurrence order. Variables whose
/// name starts with `_` are not reported.
std::vector<Term> answer_variables(const Goal& g);

}  // namespace scd
