#include "scdprolog/errors.hpp"

namespace scd {

std::string to_string(const Position& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

LexError::LexError(Position pos, const std::string& message)
    : Error(to_string(pos) + ": lexical error: " + message), pos_(pos) {}

ParseError::ParseError(Position pos, std::string expected, std::string found)
    : Error(to_string(pos) + ": syntax error: expected " + expected + ", found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

BadClauseHead::BadClauseHead(Position pos, const std::string& detail)
    : Error(to_string(pos) + ": bad clause head: " + detail), pos_(pos) {}

CyclicTerm::CyclicTerm() : Error("cyclic term encountered") {}

DepthLimitExceeded::DepthLimitExceeded(std::uint64_t steps)
    : Error("depth limit exceeded after " + std::to_string(steps) + " steps"), steps_(steps) {}

UnknownPredicate::UnknownPredicate(const std::string& name, std::size_t arity)
    : Error("unknown predicate " + name + "/" + std::to_string(arity)) {}

TypeError::TypeError(const std::string& builtin, const std::string& culprit)
    : Error("type error in " + builtin + ": integer expected, found " + culprit) {}

InstantiationError::InstantiationError(const std::string& builtin)
    : Error("instantiation error in " + builtin + ": arguments are not sufficiently instantiated") {}

EvaluationError::EvaluationError(const std::string& builtin, const std::string& what)
    : Error("evaluation error in " + builtin + ": " + what) {}

}  // namespace scd
