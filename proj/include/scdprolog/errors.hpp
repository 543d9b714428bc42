#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scd {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const Position&, const Position&) = default;
};

std::string to_string(const Position& pos);

/// Base class for every error the engine reports to its callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LexError : public Error {
 public:
  LexError(Position pos, const std::string& message);
  const Position& position() const { return pos_; }

 private:
  Position pos_;
};

class ParseError : public Error {
 public:
  ParseError(Position pos, std::string expected, std::string found);
  const Position& position() const { return pos_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  Position pos_;
  std::string expected_;
  std::string found_;
};

class BadClauseHead : public Error {
 public:
  BadClauseHead(Position pos, const std::string& detail);
  const Position& position() const { return pos_; }

 private:
  Position pos_;
};

class CyclicTerm : public Error {
 public:
  CyclicTerm();
};

class DepthLimitExceeded : public Error {
 public:
  explicit DepthLimitExceeded(std::uint64_t steps);
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_;
};

class UnknownPredicate : public Error {
 public:
  UnknownPredicate(const std::string& name, std::size_t arity);
};

class TypeError : public Error {
 public:
  TypeError(const std::string& builtin, const std::string& culprit);
};

class InstantiationError : public Error {
 public:
  explicit InstantiationError(const std::string& builtin);
};

// Division by zero and integer overflow inside is/2 and comparisons.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& builtin, const std::string& what);
};

}  // namespace scd
