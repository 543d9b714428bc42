#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scdprolog/solver.hpp"
#include "scdprolog/term.hpp"

namespace scd {

struct SessionConfig {
  std::vector<std::string> files;
  EngineOptions engine;
  std::optional<std::size_t> max_solutions;
};

/// Exit statuses shared by every command.
enum ExitStatus : int { kExitAnswers = 0, kExitNoAnswers = 1, kExitError = 2 };

/// Loads `files` in order into one program. Errors are prefixed with the
/// offending path.
Program consult(const std::vector<std::string>& files);

/// Batch query: one answer per line, `;` lines between answers, then
/// `true.` or `false.`.
int run_query(const SessionConfig& config, std::string_view query, std::ostream& out,
              std::ostream& err);

/// Interactive loop over `in`. After each answer a line holding `;` asks for
/// the next one; any other line ends the query. `halt.` or end of input
/// leaves the loop.
int run_repl(const SessionConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Writes the standard-Prolog translation of the consulted program.
int run_translate(const SessionConfig& config, const std::string& output_path, std::ostream& err);

}  // namespace scd
