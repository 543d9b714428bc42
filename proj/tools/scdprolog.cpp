#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scdprolog/session.hpp"

namespace {

void add_engine_flags(CLI::App& cmd, scd::SessionConfig& config, bool& no_occurs_check) {
  cmd.add_option("files", config.files, "Program files to consult, in order");
  cmd.add_option("--depth-limit", config.engine.depth_limit,
                 "Abort after this many backchaining steps");
  cmd.add_flag("--no-occurs-check", no_occurs_check, "Unify without the occurs check");
  cmd.add_flag("--strict-unknown", config.engine.strict_unknown,
               "Calling an undefined predicate is an error instead of a failure");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horn clause interpreter with sequential-choice disjunction (;;)", "scdprolog"};
  app.require_subcommand(1);

  scd::SessionConfig config;
  bool no_occurs_check = false;
  std::string query;
  std::string output;

  auto* run = app.add_subcommand("run", "Run one query and print every answer");
  add_engine_flags(*run, config, no_occurs_check);
  run->add_option("-q,--query", query, "Goal to solve")->required();
  run->add_option("-n,--max-solutions", config.max_solutions, "Stop after this many answers");

  auto* repl = app.add_subcommand("repl", "Interactive top level");
  add_engine_flags(*repl, config, no_occurs_check);
  repl->add_option("-n,--max-solutions", config.max_solutions, "Stop after this many answers");

  auto* translate = app.add_subcommand("translate", "Emit standard Prolog using soft-cut");
  translate->add_option("files", config.files, "Program files to consult, in order");
  translate->add_option("-o,--output", output, "Output .pl file")->required();
  translate->add_flag("--no-occurs-check", no_occurs_check, "Omit the occurs_check directive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : scd::kExitError;
  }
  config.engine.occurs_check = !no_occurs_check;

  if (*run) return scd::run_query(config, query, std::cout, std::cerr);
  if (*repl) return scd::run_repl(config, std::cin, std::cout, std::cerr);
  return scd::run_translate(config, output, std::cerr);
}
