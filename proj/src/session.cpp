#include "scdprolog/session.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "scdprolog/errors.hpp"
#include "scdprolog/parser.hpp"
#include "scdprolog/translate.hpp"

namespace scd {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Program consult(const std::vector<std::string>& files) {
  Program program;
  for (const auto& path : files) {
    const std::string source = read_file(path);
    try {
      program.append(parse_program(source));
    } catch (const Error& e) {
      throw Error(path + ":" + e.what());
    }
  }
  return program;
}

int run_query(const SessionConfig& config, std::string_view query, std::ostream& out,
              std::ostream& err) {
  try {
    const Program program = consult(config.files);
    std::string text = trim(query);
    if (text.empty() || text.back() != '.') text += " .";
    const Goal goal = parse_query(text);
    Engine engine(program, goal, config.engine);
    std::size_t count = 0;
    while (!config.max_solutions || count < *config.max_solutions) {
      auto s = engine.next();
      if (!s) break;
      if (count > 0) out << ";\n";
      out << format_solution(*s) << '\n';
      ++count;
    }
    out << (count > 0 ? "true." : "false.") << '\n';
    return count > 0 ? kExitAnswers : kExitNoAnswers;
  } catch (const Error& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run_repl(const SessionConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  Program program;
  try {
    program = consult(config.files);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::string line;
  while (true) {
    out << "?- " << std::flush;
    std::string query;
    while (std::getline(in, line)) {
      query += line;
      query += '\n';
      const std::string t = trim(query);
      if (!t.empty() && t.back() == '.') break;
      if (!t.empty()) out << "|    " << std::flush;
    }
    const std::string text = trim(query);
    if (text.empty()) {
      if (in) continue;
      out << '\n';
      return kExitAnswers;
    }
    if (text == "halt.") return kExitAnswers;

    try {
      Engine engine(program, parse_query(text), config.engine);
      std::size_t count = 0;
      while (true) {
        auto s = engine.next();
        if (!s) {
          out << "false.\n";
          break;
        }
        ++count;
        out << format_solution(*s);
        const bool capped = config.max_solutions && count >= *config.max_solutions;
        if (!engine.has_alternatives() || capped) {
          out << ".\n";
          break;
        }
        out << ' ' << std::flush;
        if (!std::getline(in, line) || trim(line) != ";") {
          out << ".\n";
          break;
        }
        out << ";\n";
      }
    } catch (const Error& e) {
      out.flush();
      err << "error: " << e.what() << '\n';
    }
    if (!in) {
      out << '\n';
      return kExitAnswers;
    }
  }
}

int run_translate(const SessionConfig& config, const std::string& output_path, std::ostream& err) {
  try {
    const Program program = consult(config.files);
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw Error(output_path + ": cannot open file for writing");
    out << translate_to_std(program, std::nullopt, config.engine.occurs_check);
    out.close();
    if (!out) throw Error(output_path + ": write failed");
    return kExitAnswers;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace scd
