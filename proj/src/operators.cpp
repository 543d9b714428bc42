#include "scdprolog/operators.hpp"

#include <array>
#include <string_view>
#include <utility>

namespace scd {
namespace {

constexpr std::array<std::pair<std::string_view, OperatorDef>, 18> kInfix{{
    {":-", {1200, Fixity::InfixNon}},
    {";;", {1100, Fixity::InfixRight}},
    {";", {1100, Fixity::InfixRight}},
    {"*->", {1050, Fixity::InfixRight}},
    {",", {1000, Fixity::InfixRight}},
    {"=", {700, Fixity::InfixNon}},
    {"\\=", {700, Fixity::InfixNon}},
    {"<", {700, Fixity::InfixNon}},
    {"=<", {700, Fixity::InfixNon}},
    {">", {700, Fixity::InfixNon}},
    {">=", {700, Fixity::InfixNon}},
    {"is", {700, Fixity::InfixNon}},
    {"+", {500, Fixity::InfixLeft}},
    {"-", {500, Fixity::InfixLeft}},
    {"*", {400, Fixity::InfixLeft}},
    {"//", {400, Fixity::InfixLeft}},
    {"mod", {400, Fixity::InfixLeft}},
    {":", {200, Fixity::InfixNon}},
}};

}  // namespace

std::optional<OperatorDef> infix_operator(std::string_view symbol) {
  for (const auto& [name, def] : kInfix) {
    if (name == symbol) return def;
  }
  return std::nullopt;
}

std::optional<OperatorDef> prefix_operator(std::string_view symbol) {
  if (symbol == ":-" || symbol == "?-") return OperatorDef{1200, Fixity::Prefix};
  return std::nullopt;
}

bool is_operator(std::string_view symbol) {
  return infix_operator(symbol).has_value() || prefix_operator(symbol).has_value();
}

bool is_symbol_char(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '\\': case '^': case '<':
    case '>': case '=': case '~': case ':': case '.': case '?': case '@':
    case '#': case '&': case '$': case ';':
      return true;
    default:
      return false;
  }
}

}  // namespace scd
