#include "scdprolog/translate.hpp"

#include "scdprolog/parser.hpp"

namespace scd {
namespace {

// Text plus the precedence of its principal operator.
struct Rendered {
  std::string text;
  int precedence;
};

Rendered render(const Goal& g) {
  switch (g.kind()) {
    case GoalKind::Atomic:
      // format_term already parenthesizes anything above argument precedence.
      return {format_term(g.term(), {.use_hints = true}), 999};
    case GoalKind::Conj: {
      Rendered l = render(g.left());
      Rendered r = render(g.right());
      if (l.precedence > 999) l.text = "(" + l.text + ")";
      if (r.precedence > 1000) r.text = "(" + r.text + ")";
      return {l.text + ", " + r.text, 1000};
    }
    case GoalKind::Scd: {
      Rendered c = render(g.left());
      Rendered e = render(g.right());
      if (c.precedence > 1049) c.text = "(" + c.text + ")";
      return {"( " + c.text + " *-> true ; " + e.text + " )", 0};
    }
  }
  return {"", 0};
}

}  // namespace

std::string translate_goal(const Goal& g) { return render(g).text; }

std::string translate_clause(const Clause& c) {
  std::string out = format_clause(Clause{c.head, std::nullopt}, {.use_hints = true});
  if (!c.body) return out;
  out.pop_back();  // '.'
  return out + " :- " + translate_goal(*c.body) + ".";
}

std::string translate_to_std(const Program& program, const std::optional<Goal>& query,
                             bool occurs_check) {
  std::string out;
  if (occurs_check) out += ":- set_prolog_flag(occurs_check, true).\n";
  for (const auto& c : program.clauses()) {
    out += translate_clause(c);
    out += '\n';
  }
  if (query) {
    const auto vars = answer_variables(*query);
    out += translate_clause(Clause{Term::compound("$scd_query", {vars.begin(), vars.end()}), *query});
    out += '\n';
  }
  return out;
}

}  // namespace scd
