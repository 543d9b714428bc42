#include "doctest.h"

#include <fstream>
#include <sstream>

#include "scdprolog/errors.hpp"
#include "scdprolog/oracle.hpp"
#include "scdprolog/parser.hpp"
#include "scdprolog/solver.hpp"
#include "support/generators.hpp"

using namespace scd;

namespace {

std::vector<std::string> answers(std::string_view program, std::string_view query,
                                 EngineOptions opts = {}) {
  const Program p = parse_program(program);
  std::vector<std::string> out;
  for (const auto& s : solve_all(p, parse_query(query), opts)) out.push_back(format_solution(s));
  return out;
}

using Strings = std::vector<std::string>;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("solve: flight example") {
  const std::string flights = slurp(std::string(SCD_CORPUS_DIR) + "/flights.scd");
  CHECK(answers(flights, "panam(paris,london,D,A) ;; delta(paris,london,D,A).") ==
        Strings{"D = 9:24, A = 9:50"});
  CHECK(answers(flights, "panam(paris,london,D,A).").empty());
}

TEST_CASE("solve: trivial disjunctions") {
  CHECK(answers("", "true ;; fail.") == Strings{"true"});
  CHECK(answers("", "fail ;; true.") == Strings{"true"});
  CHECK(answers("", "fail ;; fail.").empty());
  // `fail` in the second disjunct must never run: an unknown predicate there
  // would raise under strict_unknown.
  CHECK(answers("", "true ;; nosuch.", {.strict_unknown = true}) == Strings{"true"});
}

TEST_CASE("solve: first disjunct keeps all of its answers") {
  const char* prog = "p(1). p(2). q(3).";
  CHECK(answers(prog, "p(X) ;; q(X).") == Strings{"X = 1", "X = 2"});
  CHECK(answers(prog, "r(X) ;; p(X).") == Strings{"X = 1", "X = 2"});
  CHECK(answers("q(1). q(2). r(9).", "q(X) ;; r(X).") == Strings{"X = 1", "X = 2"});
  CHECK(answers("p(1). q(2).", "(fail ;; p(X)) ;; q(X).") == Strings{"X = 1"});
}

TEST_CASE("solve: answers continue after the commit point") {
  // The first disjunct's answers are each extended by the continuation.
  CHECK(answers("p(1). p(2). p(3).", "(p(X) ;; X = 0), X > 1.") == Strings{"X = 2", "X = 3"});
  // No answer from the continuation does not re-open the second disjunct.
  CHECK(answers("p(1).", "(p(X) ;; X = 5), X > 1.").empty());
}

TEST_CASE("solve: unbound and aliased answer variables") {
  CHECK(answers("", "X = Y.") == Strings{"Y = X"});
  CHECK(answers("p(_).", "p(X).") == Strings{"true"});
  CHECK(answers("p(f(_)).", "p(X).")[0].starts_with("X = f(_G"));
}

TEST_CASE("backchain") {
  SUBCASE("fact: success without choice point") {
    const Program p = parse_program("a.");
    Engine e(p, parse_query("a."));
    CHECK(e.next());
    CHECK(e.choicepoints().empty());
    CHECK(e.step_count() == 1);
    CHECK_FALSE(e.next());
  }
  SUBCASE("rule body becomes the next goal") {
    const Program p = parse_program("s :- t. t.");
    Engine e(p, parse_query("s."));
    CHECK(e.next());
    CHECK(e.step_count() == 2);
  }
  SUBCASE("remaining clauses are a choice point") {
    const Program p = parse_program("p(a). p(b).");
    Engine e(p, parse_query("p(X)."));
    auto s1 = e.next();
    REQUIRE(s1);
    CHECK(format_solution(*s1) == "X = a");
    REQUIRE(e.choicepoints().size() == 1);
    CHECK(e.choicepoints()[0].kind == ChoicePointKind::ClauseAlt);
    auto s2 = e.next();
    REQUIRE(s2);
    CHECK(format_solution(*s2) == "X = b");
    CHECK_FALSE(e.has_alternatives());
    CHECK_FALSE(e.next());
  }
  SUBCASE("clauses that cannot match leave no choice point") {
    const Program p = parse_program("p(a). p(b).");
    Engine e(p, parse_query("p(a)."));
    CHECK(e.next());
    CHECK_FALSE(e.has_alternatives());
  }
}

TEST_CASE("builtins") {
  CHECK(answers("", "X is 2+3.") == Strings{"X = 5"});
  CHECK(answers("", "X is 7 // 2, Y is -7 // 2, Z is -7 mod 2.") == Strings{"X = 3, Y = -3, Z = 1"});
  CHECK(answers("", "X is 2 * (3 - 5).") == Strings{"X = -4"});
  CHECK(answers("", "2 < 1.").empty());
  CHECK(answers("", "1 =< 1, 2 >= 1, 3 > 2.") == Strings{"true"});
  CHECK(answers("", "X \\= f(X).") == Strings{"true"});
  CHECK(answers("", "a \\= a.").empty());
  CHECK(answers("", "X = f(X).").empty());
  // The binding is made; reporting it needs resolve, which refuses cycles.
  CHECK_THROWS_AS(answers("", "X = f(X).", {.occurs_check = false}), CyclicTerm);
  CHECK(answers("", "_X = f(_X).", {.occurs_check = false}) == Strings{"true"});
  CHECK(answers("", "X = 1, X = 1.") == Strings{"X = 1"});

  CHECK_THROWS_AS(answers("", "X is a + 1."), TypeError);
  CHECK_THROWS_AS(answers("", "X is Y + 1."), InstantiationError);
  CHECK_THROWS_AS(answers("", "X < 3."), InstantiationError);
  CHECK_THROWS_AS(answers("", "X is 1 // 0."), EvaluationError);
  CHECK_THROWS_AS(answers("", "X is 9223372036854775807 + 1."), EvaluationError);
}

TEST_CASE("\\= leaves no bindings behind") {
  const Program p;
  Engine e(p, parse_query("f(X, b) \\= f(a, c)."));
  CHECK(e.next());
  CHECK(e.store().size() == 0);
}

TEST_CASE("unknown predicates") {
  CHECK(answers("", "nosuch(1).").empty());
  CHECK_THROWS_AS(answers("", "nosuch(1).", {.strict_unknown = true}), UnknownPredicate);
  // Defined with another arity still counts as unknown.
  CHECK_THROWS_AS(answers("p(1).", "p(1, 2).", {.strict_unknown = true}), UnknownPredicate);
}

TEST_CASE("depth limit") {
  const Program p = parse_program("loop :- loop. nat(0). nat(N) :- nat(M), N is M + 1.");
  SUBCASE("divergence in the first disjunct is not failure") {
    Engine e(p, parse_query("loop ;; true."), {.depth_limit = 50});
    CHECK_THROWS_AS(e.next(), DepthLimitExceeded);
    CHECK(e.step_count() == 50);
    CHECK(e.exhausted());
    CHECK(e.store().size() == 0);
  }
  SUBCASE("infinite answer stream is usable lazily") {
    Engine e(p, parse_query("nat(X)."), {.depth_limit = 10000});
    for (int i = 0; i < 5; ++i) {
      auto s = e.next();
      REQUIRE(s);
      CHECK(*s->find("X") == Term::integer(i));
    }
  }
  SUBCASE("step count grows with every call") {
    Engine e(p, parse_query("nat(X)."));
    std::uint64_t last = 0;
    for (int i = 0; i < 20; ++i) {
      REQUIRE(e.next());
      CHECK(e.step_count() > last);
      last = e.step_count();
    }
  }
}

TEST_CASE("deep recursion does not exhaust the stack") {
  const Program p = parse_program(
      "count(0) :- true. count(N) :- N > 0, M is N - 1, count(M).\n"
      "len([], 0). len([_|T], N) :- len(T, M), N is M + 1.");
  CHECK(solve_all(p, parse_query("count(200000).")).size() == 1);
  const auto s = solve_all(p, parse_query("count(5000), len([a,b,c,d], N)."));
  REQUIRE(s.size() == 1);
  CHECK(format_solution(s[0]) == "N = 4");
}

TEST_CASE("commit removes exactly its barrier") {
  const Program p = parse_program("p(1). p(2). p(3). q(9).");
  Engine e(p, parse_query("p(X) ;; q(X)."));
  std::vector<CommitEvent> events;
  e.set_commit_observer([&](const CommitEvent& ev) { events.push_back(ev); });

  REQUIRE(e.next());
  REQUIRE(events.size() == 1);
  const auto& ev = events[0];
  CHECK(ev.removed);
  REQUIRE(ev.before.size() == ev.after.size() + 1);
  CHECK(ev.before[0].kind == ChoicePointKind::ScdAlt);
  CHECK(ev.before[0].barrier_id == ev.barrier_id);
  CHECK(std::vector<ChoicePointInfo>(ev.before.begin() + 1, ev.before.end()) == ev.after);
  for (const auto& cp : e.choicepoints()) CHECK(cp.kind == ChoicePointKind::ClauseAlt);

  REQUIRE(e.next());
  REQUIRE(e.next());
  CHECK_FALSE(e.next());
  REQUIRE(events.size() == 3);
  CHECK_FALSE(events[1].removed);
  CHECK(events[1].before == events[1].after);
}

TEST_CASE("backtrack purity") {
  testing::Rng rng(7);
  testing::ProgramShape shape;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto inst = testing::random_program(rng, shape);
    const Goal g = testing::random_goal(rng, inst, shape);
    Engine e(inst.program, g, {.depth_limit = 20000});
    try {
      while (e.next()) {
      }
    } catch (const DepthLimitExceeded&) {
      continue;
    }
    CHECK(e.store().size() == 0);
    CHECK(e.store().trail_size() == 0);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("first-success law on random instances") {
  testing::Rng rng(11);
  testing::ProgramShape shape;
  const oracle::OracleLimits limits{.depth_bound = 200, .node_budget = 200000};
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const auto inst = testing::random_program(rng, shape);
    const Goal g0 = testing::random_goal(rng, inst, shape);
    const Goal g1 = testing::random_goal(rng, inst, shape);
    const auto r0 = oracle::oracle_solve(inst.program, g0, limits);
    const auto r1 = oracle::oracle_solve(inst.program, g1, limits);
    if (r0.outcome != oracle::Outcome::Solutions || r1.outcome != oracle::Outcome::Solutions) continue;
    ++checked;

    const Goal g = Goal::scd(g0, g1);
    const auto got = solve_all(inst.program, g);
    const bool first = !r0.solutions.empty();
    const auto& expected = first ? r0.solutions : r1.solutions;
    const auto names = answer_variables(first ? g0 : g1);
    std::vector<Bindings> projected;
    for (const auto& s : got) projected.push_back(testing::project(s.bindings, names));
    INFO(format_goal(g, {.use_hints = true}));
    INFO(format_program(inst.program));
    CHECK(testing::same_answers(projected, expected));
  }
  CHECK(checked > 100);
}
