#include <doctest.h>

#include <algorithm>

#include "dlpa/error.hpp"
#include "dlpa/measures.hpp"
#include "support.hpp"

using namespace dlpa;
using dlpa::test::F;
using dlpa::test::P;

namespace {

Program plus(const char* p) { return Program::atomic(Assignment::set_true(Atom(p))); }
Program minus(const char* p) { return Program::atomic(Assignment::set_false(Atom(p))); }

FormulaSet set_of(std::initializer_list<const char*> texts) {
  FormulaSet out;
  for (const char* t : texts) out.insert(F(t));
  return out;
}

bool subset(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("atoms and assignments") {
  CHECK(Atom::is_valid_name("p"));
  CHECK(Atom::is_valid_name("x_1A"));
  CHECK_FALSE(Atom::is_valid_name("P"));
  CHECK_FALSE(Atom::is_valid_name(""));
  CHECK_FALSE(Atom::is_valid_name("1p"));
  CHECK_THROWS_AS(Atom("Bad"), PreconditionError);

  CHECK_THROWS_AS(Assignment({}), PreconditionError);
  CHECK_THROWS_AS(Assignment({{Atom("p"), true}, {Atom("p"), false}}), PreconditionError);

  const Assignment a({{Atom("q"), false}, {Atom("p"), true}});
  CHECK(a.size() == 2);
  CHECK(a.in_domain(Atom("p")));
  CHECK_FALSE(a.in_domain(Atom("r")));
  CHECK(a.value(Atom("q")) == false);
  CHECK_FALSE(a.value(Atom("r")).has_value());
  CHECK(render(a) == "{+p,-q}");
}

TEST_CASE("parse builds the core tree") {
  CHECK(F("~[+p | -p] q") ==
        Formula::negate(Formula::box(Program::choice(plus("p"), minus("p")), prop("q"))));
  CHECK(F("[ ~p ? ; +p ] p") ==
        Formula::box(Program::seq(Program::test(Formula::negate(prop("p"))), plus("p")), prop("p")));
  CHECK(F("p") == prop("p"));
  CHECK(F("~[+p u -p] q") == F("~[+p | -p] q"));
}

TEST_CASE("derived connectives desugar") {
  CHECK(F("<+p> q") == Formula::negate(Formula::box(plus("p"), Formula::negate(prop("q")))));
  CHECK(F("p | q") == Formula::negate(Formula::conj(Formula::negate(prop("p")),
                                                    Formula::negate(prop("q")))));
  CHECK(F("p -> q") == Formula::negate(Formula::conj(prop("p"), Formula::negate(prop("q")))));
  CHECK(F("top") == Formula::top());
  CHECK(F("bot") == Formula::negate(Formula::top()));
  CHECK(F("p -> q -> r") == F("p -> (q -> r)"));
  CHECK(F("p & q | r") == F("(p & q) | r"));
  CHECK(F("~p & q") == F("(~p) & q"));
  CHECK(F("[+p ; -q u +r] s") == F("[(+p ; -q) u +r] s"));
  CHECK(F("[+p*; q?] s") == F("[(+p)* ; (q?)] s"));
  CHECK(F("p # trailing comment\n & q") == F("p & q"));
}

TEST_CASE("render is canonical") {
  CHECK(render(prop("p")) == "p");
  CHECK(render(F("~(p & q)")) == "~(p & q)");
  CHECK(render(F("[{-q,+p}] p")) == "[{+p,-q}] p");
  CHECK(render(F("~[+p u -p] q")) == "~[+p u -p] q");
  CHECK(render(Trace{}) == "()");
  CHECK(render(Trace{Assignment::set_true(Atom("p")), Assignment::set_false(Atom("q"))}) ==
        "+p.-q");
}

TEST_CASE("render round-trips on random formulas") {
  GeneratorConfig config = dlpa::test::starred_config(4, 30);
  config.multi_atom_assignments = true;
  FormulaGenerator gen(7, config);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula();
    CHECK(parse_formula(render(f)) == f);
  }
}

TEST_CASE("parse errors carry a location") {
  try {
    (void)F("p &");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    (void)F("p &\n  [+q r");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(F("[{}] p"), EmptyAssignmentError);
  CHECK_THROWS_AS(F("[{+p,-p}] p"), ParseError);
  CHECK_THROWS_AS(F("p0"), ParseError);
  CHECK_THROWS_AS(F("[+p] "), ParseError);
  CHECK_THROWS_AS(F("p q"), ParseError);
  CHECK_THROWS_AS(F("P"), ParseError);
}

TEST_CASE("length") {
  CHECK(length(F("p")) == 1);
  CHECK(length(F("[{+p,-q}] r")) == 4);
  CHECK(length(F("~[+p u -p] q")) == 6);
  CHECK(length(P("(+p)*")) == 2);
  CHECK(length(P("p?")) == 2);
  CHECK(length(Trace{Assignment::set_true(Atom("p"))}) == 1);
}

TEST_CASE("closure follows the table") {
  CHECK(closure(F("p")) == set_of({"p"}));
  CHECK(closure(F("[+p] q")) == set_of({"[+p] q", "p", "q"}));
  CHECK(closure(F("~p")) == set_of({"~p", "p"}));
  CHECK(extended_closure(F("p")) == set_of({"p", "~p"}));
  CHECK(extended_closure(F("[+p] q")).size() == 6);
  CHECK(subset(set_of({"~p", "p", "~~p"}), extended_closure(F("~p"))));
}

TEST_CASE("full closure reaches the second half of a sequence") {
  const Formula f = F("[+p ; -q] r");
  CHECK_FALSE(closure(f).count(F("[-q] r")));
  CHECK(full_closure(f).count(F("[-q] r")));
  CHECK(full_closure(f).count(F("q")));
  CHECK(subset(closure(f), full_closure(f)));
}

TEST_CASE("vocabulary") {
  CHECK(vocabulary(F("~[+p u -p] q")) == AtomSet{Atom("p"), Atom("q")});
  CHECK(vocabulary(F("p & p")) == AtomSet{Atom("p")});
  CHECK(vocabulary(F("[q?] r")) == AtomSet{Atom("q"), Atom("r")});
  CHECK(vocabulary(F("[+p ; -q] r")) == AtomSet{Atom("p"), Atom("q"), Atom("r")});
  CHECK(vocabulary(P("(+s ; t?)*")) == AtomSet{Atom("s"), Atom("t")});
}

TEST_CASE("execution traces") {
  const Trace tp{Assignment::set_true(Atom("p"))};
  const Trace tm{Assignment::set_false(Atom("p"))};
  CHECK(exe_traces(P("+p u -p"), 0) == std::set<Trace>{tp, tm});
  CHECK(exe_traces(P("p?"), 0) == std::set<Trace>{Trace{}});
  CHECK(exe_traces(P("(+p)*"), 2) ==
        std::set<Trace>{Trace{}, tp, Trace{tp[0], tp[0]}});
  CHECK(exe_traces(P("+p ; -p"), 0) == std::set<Trace>{Trace{tp[0], tm[0]}});
}

TEST_CASE("star-freeness") {
  CHECK(is_star_free(F("~[+p u -p] q")));
  CHECK_FALSE(is_star_free(F("~[(+p u -p)*] q")));
  CHECK(is_star_free(F("[([p?] q)?] r")));
  CHECK_FALSE(is_star_free(F("[([+p*] q)?] r")));
}

TEST_CASE("box closure is bounded by the length") {
  FormulaGenerator gen(11, dlpa::test::starred_config(4, 30));
  for (int i = 0; i < 1000; ++i) {
    const Formula body = gen.formula(1 + gen.below(10));
    const Formula f = Formula::box(gen.program(1 + gen.below(20)), body);
    CHECK(box_closure(f).size() <= length(f));
  }
}

// Domain atoms are counted on top of the boxes that mention them, so the
// whole closure can outgrow the length.
TEST_CASE("closure can exceed the length") {
  const Formula f = F("[+q u +r] p");
  CHECK(length(f) == 5);
  CHECK(closure(f) == set_of({"[+q u +r] p", "[+q] p", "q", "[+r] p", "r", "p"}));
  CHECK(extended_closure(f).size() == 12);
}

TEST_CASE("star-free traces are no longer than the program") {
  FormulaGenerator gen(13, dlpa::test::star_free_config(4, 30));
  for (int i = 0; i < 1000; ++i) {
    const Program p = gen.program(1 + gen.below(20));
    for (const Trace& t : exe_traces(p, 0)) CHECK(length(t) <= length(p));
  }
}

TEST_CASE("full closure is closed") {
  FormulaGenerator gen(17, dlpa::test::starred_config(3, 20));
  for (int i = 0; i < 300; ++i) {
    const FormulaSet full = full_closure(gen.formula());
    for (const Formula& g : full) CHECK(subset(full_closure(g), full));
  }
  // The literal table is not: [+p][-q]r is in, [-q]r is not.
  const FormulaSet cl = closure(F("[+p ; -q] r"));
  CHECK(cl.count(F("[+p] [-q] r")));
  CHECK_FALSE(subset(closure(F("[+p] [-q] r")), cl));
}
