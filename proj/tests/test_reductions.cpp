#include <doctest.h>

#include "dlpa/error.hpp"
#include "dlpa/measures.hpp"
#include "dlpa/reductions.hpp"
#include "support.hpp"

using namespace dlpa;
using dlpa::test::F;
using dlpa::test::P;

namespace {

AtomSet atoms(std::initializer_list<const char*> names) {
  AtomSet out;
  for (const char* n : names) out.insert(Atom(n));
  return out;
}

bool contains_line(const std::vector<std::string>& lines, const std::string& want) {
  for (const auto& l : lines) {
    if (l == want) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("master program") {
  CHECK(master_program(atoms({"p"})) == P("+p u -p"));
  CHECK(master_program(atoms({"q", "p"})) == P("(+p u -p) ; (+q u -q)"));
  CHECK(master_program(AtomSet{}) == Program::test(Formula::top()));
  CHECK(master_program(F("~[+p u -p] q")) == P("(+p u -p) ; (+q u -q)"));
}

TEST_CASE("satisfiability as model checking") {
  const McInstance inst = sat_to_mc(F("p"));
  CHECK(inst.model == Valuation{});
  CHECK(inst.formula == F("<+p u -p> p"));
  CHECK(eval(inst.model, inst.formula));
  CHECK_FALSE(eval(sat_to_mc(F("p & ~p")).model, sat_to_mc(F("p & ~p")).formula));
  CHECK_FALSE(eval(Valuation{}, sat_to_mc(F("~[+p] p")).formula));
}

TEST_CASE("model checking as satisfiability") {
  CHECK(mc_to_sat(Valuation{}, F("p")) == F("p & ~p"));
  CHECK(mc_to_sat(Valuation{"p"}, F("p")) == F("p & p"));
  CHECK(mc_to_sat(Valuation{"p", "q"}, F("~[+p u -p] q")) == F("~[+p u -p] q & p & q"));
  CHECK(mc_to_sat(Valuation{"r"}, F("~[+p u -p] q")) == F("~[+p u -p] q & ~p & ~q"));
}

TEST_CASE("reductions agree with the oracle on random instances") {
  FormulaGenerator gen(41, dlpa::test::starred_config(4, 16));
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula();
    const Valuation v = gen.valuation();
    const McInstance inst = sat_to_mc(f);
    CHECK(oracle_sat(f) == eval(inst.model, inst.formula));
    CHECK(eval(v, f) == oracle_sat(mc_to_sat(v, f)));
  }
}

TEST_CASE("reduction length is linear") {
  FormulaGenerator gen(43, dlpa::test::starred_config(4, 30));
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula();
    CHECK(reduction_length(f) <= 3 * length(f) + 2);
    CHECK(length(sat_to_mc(f).formula) == reduction_length(f) + 2);
  }
}

TEST_CASE("PDL embedding") {
  const PdlEmbedding e = emit_pdl_embedding(F("[+p] p"));
  CHECK(e.translation == "[a_pp] p");
  CHECK(contains_line(e.box_clauses, "[a_pp] p"));
  CHECK(contains_line(e.seriality_clauses, "<a_pp> true"));
  CHECK(e.text().find("[a_pp] p") != std::string::npos);

  const PdlEmbedding single = emit_pdl_embedding(F("p"));
  CHECK(single.box_clauses.size() == 2);
  CHECK(single.seriality_clauses.size() == 2);
  CHECK(single.frame_clauses.empty());

  CHECK_THROWS_AS(emit_pdl_embedding(F("[{+p,-q}] r")), PreconditionError);
}

TEST_CASE("gamma has 4n + 2n(n-1) clauses") {
  const char* inputs[] = {"p", "[+p] q", "[+p ; -q] r", "p & q & r", "[(+p u -q)*] (r & s)"};
  for (const char* text : inputs) {
    const Formula f = F(text);
    const std::size_t n = vocabulary(f).size();
    CHECK(emit_pdl_embedding(f).clause_count() == 4 * n + 2 * n * (n - 1));
  }
}

TEST_CASE("PDL embedding stays quadratic") {
  FormulaGenerator gen(47, dlpa::test::starred_config(4, 30));
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula();
    const std::size_t len = length(f);
    const PdlEmbedding e = emit_pdl_embedding(f);
    CHECK(e.symbol_count <= kPdlSizeFactor * len * len);
    CHECK(e.clause_count() <= kGammaSizeFactor * len * len);
  }
}
