#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using dlpa::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("model checking verdicts and exit codes") {
  auto r = invoke({"mc", "--model", "p,q", "~[+p u -p] q"});
  CHECK(r.code == 1);
  CHECK(r.out == "FALSE\n");

  r = invoke({"mc", "--model", "", "[~p ? ; +p] p"});
  CHECK(r.code == 0);
  CHECK(r.out == "TRUE\n");

  r = invoke({"mc", "--model", "p,q", "--algorithm", "full", "~[(+p u -p)*] q"});
  CHECK(r.code == 1);
  CHECK(first_line(r.out) == "FALSE");
}

TEST_CASE("sat, valid and the oracles") {
  CHECK(invoke({"sat", "p & ~p"}).out == "UNSAT\n");
  CHECK(invoke({"sat", "p & ~p"}).code == 1);
  CHECK(invoke({"sat", "<+p> p"}).out == "SAT\n");
  CHECK(invoke({"valid", "[+p] p"}).out == "VALID\n");
  CHECK(invoke({"valid", "p"}).code == 1);
  CHECK(invoke({"oracle-mc", "--model", "p,q", "~[+p u -p] q"}).out == "FALSE\n");
  CHECK(invoke({"oracle-sat", "p & ~q"}).out == "SAT\n");
}

TEST_CASE("trace output") {
  const auto r = invoke({"mc", "--model", "p,q", "--trace", "~[+p u -p] q"});
  CHECK(r.out.find("1: RDiaChoice @ () : ~[+p u -p] q -> 2\n") != std::string::npos);
  CHECK(r.out.find("RESULT: closed\n") != std::string::npos);

  const auto open = invoke({"mc", "--trace", "[~p? ; +p] p"});
  CHECK(open.out.find("RESULT: open\n") != std::string::npos);
  CHECK(open.out.find("() | ~p | applicable") != std::string::npos);

  const auto star = invoke({"mc", "--model", "p,q", "--trace", "~[(+p u -p)*] q"});
  CHECK(star.out.find("exe(p*)") != std::string::npos);
  CHECK(star.out.find("EQ @ +p") != std::string::npos);
}

TEST_CASE("formula from standard input") {
  const auto r = invoke({"mc", "--model", "p,q", "-"}, "~[+p u -p] q\n");
  CHECK(r.code == 1);
  CHECK(r.out == "FALSE\n");
}

TEST_CASE("usage and parse errors") {
  auto r = invoke({"mc", "--model", "p", "p &"});
  CHECK(r.code == 2);
  CHECK(r.err.find("1:4") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(invoke({"mc", "--algorithm", "star-free", "[(+p)*] p"}).code == 2);
  CHECK(invoke({"mc", "--algorithm", "fast", "p"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"mc", "--model", "P", "p"}).code == 2);
}

TEST_CASE("oracle cap") {
  CHECK(invoke({"oracle-sat", "--oracle-cap", "2", "p & q & r"}).code == 3);
  CHECK(invoke({"oracle-sat", "--oracle-cap", "3", "p & q & r"}).code == 0);
  CHECK(invoke({"fuzz", "--max-atoms", "4", "--oracle-cap", "3"}).code == 3);
}

TEST_CASE("PDL translation") {
  const auto r = invoke({"translate-pdl", "[+p] p"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[a_pp] p") != std::string::npos);
  CHECK(invoke({"translate-pdl", "[{+p,-q}] r"}).code == 2);
}

TEST_CASE("fuzz") {
  const auto r = invoke({"fuzz", "--seed", "42", "--cases", "100", "--max-atoms", "3"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "ALL AGREE");
  CHECK(invoke({"fuzz", "--seed", "42", "--cases", "0"}).out.rfind("ALL AGREE\n", 0) == 0);

  const auto again = invoke({"fuzz", "--seed", "42", "--cases", "100", "--max-atoms", "3"});
  CHECK(again.out == r.out);

  const auto stars = invoke({"fuzz", "--seed", "7", "--cases", "100", "--stars"});
  CHECK(first_line(stars.out) == "ALL AGREE");
}

