// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every random sample uses a fixed seed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dlpa/measures.hpp"
#include "dlpa/parser.hpp"
#include "dlpa/random.hpp"
#include "dlpa/reductions.hpp"
#include "dlpa/semantics.hpp"
#include "dlpa/solver.hpp"

using namespace dlpa;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kQueryTimeout = 10.0;       // seconds, any single query
constexpr double kExampleBudget = 1.0;       // seconds, each worked example
constexpr double kEquivalenceBudget = 120.0; // seconds, criterion 2
constexpr double kValidityBudget = 60.0;     // seconds, criterion 3

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

GeneratorConfig config(std::size_t atoms, std::size_t len, bool stars) {
  GeneratorConfig c;
  c.max_atoms = atoms;
  c.max_len = len;
  c.star_probability = stars ? 0.15 : 0.0;
  c.max_star_nesting = 2;
  return c;
}

// Instrumentation bounds, checked on every query the run makes.
struct Bounds {
  std::size_t queries = 0;
  std::size_t violations = 0;
  std::string first;
  double slowest = 0.0;

  void check(const Verdict& v, const Formula& f0, bool star_free, double elapsed) {
    ++queries;
    slowest = std::max(slowest, elapsed);
    const std::size_t len = length(f0);
    std::string why;
    if (star_free) {
      if (v.stats.max_labels_per_call != 1) why = "labels per call";
      else if (v.stats.max_formulas_per_call > 2 * len) why = "formulas per call";
      else if (v.stats.max_depth > len) why = "successor depth";
    } else if (2 * len < 64 && v.stats.cache_size > (std::uint64_t{1} << (2 * len))) {
      why = "signature cache";
    }
    if (!why.empty()) {
      if (violations == 0) first = why + " on " + render(f0);
      ++violations;
    }
  }
};

Bounds bounds;

Verdict timed_check(const Valuation& v, const Formula& f, Algorithm alg,
                    const SolverOptions& options = {}) {
  const auto t0 = Clock::now();
  Verdict out = model_check(v, f, alg, options);
  const bool star_free = alg == Algorithm::StarFree || (alg == Algorithm::Auto && is_star_free(f));
  bounds.check(out, f, star_free, seconds_since(t0));
  return out;
}

Verdict timed_valid(const Formula& f) {
  const auto t0 = Clock::now();
  Verdict out = valid(f);
  bounds.check(out, sat_to_mc(Formula::negate(f)).formula, is_star_free(f), seconds_since(t0));
  return out;
}

int failures = 0;

void report(int n, const char* title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", n, title, detail.c_str());
  std::fflush(stdout);
}

std::vector<std::string> rules_of(const Verdict& v) {
  std::vector<std::string> out;
  for (const auto& s : v.trace->steps) out.push_back(s.rule);
  return out;
}

void worked_examples() {
  std::string detail;
  bool ok = true;

  auto run = [&](const char* name, const char* model, const char* text, Algorithm alg,
                 const std::function<bool(const Verdict&)>& shape) {
    const auto t0 = Clock::now();
    const Verdict v = timed_check(parse_valuation(model), parse_formula(text), alg);
    const double t = seconds_since(t0);
    const bool good = shape(v) && t < kExampleBudget;
    ok = ok && good;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%s %s %.3fs", detail.empty() ? "" : ", ", name,
                  good ? "ok" : "wrong", t);
    detail += buf;
  };

  run("choice", "p,q", "~[+p u -p] q", Algorithm::StarFree, [](const Verdict& v) {
    return !v.answer && !v.trace->open &&
           rules_of(v) == std::vector<std::string>{"RDiaChoice", "RDiaAtom", "RP1", "CLOSED",
                                                   "RDiaAtom", "RP1", "CLOSED"};
  });
  run("test-then-set", "", "[~p? ; +p] p", Algorithm::StarFree, [](const Verdict& v) {
    return v.answer && v.trace->open &&
           rules_of(v) == std::vector<std::string>{"RBoxSeq", "RBoxTest", "CLOSED", "RBoxAtom"};
  });
  run("starred choice", "p,q", "~[(+p u -p)*] q", Algorithm::Full, [](const Verdict& v) {
    const auto r = rules_of(v);
    return !v.answer && !v.trace->open && r.front() == "RDiaStar" &&
           std::count(r.begin(), r.end(), "EQ") > 0 &&
           std::count(r.begin(), r.end(), "UNFULFILLED") > 0;
  });
  report(1, "worked examples", ok, detail);
}

void oracle_equivalence() {
  const auto t0 = Clock::now();
  std::size_t agree_sf = 0;
  std::size_t agree_st = 0;
  std::size_t keep_body_wrong = 0;
  std::string first;

  FormulaGenerator sf(20240601, config(4, 30, false));
  for (int i = 0; i < 1000; ++i) {
    const Formula f = sf.formula();
    const Valuation v = sf.valuation();
    const bool truth = eval(v, f);
    const bool a = timed_check(v, f, Algorithm::StarFree).answer;
    const bool b = timed_check(v, f, Algorithm::Full).answer;
    if (a == truth && b == truth) ++agree_sf;
    else if (first.empty()) first = render(f);
  }

  SolverOptions keep_body;
  keep_body.dia_star = DiaStarForm::KeepBody;
  FormulaGenerator st(20240602, config(3, 25, true));
  for (int i = 0; i < 500; ++i) {
    const Formula f = st.formula();
    const Valuation v = st.valuation();
    const bool truth = eval(v, f);
    if (timed_check(v, f, Algorithm::Full).answer == truth) ++agree_st;
    else if (first.empty()) first = render(f);
    if (model_check(v, f, Algorithm::Full, keep_body).answer != truth) ++keep_body_wrong;
  }

  const double t = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof buf, "star-free %zu/1000, starred %zu/500, %.1fs", agree_sf, agree_st,
                t);
  std::string detail = buf;
  if (!first.empty()) detail += ", first disagreement " + first;
  report(2, "oracle equivalence", agree_sf == 1000 && agree_st == 500 && t < kEquivalenceBudget,
         detail);
  std::printf("  note: when R<*> keeps f in its second child the full procedure misses %zu/500 "
              "starred instances\n",
              keep_body_wrong);
}

void validity_suite() {
  const auto t0 = Clock::now();
  FormulaGenerator gen(20240603, config(3, 5, true));
  const std::size_t per_schema = 200;
  std::vector<std::size_t> valid_count(7, 0);
  std::string first;

  for (std::size_t i = 0; i < per_schema; ++i) {
    const Formula phi = gen.formula(1 + gen.below(5));
    const Formula psi = gen.formula(1 + gen.below(5));
    const Program p1 = gen.program(1 + gen.below(4));
    const Program p2 = gen.program(1 + gen.below(4));
    const Assignment a = gen.assignment();
    const Program alpha = Program::atomic(a);
    const Atom& q = gen.atoms()[gen.below(gen.atoms().size())];
    Formula image = Formula::prop(q);
    if (auto value = a.value(q)) image = *value ? Formula::top() : Formula::bot();

    const Formula schemata[7] = {
        Formula::iff(Formula::box(alpha, Formula::prop(q)), image),
        Formula::iff(Formula::box(Program::test(psi), phi), Formula::implies(psi, phi)),
        // Only deterministic programs commute with negation.
        Formula::iff(Formula::box(alpha, Formula::negate(phi)),
                     Formula::negate(Formula::box(alpha, phi))),
        Formula::iff(Formula::box(p1, Formula::conj(phi, psi)),
                     Formula::conj(Formula::box(p1, phi), Formula::box(p1, psi))),
        Formula::iff(Formula::box(Program::seq(p1, p2), phi),
                     Formula::box(p1, Formula::box(p2, phi))),
        Formula::iff(Formula::box(Program::choice(p1, p2), phi),
                     Formula::conj(Formula::box(p1, phi), Formula::box(p2, phi))),
        Formula::iff(Formula::box(Program::star(p1), phi),
                     Formula::conj(phi, Formula::box(p1, Formula::box(Program::star(p1), phi)))),
    };
    for (std::size_t k = 0; k < 7; ++k) {
      if (timed_valid(schemata[k]).answer) ++valid_count[k];
      else if (first.empty()) first = render(schemata[k]);
    }
  }

  const double t = seconds_since(t0);
  bool ok = t < kValidityBudget;
  std::string detail;
  for (std::size_t k = 0; k < 7; ++k) {
    ok = ok && valid_count[k] == per_schema;
    detail += (k ? " " : "") + std::to_string(valid_count[k]);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " of %zu valid per schema, %.1fs", per_schema, t);
  detail += buf;
  if (!first.empty()) detail += ", first invalid " + first;
  report(3, "validity of the seven principles", ok, detail);
}

void reductions() {
  FormulaGenerator gen(20240604, config(4, 16, true));
  std::size_t sat_ok = 0;
  std::size_t mc_ok = 0;
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula();
    const McInstance inst = sat_to_mc(f);
    if (oracle_sat(f) == eval(inst.model, inst.formula)) ++sat_ok;
    const Formula g = gen.formula();
    const Valuation v = gen.valuation();
    if (eval(v, g) == oracle_sat(mc_to_sat(v, g))) ++mc_ok;
  }
  report(4, "reduction equivalences", sat_ok == 500 && mc_ok == 500,
         "sat->mc " + std::to_string(sat_ok) + "/500, mc->sat " + std::to_string(mc_ok) + "/500");
}

void structural_bounds() {
  FormulaGenerator gen(20240605, config(4, 30, true));
  std::size_t closure_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula();
    const std::size_t len = length(f);
    if (closure(f).size() <= len && extended_closure(f).size() <= 2 * len) ++closure_ok;
  }
  FormulaGenerator pgen(20240606, config(4, 30, false));
  std::size_t traces_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const Program p = pgen.program(1 + pgen.below(20));
    bool ok = true;
    for (const Trace& t : exe_traces(p, 0)) ok = ok && length(t) <= length(p);
    if (ok) ++traces_ok;
  }
  std::string detail = "closure " + std::to_string(closure_ok) + "/1000, traces " +
                       std::to_string(traces_ok) + "/1000, instrumentation " +
                       std::to_string(bounds.queries - bounds.violations) + "/" +
                       std::to_string(bounds.queries) + " queries";
  if (!bounds.first.empty()) detail += ", first violation " + bounds.first;
  report(5, "structural bounds", closure_ok == 1000 && traces_ok == 1000 && bounds.violations == 0,
         detail);
}

void emitter_sizes() {
  FormulaGenerator gen(20240607, config(4, 30, true));
  std::size_t within = 0;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula();
    if (reduction_length(f) <= 3 * length(f) + 2) ++within;
  }
  const char* inputs[] = {"[+p] p", "[+p ; -q] (p & q)", "[(+p u -q)*] <+r> (p & ~r)"};
  std::string counts;
  bool gamma_ok = true;
  for (const char* text : inputs) {
    const Formula f = parse_formula(text);
    const std::size_t n = vocabulary(f).size();
    const std::size_t got = emit_pdl_embedding(f).clause_count();
    gamma_ok = gamma_ok && got == 4 * n + 2 * n * (n - 1);
    counts += (counts.empty() ? "" : " ") + ("n=" + std::to_string(n)) + ":" + std::to_string(got);
  }
  report(6, "emitter sizes", within == 1000 && gamma_ok,
         "sat->mc length " + std::to_string(within) + "/1000 within 3len+2, gamma clauses " + counts);
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

// Runs before criterion 5 reports so that its queries are instrumented too.
Outcome termination() {
  FormulaGenerator gen(20240608, config(3, 20, true));
  std::size_t same_verdict = 0;
  std::size_t changed_trace = 0;
  for (int i = 0; i < 200; ++i) {
    const Formula f = gen.formula();
    const Valuation v = gen.valuation();
    const Verdict base = timed_check(v, f, Algorithm::Auto);
    SolverOptions options;
    options.picker = PickerMode::Shuffled;
    options.seed = 5000 + static_cast<std::uint64_t>(i);
    const Verdict shuffled = timed_check(v, f, Algorithm::Auto, options);
    if (shuffled.answer == base.answer) ++same_verdict;
    if (shuffled.trace->serialize() != base.trace->serialize()) ++changed_trace;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "shuffled verdicts %zu/200 unchanged, traces changed on %zu", same_verdict,
                changed_trace);
  return {same_verdict == 200 && changed_trace > 0, buf};
}

}  // namespace

int main() {
  worked_examples();
  oracle_equivalence();
  validity_suite();
  reductions();
  const Outcome order = termination();
  structural_bounds();
  emitter_sizes();
  char buf[96];
  std::snprintf(buf, sizeof buf, "slowest of %zu queries %.3fs, ", bounds.queries, bounds.slowest);
  report(7, "termination and order independence", order.ok && bounds.slowest < kQueryTimeout,
         buf + order.detail);
  return failures == 0 ? 0 : 1;
}
