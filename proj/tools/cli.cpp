#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "dlpa/error.hpp"
#include "dlpa/parser.hpp"
#include "dlpa/random.hpp"
#include "dlpa/reductions.hpp"
#include "dlpa/semantics.hpp"
#include "dlpa/solver.hpp"
#include "dlpa/tableau.hpp"

namespace dlpa::cli {

namespace {

struct Flags {
  std::string formula;
  std::string model;
  std::string algorithm = "auto";
  bool trace = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  FuzzConfig fuzz;
};

Algorithm parse_algorithm(const std::string& name) {
  if (name == "star-free") return Algorithm::StarFree;
  if (name == "full") return Algorithm::Full;
  return Algorithm::Auto;
}

std::string read_formula_text(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void print_trace(std::ostream& os, const Verdict& verdict) {
  if (verdict.trace) os << verdict.trace->serialize();
  if (verdict.stats.pre_states > 0) {
    os << "# eventualities read as fulfilled by <s.s', ~f> with s' in exe(p*)\n";
  }
  if (verdict.open_branch) {
    os << "# open branch at the root label\n" << dump(*verdict.open_branch);
  }
}

std::string describe(std::optional<bool> answer) {
  if (!answer) return "-";
  return *answer ? "true" : "false";
}

}  // namespace

FuzzReport fuzz(const FuzzConfig& config) {
  GeneratorConfig gen;
  gen.max_atoms = config.max_atoms;
  gen.max_len = config.max_len;
  gen.star_probability = config.stars ? 0.15 : 0.0;
  gen.max_star_nesting = 2;

  std::ostringstream body;
  for (std::size_t i = 0; i < config.cases; ++i) {
    const std::uint64_t seed = config.seed + i;
    FormulaGenerator g(seed, gen);
    const Formula f = g.formula();
    const Valuation v = g.valuation();
    const bool oracle = eval(v, f);
    std::optional<bool> star_free;
    if (is_star_free(f)) star_free = mc_star_free(v, f).answer;
    const bool full = mc_full(v, f).answer;
    if ((star_free && *star_free != oracle) || full != oracle) {
      std::ostringstream os;
      os << "DIVERGENCE\n";
      os << "case: " << i << "\n";
      os << "seed: " << seed << "\n";
      os << "model: " << format_valuation(v) << "\n";
      os << "formula: " << render(f) << "\n";
      os << "oracle: " << describe(oracle) << "\n";
      os << "star-free: " << describe(star_free) << "\n";
      os << "full: " << describe(full) << "\n";
      os << "replay: dlpa fuzz --seed " << seed << " --cases 1 --max-atoms " << config.max_atoms
         << " --max-len " << config.max_len << (config.stars ? " --stars" : "") << "\n";
      return {false, os.str()};
    }
  }
  body << "ALL AGREE\n";
  body << "cases: " << config.cases << "\n";
  body << "seed: " << config.seed << "\n";
  return {true, body.str()};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Flags flags;
  CLI::App app{"Decision procedures for DL-PA", "dlpa"};
  app.require_subcommand(1);

  auto add_formula = [&flags](CLI::App* cmd) {
    cmd->add_option("formula", flags.formula, "Formula text, or - for standard input")->required();
  };
  auto add_algorithm = [&flags](CLI::App* cmd) {
    cmd->add_option("--algorithm", flags.algorithm, "auto, star-free or full")
        ->check(CLI::IsMember({"auto", "star-free", "full"}));
    cmd->add_flag("--trace", flags.trace, "Print the proof trace");
  };

  auto* mc = app.add_subcommand("mc", "Model checking with the tableau procedures");
  mc->add_option("--model", flags.model, "Atoms true in the model, comma separated");
  add_algorithm(mc);
  add_formula(mc);

  auto* sat_cmd = app.add_subcommand("sat", "Satisfiability");
  add_algorithm(sat_cmd);
  add_formula(sat_cmd);

  auto* valid_cmd = app.add_subcommand("valid", "Validity");
  add_algorithm(valid_cmd);
  add_formula(valid_cmd);

  auto* oracle_mc = app.add_subcommand("oracle-mc", "Model checking by direct evaluation");
  oracle_mc->add_option("--model", flags.model, "Atoms true in the model, comma separated");
  add_formula(oracle_mc);

  auto* oracle_sat_cmd = app.add_subcommand("oracle-sat", "Satisfiability by enumeration");
  oracle_sat_cmd->add_option("--oracle-cap", flags.oracle_cap, "Largest vocabulary to enumerate");
  add_formula(oracle_sat_cmd);

  auto* pdl = app.add_subcommand("translate-pdl", "Emit the PDL embedding");
  add_formula(pdl);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Compare the procedures with the oracle");
  fuzz_cmd->add_option("--seed", flags.fuzz.seed, "First seed");
  fuzz_cmd->add_option("--cases", flags.fuzz.cases, "Number of random instances");
  fuzz_cmd->add_option("--max-atoms", flags.fuzz.max_atoms, "Atoms per formula")
      ->check(CLI::Range(1, 8));
  fuzz_cmd->add_option("--max-len", flags.fuzz.max_len, "Largest formula length")
      ->check(CLI::Range(1, 200));
  fuzz_cmd->add_flag("--stars", flags.fuzz.stars, "Allow Kleene stars");
  fuzz_cmd->add_option("--oracle-cap", flags.oracle_cap, "Largest vocabulary to enumerate");

  std::vector<std::string> argv_store{"dlpa"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : kExitUsage;
  }

  std::ostringstream os;
  int status = kExitPositive;
  try {
    if (fuzz_cmd->parsed()) {
      if (flags.fuzz.max_atoms > flags.oracle_cap) throw InfeasibleSizeError(flags.fuzz.max_atoms, flags.oracle_cap);
      const FuzzReport report = fuzz(flags.fuzz);
      os << report.text;
      status = report.agree ? kExitPositive : kExitNegative;
    } else {
      const Formula f = parse_formula(read_formula_text(flags.formula, in));
      const Algorithm algorithm = parse_algorithm(flags.algorithm);
      if (algorithm == Algorithm::StarFree && !is_star_free(f)) {
        throw PreconditionError("--algorithm star-free given a formula with a star");
      }
      if (mc->parsed()) {
        const Verdict verdict = model_check(parse_valuation(flags.model), f, algorithm);
        os << (verdict.answer ? "TRUE" : "FALSE") << '\n';
        if (flags.trace) print_trace(os, verdict);
        status = verdict.answer ? kExitPositive : kExitNegative;
      } else if (sat_cmd->parsed()) {
        const Verdict verdict = sat(f, algorithm);
        os << (verdict.answer ? "SAT" : "UNSAT") << '\n';
        if (flags.trace) print_trace(os, verdict);
        status = verdict.answer ? kExitPositive : kExitNegative;
      } else if (valid_cmd->parsed()) {
        const Verdict verdict = valid(f, algorithm);
        os << (verdict.answer ? "VALID" : "INVALID") << '\n';
        if (flags.trace) print_trace(os, verdict);
        status = verdict.answer ? kExitPositive : kExitNegative;
      } else if (oracle_mc->parsed()) {
        const bool answer = eval(parse_valuation(flags.model), f);
        os << (answer ? "TRUE" : "FALSE") << '\n';
        status = answer ? kExitPositive : kExitNegative;
      } else if (oracle_sat_cmd->parsed()) {
        const bool answer = dlpa::oracle_sat(f, flags.oracle_cap);
        os << (answer ? "SAT" : "UNSAT") << '\n';
        status = answer ? kExitPositive : kExitNegative;
      } else if (pdl->parsed()) {
        os << emit_pdl_embedding(f).text();
      }
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << os.str();
  out.flush();
  return status;
}

}  // namespace dlpa::cli
