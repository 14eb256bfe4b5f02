#include "dlpa/tableau.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "dlpa/error.hpp"
#include "dlpa/parser.hpp"

namespace dlpa {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "RNeg",    "RAnd",    "ROr",        "RBoxAtom",   "RDiaAtom", "RBoxTest", "RDiaTest", "RBoxSeq",
    "RDiaSeq", "RBoxChoice", "RDiaChoice", "RBoxStar", "RDiaStar", "RP1",      "RP2",
};

bool is_propagation(Rule r) { return r == Rule::RP1 || r == Rule::RP2; }

Label extend(const Label& s, const Assignment& a) {
  Label out = s;
  out.push_back(a);
  return out;
}

// Literals an assignment makes true at the successor label.
void add_assigned_literals(const Label& target, const Assignment& a,
                           std::vector<LabeledFormula>& out) {
  for (const auto& [atom, value] : a.bindings()) {
    Formula p = Formula::prop(atom);
    out.push_back({target, value ? p : Formula::negate(p)});
  }
}

}  // namespace

std::string_view rule_name(Rule r) noexcept { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> parse_rule(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < kRuleCount; ++i) out.push_back(static_cast<Rule>(i));
    return out;
  }();
  return rules;
}

std::optional<Rule> decomposition_rule(const Formula& f) {
  auto box_rule = [](const Program& p, bool negated) -> Rule {
    switch (p.kind()) {
      case Program::Kind::Atomic: return negated ? Rule::RDiaAtom : Rule::RBoxAtom;
      case Program::Kind::Test: return negated ? Rule::RDiaTest : Rule::RBoxTest;
      case Program::Kind::Seq: return negated ? Rule::RDiaSeq : Rule::RBoxSeq;
      case Program::Kind::Choice: return negated ? Rule::RDiaChoice : Rule::RBoxChoice;
      case Program::Kind::Star: return negated ? Rule::RDiaStar : Rule::RBoxStar;
    }
    return Rule::RBoxAtom;
  };
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return std::nullopt;
    case Formula::Kind::And:
      return Rule::RAnd;
    case Formula::Kind::Box:
      return box_rule(f.program(), false);
    case Formula::Kind::Not: {
      const Formula& g = f.operand();
      switch (g.kind()) {
        case Formula::Kind::Prop: return std::nullopt;
        case Formula::Kind::Not: return Rule::RNeg;
        case Formula::Kind::And: return Rule::ROr;
        case Formula::Kind::Box: return box_rule(g.program(), true);
      }
    }
  }
  return std::nullopt;
}

// ── Branch ──────────────────────────────────────────────────────────────────

Branch::Branch(const std::set<LabeledFormula>& members) : members_(members) {}

bool Branch::insert(const LabeledFormula& lf) { return members_.insert(lf).second; }

std::set<Label> Branch::labels() const {
  std::set<Label> out;
  for (const auto& m : members_) out.insert(m.label);
  return out;
}

FormulaSet Branch::formulas_at(const Label& label) const {
  FormulaSet out;
  for (const auto& m : members_) {
    if (m.label == label) out.insert(m.formula);
  }
  return out;
}

Branch initial_branch(const Valuation& v, const Formula& f) {
  Branch b;
  for (const Atom& p : vocabulary(f)) {
    Formula lit = Formula::prop(p);
    b.insert({Label{}, v.contains(p) ? lit : Formula::negate(lit)});
  }
  b.insert({Label{}, f});
  return b;
}

// ── Witnesses and rule application ──────────────────────────────────────────

namespace {

bool literal_matches(const Formula& f, Rule r) {
  if (r == Rule::RP1) return f.is_prop();
  return f.is_not() && f.operand().is_prop();
}

const Atom& literal_atom(const Formula& f) { return f.is_prop() ? f.atom() : f.operand().atom(); }

// Successor assignments a such that s.a is a label of b.
std::set<Assignment> successor_steps(const Branch& b, const Label& s) {
  std::set<Assignment> out;
  for (const auto& m : b.members()) {
    if (m.label.size() == s.size() + 1 && std::equal(s.begin(), s.end(), m.label.begin())) {
      out.insert(m.label.back());
    }
  }
  return out;
}

bool is_witness(const Branch& b, const Witness& w) {
  if (!b.contains(w.member) || b.is_marked(w)) return false;
  if (!is_propagation(w.rule)) {
    return !w.target && decomposition_rule(w.member.formula) == w.rule;
  }
  if (!w.target || !literal_matches(w.member.formula, w.rule)) return false;
  if (w.target->in_domain(literal_atom(w.member.formula))) return false;
  return successor_steps(b, w.member.label).count(*w.target) != 0;
}

}  // namespace

std::vector<Witness> witnesses(const Branch& b, Rule r) {
  std::vector<Witness> out;
  if (!is_propagation(r)) {
    for (const auto& m : b.members()) {
      if (decomposition_rule(m.formula) != r) continue;
      Witness w{m, r, std::nullopt};
      if (!b.is_marked(w)) out.push_back(std::move(w));
    }
    return out;
  }
  for (const auto& m : b.members()) {
    if (!literal_matches(m.formula, r)) continue;
    for (const Assignment& a : successor_steps(b, m.label)) {
      if (a.in_domain(literal_atom(m.formula))) continue;
      Witness w{m, r, a};
      if (!b.is_marked(w)) out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<std::vector<LabeledFormula>> rule_children(const Witness& w, DiaStarForm form) {
  const Label& s = w.member.label;
  const Formula& f = w.member.formula;
  auto at = [&s](Formula g) { return LabeledFormula{s, std::move(g)}; };
  auto neg = [](const Formula& g) { return Formula::negate(g); };
  switch (w.rule) {
    case Rule::RNeg:
      return {{at(f.operand().operand())}};
    case Rule::RAnd:
      return {{at(f.lhs()), at(f.rhs())}};
    case Rule::ROr:
      return {{at(neg(f.operand().lhs()))}, {at(neg(f.operand().rhs()))}};
    case Rule::RBoxAtom: {
      const Assignment& a = f.program().assignment();
      const Label next = extend(s, a);
      std::vector<LabeledFormula> out{{next, f.body()}};
      add_assigned_literals(next, a, out);
      return {out};
    }
    case Rule::RDiaAtom: {
      const Formula& box = f.operand();
      const Assignment& a = box.program().assignment();
      const Label next = extend(s, a);
      std::vector<LabeledFormula> out{{next, neg(box.body())}};
      add_assigned_literals(next, a, out);
      return {out};
    }
    case Rule::RBoxTest:
      return {{at(neg(f.program().condition()))}, {at(f.body())}};
    case Rule::RDiaTest: {
      const Formula& box = f.operand();
      return {{at(box.program().condition()), at(neg(box.body()))}};
    }
    case Rule::RBoxSeq: {
      const Program& p = f.program();
      return {{at(Formula::box(p.first(), Formula::box(p.second(), f.body())))}};
    }
    case Rule::RDiaSeq: {
      const Formula& box = f.operand();
      const Program& p = box.program();
      return {{at(neg(Formula::box(p.first(), Formula::box(p.second(), box.body()))))}};
    }
    case Rule::RBoxChoice: {
      const Program& p = f.program();
      return {{at(Formula::box(p.first(), f.body())), at(Formula::box(p.second(), f.body()))}};
    }
    case Rule::RDiaChoice: {
      const Formula& box = f.operand();
      const Program& p = box.program();
      return {{at(neg(Formula::box(p.first(), box.body())))},
              {at(neg(Formula::box(p.second(), box.body())))}};
    }
    case Rule::RBoxStar: {
      const Program& p = f.program();
      return {{at(f.body()), at(Formula::box(p.body(), f))}};
    }
    case Rule::RDiaStar: {
      const Formula& box = f.operand();
      const Program& p = box.program();
      if (form == DiaStarForm::Plain) {
        return {{at(neg(box.body()))}, {at(neg(Formula::box(p.body(), box)))}};
      }
      return {{at(neg(box.body()))}, {at(box.body()), at(neg(Formula::box(p.body(), box)))}};
    }
    case Rule::RP1:
    case Rule::RP2:
#ifdef DLPA_INJECT_RP1_BUG
      // Deliberately wrong propagation, for the fuzzer's mutation smoke test.
      if (w.rule == Rule::RP1) return {{LabeledFormula{extend(s, *w.target), neg(f)}}};
#endif
      return {{LabeledFormula{extend(s, *w.target), f}}};
  }
  return {};
}

std::vector<Branch> apply(const Branch& b, const Witness& w, DiaStarForm form) {
  if (!is_witness(b, w)) {
    throw PreconditionError("<" + render(w.member.label) + ", " + render(w.member.formula) +
                            "> is not an applicable witness to " + std::string(rule_name(w.rule)));
  }
  std::vector<Branch> out;
  for (const auto& added : rule_children(w, form)) {
    Branch child = b;
    child.mark(w);
    for (const auto& lf : added) child.insert(lf);
    out.push_back(std::move(child));
  }
  return out;
}

bool is_blatantly_inconsistent(const Branch& b) {
  for (const auto& m : b.members()) {
    if (m.formula.is_not() && b.contains({m.label, m.formula.operand()})) return true;
  }
  return false;
}

bool is_saturated(const Branch& b) {
  return std::all_of(all_rules().begin(), all_rules().end(),
                     [&b](Rule r) { return witnesses(b, r).empty(); });
}

// ── Eventualities ───────────────────────────────────────────────────────────

std::vector<LabeledFormula> eventualities(const Branch& b) {
  std::vector<LabeledFormula> out;
  for (const auto& m : b.members()) {
    if (decomposition_rule(m.formula) == Rule::RDiaStar) out.push_back(m);
  }
  return out;
}

bool is_fulfilled(const Branch& b, const LabeledFormula& eventuality, std::size_t star_bound,
                  FulfillmentReading reading) {
  if (decomposition_rule(eventuality.formula) != Rule::RDiaStar) {
    throw PreconditionError(render(eventuality.formula) + " is not an eventuality");
  }
  const Formula& box = eventuality.formula.operand();
  const Formula goal = Formula::negate(box.body());
  const std::set<Trace> pieces = exe_traces(box.program().body(), star_bound);
  const Label& base = eventuality.label;

  for (const auto& m : b.members()) {
    if (m.formula != goal || m.label.size() < base.size() ||
        !std::equal(base.begin(), base.end(), m.label.begin())) {
      continue;
    }
    const Trace suffix(m.label.begin() + static_cast<std::ptrdiff_t>(base.size()), m.label.end());
    if (suffix.empty()) return true;
    if (reading == FulfillmentReading::ProgramTraces) {
      if (pieces.count(suffix)) return true;
      continue;
    }
    // suffix splits into at most star_bound consecutive pieces of exe(p)
    std::vector<std::size_t> reach(suffix.size() + 1, star_bound + 1);
    reach[0] = 0;
    for (std::size_t i = 0; i < suffix.size(); ++i) {
      if (reach[i] >= star_bound) continue;
      for (const Trace& piece : pieces) {
        if (piece.empty() || i + piece.size() > suffix.size()) continue;
        if (std::equal(piece.begin(), piece.end(), suffix.begin() + static_cast<std::ptrdiff_t>(i))) {
          reach[i + piece.size()] = std::min(reach[i + piece.size()], reach[i] + 1);
        }
      }
    }
    if (reach[suffix.size()] <= star_bound) return true;
  }
  return false;
}

bool is_fulfilled(const Branch& b, const LabeledFormula& eventuality) {
  return is_fulfilled(b, eventuality, std::max<std::size_t>(1, b.labels().size()));
}

std::string dump(const Branch& b) {
  std::ostringstream os;
  for (const auto& m : b.members()) {
    os << render(m.label) << " | " << render(m.formula) << " | ";
    std::vector<std::string> flags;
    for (const auto& w : b.marks()) {
      if (w.member != m) continue;
      std::string flag(rule_name(w.rule));
      if (w.target) flag += "@" + render(*w.target);
      flags.push_back(std::move(flag));
    }
    if (flags.empty()) {
      os << "applicable";
    } else {
      os << "used:";
      for (std::size_t i = 0; i < flags.size(); ++i) os << (i ? "," : "") << flags[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dlpa
