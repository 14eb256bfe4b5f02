#include "dlpa/solver.hpp"

#include <algorithm>
#include <deque>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "dlpa/error.hpp"
#include "dlpa/parser.hpp"
#include "dlpa/reductions.hpp"

namespace dlpa {

LabelSignature label_signature(const FormulaSet& attached) { return LabelSignature{attached}; }

std::string TraceStep::text(std::size_t n) const {
  std::string out = std::to_string(n) + ": " + rule + " @ " + render(label) + " : ";
  out += formula ? render(*formula) : "-";
  out += " -> " + std::to_string(children);
  return out;
}

std::string ProofTrace::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out += steps[i].text(i + 1);
    out += '\n';
  }
  out += open ? "RESULT: open\n" : "RESULT: closed\n";
  return out;
}

namespace {

using RuleGroup = std::initializer_list<Rule>;

constexpr RuleGroup kSingleStarFree = {Rule::RNeg,    Rule::RAnd,    Rule::RDiaTest,
                                       Rule::RBoxSeq, Rule::RDiaSeq, Rule::RBoxChoice};
constexpr RuleGroup kBranchingStarFree = {Rule::ROr, Rule::RBoxTest, Rule::RDiaChoice};
constexpr RuleGroup kSingleFull = {Rule::RNeg,    Rule::RAnd,       Rule::RDiaTest, Rule::RBoxSeq,
                                   Rule::RDiaSeq, Rule::RBoxChoice, Rule::RBoxStar};
constexpr RuleGroup kBranchingFull = {Rule::ROr, Rule::RBoxTest, Rule::RDiaChoice, Rule::RDiaStar};
constexpr RuleGroup kAtomic = {Rule::RBoxAtom, Rule::RDiaAtom};
constexpr RuleGroup kPropagation = {Rule::RP1, Rule::RP2};

bool witness_less(const Witness& a, const Witness& b) {
  if (a.member.label.size() != b.member.label.size()) {
    return a.member.label.size() < b.member.label.size();
  }
  if (a.rule != b.rule) return a.rule < b.rule;
  if (a.member.formula != b.member.formula) return a.member.formula < b.member.formula;
  if (a.member.label != b.member.label) return a.member.label < b.member.label;
  return a.target < b.target;
}

std::vector<Witness> collect(const Branch& b, RuleGroup group) {
  std::vector<Witness> out;
  for (Rule r : group) {
    auto ws = witnesses(b, r);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

// The positive half of some clashing pair, if any.
std::optional<LabeledFormula> find_clash(const Branch& b) {
  for (const auto& m : b.members()) {
    if (m.formula.is_not()) {
      LabeledFormula pos{m.label, m.formula.operand()};
      if (b.contains(pos)) return pos;
    }
  }
  return std::nullopt;
}

const Assignment& atomic_assignment(const Witness& w) {
  const Formula& box = w.rule == Rule::RDiaAtom ? w.member.formula.operand() : w.member.formula;
  return box.program().assignment();
}

std::vector<std::string> trace_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

class Recorder {
 public:
  void step(const Witness& w, std::size_t children) {
    trace_.steps.push_back({std::string(rule_name(w.rule)), w.member.label, w.member.formula, children});
  }
  void pseudo(const char* name, const Label& label, std::optional<Formula> f) {
    trace_.steps.push_back({name, label, std::move(f), 0});
  }
  std::size_t size() const { return trace_.steps.size(); }
  ProofTrace finish(bool open) {
    trace_.open = open;
    return std::move(trace_);
  }

 private:
  ProofTrace trace_;
};

class Picker {
 public:
  explicit Picker(const SolverOptions& options) : mode_(options.picker), rng_(options.seed) {
    if (mode_ == PickerMode::Replay) {
      for (auto& line : trace_lines(options.replay)) {
        if (line.rfind("RESULT:", 0) != 0) expected_.push_back(std::move(line));
      }
    }
  }

  const Witness& pick(const std::vector<Witness>& candidates, std::size_t next_step) {
    switch (mode_) {
      case PickerMode::Lexicographic:
        return *std::min_element(candidates.begin(), candidates.end(), witness_less);
      case PickerMode::Shuffled:
        return candidates[rng_() % candidates.size()];
      case PickerMode::Replay:
        break;
    }
    if (next_step >= expected_.size()) {
      throw PreconditionError("replay: trace ends before step " + std::to_string(next_step + 1));
    }
    const std::string& want = expected_[next_step];
    for (const Witness& w : candidates) {
      TraceStep s{std::string(rule_name(w.rule)), w.member.label, w.member.formula,
                  rule_children(w).size()};
      if (s.text(next_step + 1) == want) return w;
    }
    throw PreconditionError("replay: step " + std::to_string(next_step + 1) +
                            " is not an applicable witness here: " + want);
  }

 private:
  PickerMode mode_;
  std::mt19937_64 rng_;
  std::vector<std::string> expected_;
};

// Successor creation for the assignment of `first`: every R[a]/R<a> witness
// on that assignment goes into one new label, then RP1/RP2 carry over the
// literals a leaves alone. Witnesses are marked in b; the new label's
// formulas are returned on their own.
Branch create_successor(Branch& b, const Witness& first, Recorder& rec, SolverStats& stats) {
  const Assignment alpha = atomic_assignment(first);
  std::vector<Witness> batch;
  for (const Witness& w : collect(b, kAtomic)) {
    if (w != first && atomic_assignment(w) == alpha) batch.push_back(w);
  }
  std::sort(batch.begin(), batch.end(), witness_less);
  batch.insert(batch.begin(), first);

  Branch succ;
  for (const Witness& w : batch) {
    rec.step(w, 1);
    ++stats.rule_applications;
    b.mark(w);
    const auto added = rule_children(w);
    for (const auto& lf : added.front()) succ.insert(lf);
  }

  Branch joined = b;
  for (const auto& m : succ.members()) joined.insert(m);
  std::vector<Witness> props;
  for (const Witness& w : collect(joined, kPropagation)) {
    if (w.target == alpha && w.member.label == first.member.label) props.push_back(w);
  }
  std::sort(props.begin(), props.end(), witness_less);
  for (const Witness& w : props) {
    rec.step(w, 1);
    ++stats.rule_applications;
    b.mark(w);
    const auto added = rule_children(w);
    for (const auto& lf : added.front()) succ.insert(lf);
  }
  return succ;
}

// ── Star-free procedure ─────────────────────────────────────────────────────

class StarFreeSearch {
 public:
  explicit StarFreeSearch(const SolverOptions& options) : picker_(options) {}

  Verdict run(const Branch& b0) {
    Verdict out;
    out.answer = solve(b0);
    out.trace = rec_.finish(out.answer);
    out.stats = stats_;
    out.open_branch = std::move(open_);
    return out;
  }

 private:
  bool solve(Branch b) {
    ++stats_.calls;
    stats_.max_labels_per_call = std::max(stats_.max_labels_per_call, b.labels().size());
    for (const auto& m : b.members()) {
      stats_.max_depth = std::max(stats_.max_depth, m.label.size());
    }

    while (true) {
      stats_.max_formulas_per_call = std::max(stats_.max_formulas_per_call, b.size());
      if (auto clash = find_clash(b)) {
        rec_.pseudo("CLOSED", clash->label, clash->formula);
        return false;
      }
      auto candidates = collect(b, kSingleStarFree);
      if (!candidates.empty()) {
        const Witness w = picker_.pick(candidates, rec_.size());
        auto children = apply(b, w);
        rec_.step(w, children.size());
        ++stats_.rule_applications;
        b = std::move(children.front());
        continue;
      }
      candidates = collect(b, kBranchingStarFree);
      if (!candidates.empty()) {
        const Witness w = picker_.pick(candidates, rec_.size());
        auto children = apply(b, w);
        rec_.step(w, children.size());
        ++stats_.rule_applications;
        for (auto& child : children) {
          if (solve(std::move(child))) return true;
        }
        return false;
      }
      break;
    }

    while (true) {
      const auto candidates = collect(b, kAtomic);
      if (candidates.empty()) break;
      const Witness w = picker_.pick(candidates, rec_.size());
      Branch succ = create_successor(b, w, rec_, stats_);
      if (!solve(std::move(succ))) return false;
    }
    if (!open_ && b.labels() == std::set<Label>{Label{}}) open_ = b;
    return true;
  }

  Picker picker_;
  Recorder rec_;
  SolverStats stats_;
  std::optional<Branch> open_;
};

// ── Full procedure ──────────────────────────────────────────────────────────

struct Node {
  bool alt = false;
  FormulaSet formulas;
  Label label;
  std::vector<std::size_t> children;
  std::vector<Assignment> steps;  // alternatives: assignment leading to children[i]
  int index = -1;
  int low = -1;
  bool on_stack = false;
  bool in_scc = false;
  bool alive = true;
  bool early_dead = false;
  LabelStatus status = LabelStatus::InProgress;
  // alternatives: (eventuality, formula) pairs fulfilled here, once resolved
  std::set<std::pair<Formula, Formula>> fulfilled;
};

class FullSearch {
 public:
  FullSearch(const Formula& root, const SolverOptions& options)
      : picker_(options), dia_star_(options.dia_star) {
    for (const Formula& g : full_closure(root)) {
      const Formula e = Formula::negate(g);
      if (decomposition_rule(e) == Rule::RDiaStar) eventualities_.push_back(e);
    }
  }

  Verdict run(const Branch& b0) {
    const std::size_t root = intern_pre(b0.formulas_at(Label{}), Label{});
    strongconnect(root);
    Verdict out;
    out.answer = nodes_[root].status == LabelStatus::Open;
    out.trace = rec_.finish(out.answer);
    stats_.cache_size = cache_.size();
    out.stats = stats_;
    if (out.answer) {
      for (std::size_t a : nodes_[root].children) {
        if (nodes_[a].status != LabelStatus::Open) continue;
        Branch b;
        for (const Formula& g : nodes_[a].formulas) b.insert({Label{}, g});
        out.open_branch = std::move(b);
        break;
      }
    }
    return out;
  }

 private:
  std::size_t intern_pre(const FormulaSet& formulas, const Label& label) {
    auto it = pre_index_.find(formulas);
    if (it != pre_index_.end()) {
      rec_.pseudo("EQ", label, std::nullopt);
      return it->second;
    }
    nodes_.emplace_back();
    nodes_.back().formulas = formulas;
    nodes_.back().label = label;
    ++stats_.pre_states;
    pre_index_.emplace(formulas, nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  std::size_t intern_alt(const FormulaSet& formulas, const Label& label) {
    LabelSignature sig = label_signature(formulas);
    auto it = cache_.find(sig);
    if (it != cache_.end()) {
      rec_.pseudo("EQ", label, std::nullopt);
      return it->second;
    }
    nodes_.emplace_back();
    nodes_.back().alt = true;
    nodes_.back().formulas = formulas;
    nodes_.back().label = label;
    cache_.emplace(std::move(sig), nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  // Local saturation of one label, collecting every clash-free leaf.
  void saturate(Branch b, const Label& label, std::vector<FormulaSet>& leaves) {
    while (true) {
      stats_.max_formulas_per_label = std::max(stats_.max_formulas_per_label, b.size());
      if (auto clash = find_clash(b)) {
        rec_.pseudo("CLOSED", clash->label, clash->formula);
        return;
      }
      auto candidates = collect(b, kSingleFull);
      if (!candidates.empty()) {
        const Witness w = picker_.pick(candidates, rec_.size());
        auto children = apply(b, w, dia_star_);
        rec_.step(w, children.size());
        ++stats_.rule_applications;
        b = std::move(children.front());
        continue;
      }
      candidates = collect(b, kBranchingFull);
      if (!candidates.empty()) {
        const Witness w = picker_.pick(candidates, rec_.size());
        auto children = apply(b, w, dia_star_);
        rec_.step(w, children.size());
        ++stats_.rule_applications;
        for (auto& child : children) saturate(std::move(child), label, leaves);
        return;
      }
      break;
    }
    FormulaSet leaf = b.formulas_at(label);
    if (std::find(leaves.begin(), leaves.end(), leaf) == leaves.end()) leaves.push_back(std::move(leaf));
  }

  void expand_pre(std::size_t v) {
    const Label label = nodes_[v].label;
    Branch b;
    for (const Formula& g : nodes_[v].formulas) b.insert({label, g});
    std::vector<FormulaSet> leaves;
    saturate(std::move(b), label, leaves);
    for (const FormulaSet& leaf : leaves) {
      const std::size_t a = intern_alt(leaf, label);
      nodes_[v].children.push_back(a);
    }
  }

  void expand_alt(std::size_t v) {
    const Label label = nodes_[v].label;
    Branch b;
    for (const Formula& g : nodes_[v].formulas) b.insert({label, g});
    while (true) {
      const auto candidates = collect(b, kAtomic);
      if (candidates.empty()) break;
      const Witness w = picker_.pick(candidates, rec_.size());
      const Assignment alpha = atomic_assignment(w);
      Branch succ = create_successor(b, w, rec_, stats_);
      Label next = label;
      next.push_back(alpha);
      const std::size_t child = intern_pre(succ.formulas_at(next), next);
      nodes_[v].children.push_back(child);
      nodes_[v].steps.push_back(alpha);
    }
  }

  void strongconnect(std::size_t v) {
    nodes_[v].index = nodes_[v].low = counter_++;
    stack_.push_back(v);
    nodes_[v].on_stack = true;
    if (nodes_[v].alt) {
      expand_alt(v);
    } else {
      expand_pre(v);
    }

    for (std::size_t i = 0; i < nodes_[v].children.size(); ++i) {
      const std::size_t w = nodes_[v].children[i];
      if (nodes_[w].index < 0) {
        strongconnect(w);
        nodes_[v].low = std::min(nodes_[v].low, nodes_[w].low);
      } else if (nodes_[w].on_stack) {
        nodes_[v].low = std::min(nodes_[v].low, nodes_[w].index);
      }
      // A successor label already known to be closed closes this one; the
      // remaining successors need not be explored.
      if (nodes_[v].alt && !nodes_[w].on_stack && nodes_[w].status == LabelStatus::Closed) {
        nodes_[v].early_dead = true;
        break;
      }
    }

    if (nodes_[v].low == nodes_[v].index) {
      std::vector<std::size_t> scc;
      std::size_t w = 0;
      do {
        w = stack_.back();
        stack_.pop_back();
        nodes_[w].on_stack = false;
        scc.push_back(w);
      } while (w != v);
      resolve(scc);
    }
  }

  bool pre_alive(std::size_t p) const {
    if (!nodes_[p].in_scc) return nodes_[p].status == LabelStatus::Open;
    return std::any_of(nodes_[p].children.begin(), nodes_[p].children.end(), [this](std::size_t a) {
      return nodes_[a].in_scc ? nodes_[a].alive : nodes_[a].status == LabelStatus::Open;
    });
  }

  using Items = std::map<std::size_t, std::set<std::pair<Formula, Formula>>>;

  bool holds(const Items& items, std::size_t a, const Formula& e, const Formula& psi) const {
    const Node& n = nodes_[a];
    if (!n.formulas.count(psi)) return false;
    if (n.in_scc) {
      auto it = items.find(a);
      return n.alive && it != items.end() && it->second.count({e, psi});
    }
    return n.status == LabelStatus::Open && n.fulfilled.count({e, psi});
  }

  // One unfolding step of fulfilment for ~[...] formula psi at alternative a.
  bool derive(const Items& items, std::size_t a, const Formula& e, const Formula& psi) const {
    const Formula& box = psi.operand();
    const Program& p = box.program();
    const Formula& x = box.body();
    if (psi == e) {
      if (nodes_[a].formulas.count(Formula::negate(x))) return true;
      return holds(items, a, e, Formula::negate(Formula::box(p.body(), box)));
    }
    switch (p.kind()) {
      case Program::Kind::Seq:
        return holds(items, a, e, Formula::negate(Formula::box(p.first(), Formula::box(p.second(), x))));
      case Program::Kind::Choice:
        return holds(items, a, e, Formula::negate(Formula::box(p.first(), x))) ||
               holds(items, a, e, Formula::negate(Formula::box(p.second(), x)));
      case Program::Kind::Test:
        return holds(items, a, e, Formula::negate(x));
      case Program::Kind::Star:
        return holds(items, a, e, Formula::negate(x)) ||
               holds(items, a, e, Formula::negate(Formula::box(p.body(), box)));
      case Program::Kind::Atomic: {
        const Node& n = nodes_[a];
        for (std::size_t i = 0; i < n.steps.size(); ++i) {
          if (n.steps[i] != p.assignment()) continue;
          for (std::size_t alt : nodes_[n.children[i]].children) {
            if (holds(items, alt, e, Formula::negate(x))) return true;
          }
        }
        return false;
      }
    }
    return false;
  }

  Items fulfilment(const std::vector<std::size_t>& alts) const {
    Items items;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a : alts) {
        if (!nodes_[a].alive) continue;
        auto& done = items[a];
        for (const Formula& psi : nodes_[a].formulas) {
          if (!psi.is_not() || !psi.operand().is_box()) continue;
          for (const Formula& e : eventualities_) {
            if (done.count({e, psi})) continue;
            if (derive(items, a, e, psi)) {
              items[a].insert({e, psi});
              changed = true;
            }
          }
        }
      }
    }
    return items;
  }

  void resolve(const std::vector<std::size_t>& scc) {
    std::vector<std::size_t> alts;
    for (std::size_t n : scc) {
      nodes_[n].in_scc = true;
      if (nodes_[n].alt) {
        nodes_[n].alive = !nodes_[n].early_dead;
        alts.push_back(n);
      }
    }
    std::sort(alts.begin(), alts.end());

    Items items;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a : alts) {
        if (!nodes_[a].alive) continue;
        for (std::size_t c : nodes_[a].children) {
          if (!pre_alive(c)) {
            nodes_[a].alive = false;
            changed = true;
            break;
          }
        }
      }
      if (changed) continue;
      items = fulfilment(alts);
      for (std::size_t a : alts) {
        if (!nodes_[a].alive) continue;
        for (const Formula& g : nodes_[a].formulas) {
          if (decomposition_rule(g) != Rule::RDiaStar) continue;
          if (!items[a].count({g, g})) {
            rec_.pseudo("UNFULFILLED", nodes_[a].label, g);
            nodes_[a].alive = false;
            changed = true;
            break;
          }
        }
      }
    }

    for (std::size_t a : alts) {
      if (nodes_[a].alive) nodes_[a].fulfilled = std::move(items[a]);
    }
    for (std::size_t n : scc) {
      const bool open = nodes_[n].alt ? nodes_[n].alive : pre_alive(n);
      nodes_[n].status = open ? LabelStatus::Open : LabelStatus::Closed;
    }
    for (std::size_t n : scc) nodes_[n].in_scc = false;
  }

  Picker picker_;
  DiaStarForm dia_star_;
  Recorder rec_;
  SolverStats stats_;
  std::vector<Formula> eventualities_;
  std::deque<Node> nodes_;
  std::map<FormulaSet, std::size_t> pre_index_;
  std::map<LabelSignature, std::size_t> cache_;
  std::vector<std::size_t> stack_;
  int counter_ = 0;
};

}  // namespace

Verdict mc_star_free(const Valuation& v, const Formula& f, const SolverOptions& options) {
  if (!is_star_free(f)) {
    throw PreconditionError("star-free procedure given a formula with a star: " + render(f));
  }
  return StarFreeSearch(options).run(initial_branch(v, f));
}

Verdict mc_full(const Valuation& v, const Formula& f, const SolverOptions& options) {
  return FullSearch(f, options).run(initial_branch(v, f));
}

Verdict model_check(const Valuation& v, const Formula& f, Algorithm algorithm,
                    const SolverOptions& options) {
  switch (algorithm) {
    case Algorithm::StarFree:
      return mc_star_free(v, f, options);
    case Algorithm::Full:
      return mc_full(v, f, options);
    case Algorithm::Auto:
      break;
  }
  return is_star_free(f) ? mc_star_free(v, f, options) : mc_full(v, f, options);
}

Verdict sat(const Formula& f, Algorithm algorithm, const SolverOptions& options) {
  const McInstance inst = sat_to_mc(f);
  if (algorithm == Algorithm::Auto) {
    algorithm = is_star_free(f) ? Algorithm::StarFree : Algorithm::Full;
  }
  return model_check(inst.model, inst.formula, algorithm, options);
}

Verdict valid(const Formula& f, Algorithm algorithm, const SolverOptions& options) {
  Verdict out = sat(Formula::negate(f), algorithm, options);
  out.answer = !out.answer;
  out.open_branch.reset();
  return out;
}

Verdict replay(const Valuation& v, const Formula& f, const std::string& trace_text,
               Algorithm algorithm) {
  SolverOptions options;
  options.picker = PickerMode::Replay;
  options.replay = trace_text;
  Verdict out = model_check(v, f, algorithm, options);
  const auto want = trace_lines(trace_text);
  const auto got = trace_lines(out.trace->serialize());
  for (std::size_t i = 0; i < std::max(want.size(), got.size()); ++i) {
    if (i >= want.size() || i >= got.size() || want[i] != got[i]) {
      throw PreconditionError("replay: trace differs at line " + std::to_string(i + 1) + ": expected `" +
                              (i < want.size() ? want[i] : "") + "`, got `" +
                              (i < got.size() ? got[i] : "") + "`");
    }
  }
  return out;
}

}  // namespace dlpa
