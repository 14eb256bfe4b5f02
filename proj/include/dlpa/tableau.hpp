// ============================================================================
// dlpa/tableau.hpp : labelled formulas, branches and the tableau rules
// ============================================================================
//
// A labelled formula <s, f> asserts f at the valuation reached from the input
// model by running the assignments of s in order. A branch is a set of them.
//
// Rules, by the shape of the witness (diamonds are already desugared, so
// <p>f only ever shows up as ~[p]~f):
//
//   RNeg       ~~f          -> f
//   RAnd       f & g        -> f, g
//   ROr        ~(f & g)     -> ~f | ~g
//   RBoxAtom   [a]f         -> <s.a, f> plus the literals a sets
//   RDiaAtom   ~[a]f        -> <s.a, ~f> plus the literals a sets
//   RBoxTest   [g?]f        -> ~g | f
//   RDiaTest   ~[g?]f       -> g, ~f
//   RBoxSeq    [p;q]f       -> [p][q]f
//   RDiaSeq    ~[p;q]f      -> ~[p][q]f
//   RBoxChoice [p u q]f     -> [p]f, [q]f
//   RDiaChoice ~[p u q]f    -> ~[p]f | ~[q]f
//   RBoxStar   [p*]f        -> f, [p][p*]f
//   RDiaStar   ~[p*]f       -> ~f | f, ~[p][p*]f   (KeepBody)
//                           -> ~f | ~[p][p*]f      (Plain)
//   RP1 / RP2  <s, p> / <s, ~p> with some <s.a, _> and p outside dom(a)
//              -> <s.a, p> / <s.a, ~p>
//
// Applying a rule consumes its witness: the (formula, rule) pair is marked
// and never offered again. RP1/RP2 marks also carry the successor
// assignment, so one literal propagates once into every successor label.
// ============================================================================

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlpa/measures.hpp"
#include "dlpa/semantics.hpp"
#include "dlpa/syntax.hpp"

namespace dlpa {

enum class Rule : std::uint8_t {
  RNeg,
  RAnd,
  ROr,
  RBoxAtom,
  RDiaAtom,
  RBoxTest,
  RDiaTest,
  RBoxSeq,
  RDiaSeq,
  RBoxChoice,
  RDiaChoice,
  RBoxStar,
  RDiaStar,
  RP1,
  RP2,
};

inline constexpr std::size_t kRuleCount = 15;

std::string_view rule_name(Rule r) noexcept;
std::optional<Rule> parse_rule(std::string_view name) noexcept;
/// Every rule, in enumeration order.
const std::vector<Rule>& all_rules();

using Label = Trace;

struct LabeledFormula {
  Label label;
  Formula formula;

  friend bool operator==(const LabeledFormula&, const LabeledFormula&) = default;
  friend auto operator<=>(const LabeledFormula&, const LabeledFormula&) = default;
};

/// A labelled formula together with the rule it fires. For RP1/RP2,
/// `target` is the assignment leading to the successor label.
struct Witness {
  LabeledFormula member;
  Rule rule;
  std::optional<Assignment> target;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// The decomposition rule matching the shape of f, if any. Literals have
/// none (they only feed RP1/RP2).
std::optional<Rule> decomposition_rule(const Formula& f);

class Branch {
 public:
  Branch() = default;
  explicit Branch(const std::set<LabeledFormula>& members);

  /// Adds a labelled formula; re-adding keeps the marks it already has.
  /// Returns true when the pair was new.
  bool insert(const LabeledFormula& lf);
  bool contains(const LabeledFormula& lf) const { return members_.count(lf) != 0; }

  const std::set<LabeledFormula>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  bool is_marked(const Witness& w) const { return marks_.count(w) != 0; }
  void mark(const Witness& w) { marks_.insert(w); }
  const std::set<Witness>& marks() const noexcept { return marks_; }

  std::set<Label> labels() const;
  FormulaSet formulas_at(const Label& label) const;

  friend bool operator==(const Branch&, const Branch&) = default;

 private:
  std::set<LabeledFormula> members_;
  std::set<Witness> marks_;
};

/// {<(), p> : p in voc(f) & v} u {<(), ~p> : p in voc(f) \ v} u {<(), f>}
Branch initial_branch(const Valuation& v, const Formula& f);

/// Unmarked witnesses to `r` in b, in branch order.
std::vector<Witness> witnesses(const Branch& b, Rule r);

/// Second child of R<*>. KeepBody keeps f next to ~[p][p*]f. That cut
/// loses nested stars: for ~[(a*)*]g the inner unfolding must pick zero
/// iterations of a whenever [(a*)*]g is false, so the outer eventuality can
/// never advance. Plain drops f and is what mc_full uses.
enum class DiaStarForm : std::uint8_t { KeepBody, Plain };

/// The sets b_1..b_k that the rule adds (k is 1 or 2), without the parent.
std::vector<std::vector<LabeledFormula>> rule_children(
    const Witness& w, DiaStarForm form = DiaStarForm::KeepBody);

/// [b u b_1, ..., b u b_k] with the witness marked in each. Throws
/// PreconditionError when w is not an unmarked witness in b.
std::vector<Branch> apply(const Branch& b, const Witness& w,
                          DiaStarForm form = DiaStarForm::KeepBody);

/// Some label carries both f and ~f.
bool is_blatantly_inconsistent(const Branch& b);

/// No rule has an unmarked witness.
bool is_saturated(const Branch& b);

/// Members of the form <s, ~[p*]f>.
std::vector<LabeledFormula> eventualities(const Branch& b);

/// Which trace set the suffix s' of a fulfilling <s.s', ~f> is drawn from.
enum class FulfillmentReading : std::uint8_t {
  StarTraces,     // s' in exe(p*): any number of iterations, zero included
  ProgramTraces,  // s' in exe(p) or empty
};

/// The eventuality <s, ~[p*]f> is fulfilled when <s.s', ~f> is in b for some
/// admissible s'. `star_bound` limits the unfolding of stars nested inside p;
/// the number of labels in b is enough for an exact answer.
bool is_fulfilled(const Branch& b, const LabeledFormula& eventuality, std::size_t star_bound,
                  FulfillmentReading reading = FulfillmentReading::StarTraces);
bool is_fulfilled(const Branch& b, const LabeledFormula& eventuality);

/// `label | formula | flags`, one line per member.
std::string dump(const Branch& b);

}  // namespace dlpa
