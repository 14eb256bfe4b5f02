// ============================================================================
// dlpa/solver.hpp : model checking and satisfiability by tableaux
// ============================================================================
//
// Two procedures decide V |= f:
//
//   mc_star_free   depth-first, one label per recursive call, polynomial
//                  space. Star-free input only.
//   mc_full        whole-tableau search over label signatures with loop
//                  detection and eventuality fulfilment, exponential time.
//
// mc_full in brief. A *pre-state* is the formula set a label carries when it
// is created (the root label, or a successor after R[a]/R<a> and RP1/RP2).
// Local saturation of a pre-state yields one or more *alternatives*: the
// saturated, clash-free formula sets of its leaves. Alternatives are the
// label signatures; two labels with the same saturated set are equal and
// share one node. Each alternative has one successor pre-state per atomic
// assignment it mentions.
//
// The graph is explored depth first; strongly connected components are
// resolved as soon as they are complete. Resolution is an elimination
// fixpoint: an alternative dies when a successor pre-state has no live
// alternative left, or when it carries an eventuality ~[p*]f that cannot be
// fulfilled along live alternatives. Fulfilment is a least fixpoint over
// triples (alternative, eventuality, formula of its unfolding). The answer
// is true iff the root pre-state keeps a live alternative.
//
// Every label holds a literal for each atom of the vocabulary, so a
// signature fixes the valuation at that label; this is what makes sharing
// nodes between branches sound.
//
// The contradiction rule "RC" has nothing to act on with Boolean
// assignments; both procedures treat it as having no witnesses.
// ============================================================================

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlpa/measures.hpp"
#include "dlpa/semantics.hpp"
#include "dlpa/syntax.hpp"
#include "dlpa/tableau.hpp"

namespace dlpa {

/// The formula set attached to a label, label text ignored.
struct LabelSignature {
  FormulaSet formulas;

  friend bool operator==(const LabelSignature&, const LabelSignature&) = default;
  friend auto operator<=>(const LabelSignature&, const LabelSignature&) = default;
};

LabelSignature label_signature(const FormulaSet& attached);

enum class LabelStatus : std::uint8_t { Open, Closed, InProgress };

/// One line of a proof trace. `rule` is a rule name or one of the
/// pseudo-steps CLOSED (clash), EQ (label equal to a known one) and
/// UNFULFILLED (eventuality that cannot be fulfilled).
struct TraceStep {
  std::string rule;
  Label label;
  std::optional<Formula> formula;
  std::size_t children = 0;

  /// `n: rule @ label : formula -> children`
  std::string text(std::size_t n) const;
};

struct ProofTrace {
  std::vector<TraceStep> steps;
  bool open = false;

  /// One step per line, then `RESULT: open|closed`.
  std::string serialize() const;
};

enum class PickerMode : std::uint8_t {
  Lexicographic,  // (label length, rule, formula)
  Shuffled,       // uniform among candidates, seeded
  Replay,         // whatever `replay` names at the current step
};

struct SolverOptions {
  PickerMode picker = PickerMode::Lexicographic;
  std::uint64_t seed = 0;
  /// Serialized ProofTrace to follow in Replay mode.
  std::string replay;
  /// R<*> variant used by mc_full.
  DiaStarForm dia_star = DiaStarForm::Plain;
};

struct SolverStats {
  std::size_t rule_applications = 0;
  // mc_star_free
  std::size_t calls = 0;
  std::size_t max_labels_per_call = 0;
  std::size_t max_formulas_per_call = 0;
  std::size_t max_depth = 0;
  // mc_full
  std::size_t pre_states = 0;
  std::size_t cache_size = 0;
  std::size_t max_formulas_per_label = 0;
};

struct Verdict {
  bool answer = false;
  std::optional<ProofTrace> trace;
  SolverStats stats;
  /// Formulas of the root label on an open branch, when there is one.
  std::optional<Branch> open_branch;
};

/// Throws PreconditionError when f contains a star.
Verdict mc_star_free(const Valuation& v, const Formula& f, const SolverOptions& options = {});
Verdict mc_full(const Valuation& v, const Formula& f, const SolverOptions& options = {});

enum class Algorithm : std::uint8_t { Auto, StarFree, Full };

/// Auto picks mc_star_free for star-free f and mc_full otherwise.
Verdict model_check(const Valuation& v, const Formula& f, Algorithm algorithm = Algorithm::Auto,
                    const SolverOptions& options = {});

/// Model checks sat_to_mc(f); the fragment is decided by f itself since the
/// master program is star-free.
Verdict sat(const Formula& f, Algorithm algorithm = Algorithm::Auto,
            const SolverOptions& options = {});
/// Not sat(~f). The trace is that of the satisfiability run on ~f.
Verdict valid(const Formula& f, Algorithm algorithm = Algorithm::Auto,
              const SolverOptions& options = {});

/// Re-runs model checking following `trace_text` step by step. Throws
/// PreconditionError when a step names a witness that is not applicable at
/// that point, or when the replayed trace differs from the given one.
Verdict replay(const Valuation& v, const Formula& f, const std::string& trace_text,
               Algorithm algorithm = Algorithm::Auto);

}  // namespace dlpa
