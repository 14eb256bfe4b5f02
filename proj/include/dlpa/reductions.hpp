// Reductions between satisfiability and model checking, and the textual PDL
// embedding.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dlpa/measures.hpp"
#include "dlpa/semantics.hpp"
#include "dlpa/syntax.hpp"

namespace dlpa {

/// A model-checking question: does `model` satisfy `formula`?
struct McInstance {
  Valuation model;
  Formula formula;
};

/// (+p1 u -p1) ; ... ; (+pn u -pn) over `atoms` in name order; `top?` when
/// `atoms` is empty.
Program master_program(const AtomSet& atoms);
inline Program master_program(const Formula& f) { return master_program(vocabulary(f)); }

/// f is satisfiable iff the empty valuation satisfies <M_f> f.
McInstance sat_to_mc(const Formula& f);

/// Length of <M_f> f with the diamond counted as a single connective, i.e.
/// 1 + len(M_f) + len(f). The core formula returned by sat_to_mc is two
/// negations longer.
std::size_t reduction_length(const Formula& f);

/// v satisfies f iff f & (literals of v over the vocabulary of f) is
/// satisfiable. Literals follow atom-name order, positives first.
Formula mc_to_sat(const Valuation& v, const Formula& f);

/// The PDL formula tr(f) & [U_f](/\ Gamma_f), kept in pieces so that the
/// families can be counted.
struct PdlEmbedding {
  std::string translation;  // tr(f)
  std::string universal;    // U_f
  std::vector<std::string> box_clauses;        // [a_pp] p, [a_mp] ~p
  std::vector<std::string> seriality_clauses;  // <a_pp> true, <a_mp> true
  std::vector<std::string> frame_clauses;      // q -> [a_pp u a_mp] q, ~q -> ...
  /// Atoms plus connectives over the whole emitted formula.
  std::size_t symbol_count = 0;

  std::size_t clause_count() const {
    return box_clauses.size() + seriality_clauses.size() + frame_clauses.size();
  }

  /// One conjunct per line.
  std::string text() const;
};

/// The emitted formula never exceeds kPdlSizeFactor * len(f)^2 symbols, and
/// Gamma_f never holds more than kGammaSizeFactor * len(f)^2 clauses.
inline constexpr std::size_t kPdlSizeFactor = 30;
inline constexpr std::size_t kGammaSizeFactor = 5;

/// Throws PreconditionError when f contains a multi-atom assignment.
PdlEmbedding emit_pdl_embedding(const Formula& f);

}  // namespace dlpa
