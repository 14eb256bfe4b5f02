#pragma once

#include <cstddef>
#include <set>

#include "dlpa/syntax.hpp"

namespace dlpa {

using FormulaSet = std::set<Formula>;
using AtomSet = std::set<Atom>;

/// Number of atoms and connectives; an assignment counts |dom(a)|.
std::size_t length(const Formula& f);
std::size_t length(const Program& p);
/// Number of assignments in the trace.
inline std::size_t length(const Trace& t) { return t.size(); }

/// Fisher-Ladner style closure, with the domain atoms of every assignment
/// added as propositions. Follows the usual table literally, including
/// cl□([p1;p2]f) = {[p1;p2]f} u cl□([p1][p2]f), which never reaches [p2]f
/// nor the atoms of p2.
FormulaSet closure(const Formula& f);

/// closure(f) that also takes cl□([p2]f) for every [p1;p2]f it meets. This
/// is the set the tableau rules actually stay inside.
FormulaSet full_closure(const Formula& f);

/// The box part of the closure of a box formula [p]body.
FormulaSet box_closure(const Formula& box);

/// closure(f) together with the negation of each member.
FormulaSet extended_closure(const Formula& f);

/// Atoms occurring anywhere in f, assignment domains and tests included
/// (the propositions of full_closure(f)).
AtomSet vocabulary(const Formula& f);
AtomSet vocabulary(const Program& p);

/// Execution traces of a program. Every star is unrolled at most
/// `star_bound` times, so the result is exact for star-free programs.
std::set<Trace> exe_traces(const Program& p, std::size_t star_bound);
std::set<Trace> exe_traces(const Formula& f, std::size_t star_bound);

inline bool is_star_free(const Formula& f) { return f.is_star_free(); }
inline bool is_star_free(const Program& p) { return p.is_star_free(); }

}  // namespace dlpa
