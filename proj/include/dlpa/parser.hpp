#pragma once

#include <string>
#include <string_view>

#include "dlpa/syntax.hpp"

namespace dlpa {

/// Parses the concrete formula grammar:
///
///   formula := ~formula | formula & formula | formula | formula
///            | formula -> formula | formula <-> formula
///            | [program] formula | <program> formula | (formula)
///            | top | bot | atom
///   program := assign | program ; program | program u program
///            | program* | formula? | (program)
///   assign  := +atom | -atom | {(+|-)atom (, (+|-)atom)*}
///
/// Binding strength, tightest first: `~` and modalities, `&`, `|`, `->`
/// (right associative), `<->`. In programs: `?` and `*`, then `;`, then `u`.
/// Inside a program `|` is accepted as a synonym for `u`. `#` starts a
/// comment that runs to the end of the line.
///
/// Throws ParseError (EmptyAssignmentError for `{}`).
Formula parse_formula(std::string_view text);

/// Parses a standalone program with the same grammar.
Program parse_program(std::string_view text);

/// Canonical, fully parenthesised text. parse_formula(render(f)) == f.
std::string render(const Formula& f);
std::string render(const Program& p);
std::string render(const Assignment& a);

/// `()` for the empty trace, otherwise assignments joined by `.`,
/// e.g. `+p.-q.{+r,-s}`.
std::string render(const Trace& t);

}  // namespace dlpa
