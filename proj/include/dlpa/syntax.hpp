// ============================================================================
// dlpa/syntax.hpp : abstract syntax of DL-PA
// ============================================================================
//
// Formulas and programs are immutable trees held through shared pointers, so
// copies are cheap and subtrees are shared freely between threads. The core
// grammar is the minimal one:
//
//   formula := p | ~formula | formula & formula | [program] formula
//   program := assignment | program ; program | program u program
//            | program* | formula?
//
// Everything else (top, bot, |, ->, <->, <program>) is sugar that the
// builders below expand into this core.
//
// Equality is structural. The total order is structural as well (node kind
// first, then children left to right) and is what every ordered container
// and every deterministic iteration in the library relies on.
// ============================================================================

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dlpa {

// ── Atom ────────────────────────────────────────────────────────────────────

/// A propositional variable. Names match `[a-z][A-Za-z0-9_]*`.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const noexcept { return name_; }

  static bool is_valid_name(std::string_view name) noexcept;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

/// Atom used to spell `top` as `p0 | ~p0`. The parser refuses it in user
/// input.
const Atom& reserved_atom();

// ── Assignment ──────────────────────────────────────────────────────────────

/// A non-empty finite partial map from atoms to truth values. Bindings are
/// kept sorted by atom name.
class Assignment {
 public:
  using Binding = std::pair<Atom, bool>;

  /// Throws PreconditionError on an empty list or a repeated atom.
  explicit Assignment(std::vector<Binding> bindings);

  static Assignment set_true(Atom p) { return Assignment({{std::move(p), true}}); }
  static Assignment set_false(Atom p) { return Assignment({{std::move(p), false}}); }

  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  std::size_t size() const noexcept { return bindings_.size(); }
  bool is_singleton() const noexcept { return bindings_.size() == 1; }

  bool in_domain(const Atom& p) const noexcept;
  /// The value assigned to `p`, or nothing when p is outside the domain.
  std::optional<bool> value(const Atom& p) const noexcept;
  std::vector<Atom> domain() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Binding> bindings_;
};

/// A finite sequence of assignments; also the label type of the tableau.
using Trace = std::vector<Assignment>;

// ── Formula / Program ───────────────────────────────────────────────────────

namespace detail {
struct FormulaNode;
struct ProgramNode;
}  // namespace detail

class Program;

class Formula {
 public:
  enum class Kind : std::uint8_t { Prop, Not, And, Box };

  static Formula prop(Atom p);
  static Formula negate(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula box(Program p, Formula body);

  // Derived connectives, expanded into the core.
  static Formula top();
  static Formula bot();
  static Formula disj(Formula lhs, Formula rhs);     // ~(~a & ~b)
  static Formula implies(Formula lhs, Formula rhs);  // ~(a & ~b)
  static Formula iff(Formula lhs, Formula rhs);      // (a -> b) & (b -> a)
  static Formula diamond(Program p, Formula body);   // ~[p]~body

  Kind kind() const noexcept;
  bool is_prop() const noexcept { return kind() == Kind::Prop; }
  bool is_not() const noexcept { return kind() == Kind::Not; }
  bool is_and() const noexcept { return kind() == Kind::And; }
  bool is_box() const noexcept { return kind() == Kind::Box; }

  const Atom& atom() const;        // Prop
  const Formula& operand() const;  // Not
  const Formula& lhs() const;      // And
  const Formula& rhs() const;      // And
  const Program& program() const;  // Box
  const Formula& body() const;     // Box

  /// True for p and ~p.
  bool is_literal() const noexcept;
  bool is_star_free() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

class Program {
 public:
  enum class Kind : std::uint8_t { Atomic, Seq, Choice, Star, Test };

  static Program atomic(Assignment a);
  static Program seq(Program first, Program second);
  static Program choice(Program lhs, Program rhs);
  static Program star(Program body);
  static Program test(Formula cond);

  Kind kind() const noexcept;
  const Assignment& assignment() const;  // Atomic
  const Program& first() const;          // Seq, Choice (left operand)
  const Program& second() const;         // Seq, Choice (right operand)
  const Program& body() const;           // Star
  const Formula& condition() const;      // Test

  bool is_star_free() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Program& a, const Program& b) noexcept;
  friend std::strong_ordering operator<=>(const Program& a, const Program& b) noexcept;

 private:
  explicit Program(std::shared_ptr<const detail::ProgramNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::ProgramNode> node_;
};

namespace detail {

struct FormulaNode {
  Formula::Kind kind;
  std::optional<Atom> atom;
  std::optional<Formula> a;  // Not operand, And lhs, Box body
  std::optional<Formula> b;  // And rhs
  std::optional<Program> program;
  std::size_t hash = 0;
  bool star_free = true;
};

struct ProgramNode {
  Program::Kind kind;
  std::optional<Assignment> assignment;
  std::optional<Program> a;  // Seq/Choice first, Star body
  std::optional<Program> b;  // Seq/Choice second
  std::optional<Formula> condition;
  std::size_t hash = 0;
  bool star_free = true;
};

}  // namespace detail

/// Shorthand for Formula::prop(Atom(name)).
inline Formula prop(std::string_view name) { return Formula::prop(Atom(std::string(name))); }

}  // namespace dlpa

template <>
struct std::hash<dlpa::Formula> {
  std::size_t operator()(const dlpa::Formula& f) const noexcept { return f.hash(); }
};

template <>
struct std::hash<dlpa::Program> {
  std::size_t operator()(const dlpa::Program& p) const noexcept { return p.hash(); }
};
