#include "dlpa/syntax.hpp"

#include <algorithm>
#include <cassert>

#include "dlpa/error.hpp"

namespace dlpa {

namespace {

// FNV-1a style mixing; fixed so that hashes (and hence nothing observable)
// never depend on the standard library implementation.
constexpr std::size_t kSeed = 1469598103934665603ULL;

std::size_t mix(std::size_t h, std::size_t v) noexcept {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 1099511628211ULL;
}

std::size_t hash_text(std::string_view s) noexcept {
  std::size_t h = kSeed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t hash_assignment(const Assignment& a) noexcept {
  std::size_t h = kSeed;
  for (const auto& [atom, value] : a.bindings()) {
    h = mix(h, hash_text(atom.name()));
    h = mix(h, value ? 1 : 2);
  }
  return h;
}

}  // namespace

// ── Atom ────────────────────────────────────────────────────────────────────

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw PreconditionError("invalid atom name '" + name_ + "'");
  }
}

bool Atom::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

const Atom& reserved_atom() {
  static const Atom p0("p0");
  return p0;
}

// ── Assignment ──────────────────────────────────────────────────────────────

Assignment::Assignment(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
  if (bindings_.empty()) throw PreconditionError("assignment must bind at least one atom");
  std::sort(bindings_.begin(), bindings_.end(),
            [](const Binding& x, const Binding& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < bindings_.size(); ++i) {
    if (bindings_[i - 1].first == bindings_[i].first) {
      throw PreconditionError("atom '" + bindings_[i].first.name() +
                              "' assigned twice in one assignment");
    }
  }
}

bool Assignment::in_domain(const Atom& p) const noexcept { return value(p).has_value(); }

std::optional<bool> Assignment::value(const Atom& p) const noexcept {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), p,
                             [](const Binding& b, const Atom& q) { return b.first < q; });
  if (it == bindings_.end() || it->first != p) return std::nullopt;
  return it->second;
}

std::vector<Atom> Assignment::domain() const {
  std::vector<Atom> out;
  out.reserve(bindings_.size());
  for (const auto& b : bindings_) out.push_back(b.first);
  return out;
}

// ── Formula ─────────────────────────────────────────────────────────────────

Formula Formula::prop(Atom p) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Prop;
  n->hash = mix(mix(kSeed, 1), hash_text(p.name()));
  n->atom = std::move(p);
  return Formula(std::move(n));
}

Formula Formula::negate(Formula f) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Not;
  n->hash = mix(mix(kSeed, 2), f.hash());
  n->star_free = f.is_star_free();
  n->a = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::And;
  n->hash = mix(mix(mix(kSeed, 3), lhs.hash()), rhs.hash());
  n->star_free = lhs.is_star_free() && rhs.is_star_free();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::box(Program p, Formula body) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Box;
  n->hash = mix(mix(mix(kSeed, 4), p.hash()), body.hash());
  n->star_free = p.is_star_free() && body.is_star_free();
  n->program = std::move(p);
  n->a = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = [] {
    Formula p = Formula::prop(reserved_atom());
    return Formula::disj(p, Formula::negate(p));
  }();
  return t;
}

Formula Formula::bot() { return negate(top()); }

Formula Formula::disj(Formula lhs, Formula rhs) {
  return negate(conj(negate(std::move(lhs)), negate(std::move(rhs))));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return negate(conj(std::move(lhs), negate(std::move(rhs))));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conj(implies(lhs, rhs), implies(rhs, lhs));
}

Formula Formula::diamond(Program p, Formula body) {
  return negate(box(std::move(p), negate(std::move(body))));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Atom& Formula::atom() const {
  assert(kind() == Kind::Prop);
  return *node_->atom;
}

const Formula& Formula::operand() const {
  assert(kind() == Kind::Not);
  return *node_->a;
}

const Formula& Formula::lhs() const {
  assert(kind() == Kind::And);
  return *node_->a;
}

const Formula& Formula::rhs() const {
  assert(kind() == Kind::And);
  return *node_->b;
}

const Program& Formula::program() const {
  assert(kind() == Kind::Box);
  return *node_->program;
}

const Formula& Formula::body() const {
  assert(kind() == Kind::Box);
  return *node_->a;
}

bool Formula::is_literal() const noexcept {
  return is_prop() || (is_not() && operand().is_prop());
}

bool Formula::is_star_free() const noexcept { return node_->star_free; }

std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Prop:
      return a.atom() == b.atom();
    case Formula::Kind::Not:
      return a.operand() == b.operand();
    case Formula::Kind::And:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Box:
      return a.program() == b.program() && a.body() == b.body();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::Prop:
      return a.atom() <=> b.atom();
    case Formula::Kind::Not:
      return a.operand() <=> b.operand();
    case Formula::Kind::And:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
    case Formula::Kind::Box:
      if (auto c = a.program() <=> b.program(); c != 0) return c;
      return a.body() <=> b.body();
  }
  return std::strong_ordering::equal;
}

// ── Program ─────────────────────────────────────────────────────────────────

Program Program::atomic(Assignment a) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = Kind::Atomic;
  n->hash = mix(mix(kSeed, 11), hash_assignment(a));
  n->assignment = std::move(a);
  return Program(std::move(n));
}

Program Program::seq(Program first, Program second) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = Kind::Seq;
  n->hash = mix(mix(mix(kSeed, 12), first.hash()), second.hash());
  n->star_free = first.is_star_free() && second.is_star_free();
  n->a = std::move(first);
  n->b = std::move(second);
  return Program(std::move(n));
}

Program Program::choice(Program lhs, Program rhs) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = Kind::Choice;
  n->hash = mix(mix(mix(kSeed, 13), lhs.hash()), rhs.hash());
  n->star_free = lhs.is_star_free() && rhs.is_star_free();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Program(std::move(n));
}

Program Program::star(Program body) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = Kind::Star;
  n->hash = mix(mix(kSeed, 14), body.hash());
  n->star_free = false;
  n->a = std::move(body);
  return Program(std::move(n));
}

Program Program::test(Formula cond) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = Kind::Test;
  n->hash = mix(mix(kSeed, 15), cond.hash());
  n->star_free = cond.is_star_free();
  n->condition = std::move(cond);
  return Program(std::move(n));
}

Program::Kind Program::kind() const noexcept { return node_->kind; }

const Assignment& Program::assignment() const {
  assert(kind() == Kind::Atomic);
  return *node_->assignment;
}

const Program& Program::first() const {
  assert(kind() == Kind::Seq || kind() == Kind::Choice);
  return *node_->a;
}

const Program& Program::second() const {
  assert(kind() == Kind::Seq || kind() == Kind::Choice);
  return *node_->b;
}

const Program& Program::body() const {
  assert(kind() == Kind::Star);
  return *node_->a;
}

const Formula& Program::condition() const {
  assert(kind() == Kind::Test);
  return *node_->condition;
}

bool Program::is_star_free() const noexcept { return node_->star_free; }

std::size_t Program::hash() const noexcept { return node_->hash; }

bool operator==(const Program& a, const Program& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Program::Kind::Atomic:
      return a.assignment() == b.assignment();
    case Program::Kind::Seq:
    case Program::Kind::Choice:
      return a.first() == b.first() && a.second() == b.second();
    case Program::Kind::Star:
      return a.body() == b.body();
    case Program::Kind::Test:
      return a.condition() == b.condition();
  }
  return false;
}

std::strong_ordering operator<=>(const Program& a, const Program& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Program::Kind::Atomic:
      return a.assignment() <=> b.assignment();
    case Program::Kind::Seq:
    case Program::Kind::Choice:
      if (auto c = a.first() <=> b.first(); c != 0) return c;
      return a.second() <=> b.second();
    case Program::Kind::Star:
      return a.body() <=> b.body();
    case Program::Kind::Test:
      return a.condition() <=> b.condition();
  }
  return std::strong_ordering::equal;
}

}  // namespace dlpa
