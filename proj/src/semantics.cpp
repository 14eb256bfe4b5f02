#include "dlpa/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "dlpa/error.hpp"

namespace dlpa {

// ── Valuation ───────────────────────────────────────────────────────────────

Valuation::Valuation(std::initializer_list<std::string_view> names) {
  for (auto n : names) trues_.insert(Atom(std::string(n)));
}

Valuation Valuation::restrict_to(const AtomSet& universe) const {
  AtomSet out;
  std::set_intersection(trues_.begin(), trues_.end(), universe.begin(), universe.end(),
                        std::inserter(out, out.end()));
  return Valuation(std::move(out));
}

Valuation parse_valuation(std::string_view text) {
  std::string_view body = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  body = trim(body);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError(1, body.size() + 1, "unterminated valuation", {"'}'"});
    body = trim(body.substr(1, body.size() - 2));
  }
  Valuation v;
  std::size_t column = 1;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    if (!Atom::is_valid_name(item)) {
      throw ParseError(1, column, "invalid atom '" + std::string(item) + "' in valuation", {"atom"});
    }
    v.insert(Atom(std::string(item)));
    if (comma == std::string_view::npos) break;
    column += comma + 1;
    body.remove_prefix(comma + 1);
  }
  return v;
}

std::string format_valuation(const Valuation& v) {
  if (v.empty()) return "{}";
  std::string out;
  for (const Atom& a : v.atoms()) {
    if (!out.empty()) out += ',';
    out += a.name();
  }
  return out;
}

Valuation update(const Valuation& v, const Assignment& a) {
  Valuation out = v;
  for (const auto& [atom, value] : a.bindings()) {
    if (value) out.insert(atom);
    else out.erase(atom);
  }
  return out;
}

Valuation apply_trace(const Valuation& v, const Trace& t) {
  Valuation out = v;
  for (const Assignment& a : t) out = update(out, a);
  return out;
}

// ── Direct evaluation over bit masks ────────────────────────────────────────

namespace {

using Mask = std::uint64_t;

void collect_atoms(const Formula& f, AtomSet& out);

void collect_atoms(const Program& p, AtomSet& out) {
  switch (p.kind()) {
    case Program::Kind::Atomic:
      for (const auto& b : p.assignment().bindings()) out.insert(b.first);
      return;
    case Program::Kind::Seq:
    case Program::Kind::Choice:
      collect_atoms(p.first(), out);
      collect_atoms(p.second(), out);
      return;
    case Program::Kind::Star:
      collect_atoms(p.body(), out);
      return;
    case Program::Kind::Test:
      collect_atoms(p.condition(), out);
      return;
  }
}

void collect_atoms(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      out.insert(f.atom());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.operand(), out);
      return;
    case Formula::Kind::And:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
    case Formula::Kind::Box:
      collect_atoms(f.program(), out);
      collect_atoms(f.body(), out);
      return;
  }
}

class AtomIndex {
 public:
  explicit AtomIndex(const AtomSet& atoms, std::size_t cap = 64) {
    if (atoms.size() > cap) throw InfeasibleSizeError(atoms.size(), cap);
    std::size_t i = 0;
    for (const Atom& a : atoms) {
      bits_.emplace(a, Mask{1} << i);
      order_.push_back(a);
      ++i;
    }
  }

  Mask bit(const Atom& a) const { return bits_.at(a); }
  std::size_t size() const { return order_.size(); }

  Mask encode(const Valuation& v) const {
    Mask m = 0;
    for (const auto& [atom, b] : bits_) {
      if (v.contains(atom)) m |= b;
    }
    return m;
  }

  Valuation decode(Mask m) const {
    Valuation v;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (m & (Mask{1} << i)) v.insert(order_[i]);
    }
    return v;
  }

 private:
  std::map<Atom, Mask> bits_;
  std::vector<Atom> order_;
};

class Evaluator {
 public:
  explicit Evaluator(const AtomIndex& index) : index_(index) {}

  bool holds(Mask v, const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::Prop:
        return (v & index_.bit(f.atom())) != 0;
      case Formula::Kind::Not:
        return !holds(v, f.operand());
      case Formula::Kind::And:
        return holds(v, f.lhs()) && holds(v, f.rhs());
      case Formula::Kind::Box:
        for (Mask w : successors(v, f.program())) {
          if (!holds(w, f.body())) return false;
        }
        return true;
    }
    return false;
  }

  // Sorted, duplicate-free list of valuations reachable by one run of p.
  std::vector<Mask> successors(Mask v, const Program& p) const {
    switch (p.kind()) {
      case Program::Kind::Atomic: {
        Mask out = v;
        for (const auto& [atom, value] : p.assignment().bindings()) {
          if (value) out |= index_.bit(atom);
          else out &= ~index_.bit(atom);
        }
        return {out};
      }
      case Program::Kind::Seq: {
        std::vector<Mask> out;
        for (Mask mid : successors(v, p.first())) {
          auto next = successors(mid, p.second());
          out.insert(out.end(), next.begin(), next.end());
        }
        return normalise(std::move(out));
      }
      case Program::Kind::Choice: {
        auto out = successors(v, p.first());
        auto rhs = successors(v, p.second());
        out.insert(out.end(), rhs.begin(), rhs.end());
        return normalise(std::move(out));
      }
      case Program::Kind::Star: {
        std::vector<Mask> seen{v};
        std::vector<Mask> frontier{v};
        while (!frontier.empty()) {
          Mask cur = frontier.back();
          frontier.pop_back();
          for (Mask w : successors(cur, p.body())) {
            if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
              seen.push_back(w);
              frontier.push_back(w);
            }
          }
        }
        return normalise(std::move(seen));
      }
      case Program::Kind::Test:
        if (holds(v, p.condition())) return {v};
        return {};
    }
    return {};
  }

 private:
  static std::vector<Mask> normalise(std::vector<Mask> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  const AtomIndex& index_;
};

// ── Relational route ────────────────────────────────────────────────────────

// Dense boolean matrix over the 2^n valuations of the universe.
class BitRelation {
 public:
  explicit BitRelation(std::size_t n) : n_(n), cells_(n * n, 0) {}

  static BitRelation identity(std::size_t n) {
    BitRelation r(n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  bool get(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j) { cells_[i * n_ + j] = 1; }
  std::size_t size() const { return n_; }

  BitRelation compose(const BitRelation& other) const {
    BitRelation out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!get(i, k)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (other.get(k, j)) out.set(i, j);
        }
      }
    }
    return out;
  }

  BitRelation unite(const BitRelation& other) const {
    BitRelation out = *this;
    for (std::size_t c = 0; c < cells_.size(); ++c) out.cells_[c] |= other.cells_[c];
    return out;
  }

  friend bool operator==(const BitRelation&, const BitRelation&) = default;

 private:
  std::size_t n_;
  std::vector<char> cells_;
};

class RelationalModel {
 public:
  explicit RelationalModel(const AtomIndex& index)
      : index_(index), states_(std::size_t{1} << index.size()) {}

  std::size_t states() const { return states_; }

  std::vector<char> extension(const Formula& f) const {
    std::vector<char> out(states_, 0);
    switch (f.kind()) {
      case Formula::Kind::Prop: {
        const Mask b = index_.bit(f.atom());
        for (std::size_t s = 0; s < states_; ++s) out[s] = (s & b) != 0;
        return out;
      }
      case Formula::Kind::Not: {
        auto inner = extension(f.operand());
        for (std::size_t s = 0; s < states_; ++s) out[s] = !inner[s];
        return out;
      }
      case Formula::Kind::And: {
        auto l = extension(f.lhs());
        auto r = extension(f.rhs());
        for (std::size_t s = 0; s < states_; ++s) out[s] = l[s] && r[s];
        return out;
      }
      case Formula::Kind::Box: {
        const BitRelation rel = relation(f.program());
        const auto body = extension(f.body());
        for (std::size_t s = 0; s < states_; ++s) {
          bool all = true;
          for (std::size_t t = 0; t < states_ && all; ++t) {
            if (rel.get(s, t) && !body[t]) all = false;
          }
          out[s] = all;
        }
        return out;
      }
    }
    return out;
  }

  BitRelation relation(const Program& p) const {
    switch (p.kind()) {
      case Program::Kind::Atomic: {
        BitRelation r(states_);
        Mask set = 0;
        Mask clear = 0;
        for (const auto& [atom, value] : p.assignment().bindings()) {
          (value ? set : clear) |= index_.bit(atom);
        }
        for (std::size_t s = 0; s < states_; ++s) r.set(s, (s & ~clear) | set);
        return r;
      }
      case Program::Kind::Seq:
        return relation(p.first()).compose(relation(p.second()));
      case Program::Kind::Choice:
        return relation(p.first()).unite(relation(p.second()));
      case Program::Kind::Star: {
        const BitRelation step = relation(p.body());
        BitRelation acc = BitRelation::identity(states_);
        while (true) {
          BitRelation next = acc.unite(acc.compose(step));
          if (next == acc) return acc;
          acc = std::move(next);
        }
      }
      case Program::Kind::Test: {
        BitRelation r(states_);
        const auto cond = extension(p.condition());
        for (std::size_t s = 0; s < states_; ++s) {
          if (cond[s]) r.set(s, s);
        }
        return r;
      }
    }
    return BitRelation(states_);
  }

 private:
  const AtomIndex& index_;
  std::size_t states_;
};

constexpr std::size_t kRelationalCap = 12;

void require_covers(const AtomSet& universe, const AtomSet& needed) {
  for (const Atom& a : needed) {
    if (!universe.count(a)) {
      throw PreconditionError("universe does not contain atom '" + a.name() + "'");
    }
  }
}

}  // namespace

bool eval(const Valuation& v, const Formula& f) {
  AtomSet atoms;
  collect_atoms(f, atoms);
  const AtomIndex index(atoms);
  return Evaluator(index).holds(index.encode(v), f);
}

Relation program_relation(const Program& p, const AtomSet& universe) {
  AtomSet needed;
  collect_atoms(p, needed);
  require_covers(universe, needed);
  const AtomIndex index(universe, kRelationalCap);
  const RelationalModel model(index);
  const BitRelation rel = model.relation(p);
  Relation out{universe, {}};
  for (std::size_t s = 0; s < model.states(); ++s) {
    for (std::size_t t = 0; t < model.states(); ++t) {
      if (rel.get(s, t)) out.pairs.emplace(index.decode(s), index.decode(t));
    }
  }
  return out;
}

std::set<Valuation> models(const Formula& f, const AtomSet& universe) {
  AtomSet needed;
  collect_atoms(f, needed);
  require_covers(universe, needed);
  const AtomIndex index(universe, kRelationalCap);
  const RelationalModel model(index);
  const auto ext = model.extension(f);
  std::set<Valuation> out;
  for (std::size_t s = 0; s < model.states(); ++s) {
    if (ext[s]) out.insert(index.decode(s));
  }
  return out;
}

std::vector<Valuation> all_valuations(const AtomSet& universe, std::size_t cap) {
  if (universe.size() > cap) throw InfeasibleSizeError(universe.size(), cap);
  const AtomIndex index(universe);
  std::vector<Valuation> out;
  const Mask count = Mask{1} << universe.size();
  out.reserve(count);
  for (Mask m = 0; m < count; ++m) out.push_back(index.decode(m));
  return out;
}

namespace {

// Enumerates the vocabulary of f and reports whether any (want_all=false)
// or every (want_all=true) valuation satisfies f.
bool enumerate(const Formula& f, std::size_t cap, bool want_all) {
  const AtomSet vocab = vocabulary(f);
  if (vocab.size() > cap) throw InfeasibleSizeError(vocab.size(), cap);
  const AtomIndex index(vocab);
  const Evaluator ev(index);
  const Mask count = Mask{1} << vocab.size();
  for (Mask m = 0; m < count; ++m) {
    const bool holds = ev.holds(m, f);
    if (want_all && !holds) return false;
    if (!want_all && holds) return true;
  }
  return want_all;
}

}  // namespace

bool oracle_valid(const Formula& f, std::size_t cap) { return enumerate(f, cap, true); }

bool oracle_sat(const Formula& f, std::size_t cap) { return enumerate(f, cap, false); }

}  // namespace dlpa
