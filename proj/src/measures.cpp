#include "dlpa/measures.hpp"

#include <cassert>

namespace dlpa {

std::size_t length(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return 1;
    case Formula::Kind::Not:
      return 1 + length(f.operand());
    case Formula::Kind::And:
      return 1 + length(f.lhs()) + length(f.rhs());
    case Formula::Kind::Box:
      return 1 + length(f.program()) + length(f.body());
  }
  return 0;
}

std::size_t length(const Program& p) {
  switch (p.kind()) {
    case Program::Kind::Atomic:
      return p.assignment().size();
    case Program::Kind::Seq:
    case Program::Kind::Choice:
      return 1 + length(p.first()) + length(p.second());
    case Program::Kind::Star:
      return 1 + length(p.body());
    case Program::Kind::Test:
      return 1 + length(p.condition());
  }
  return 0;
}

namespace {

// `full` adds cl□([p2]f) under [p1;p2]f, which the table leaves out.
void closure_into(const Formula& f, FormulaSet& out, bool full);

void box_closure_into(const Program& p, const Formula& body, FormulaSet& out, bool full) {
  const Formula self = Formula::box(p, body);
  if (!out.insert(self).second) return;
  switch (p.kind()) {
    case Program::Kind::Atomic:
      for (const Atom& a : p.assignment().domain()) out.insert(Formula::prop(a));
      return;
    case Program::Kind::Seq:
      box_closure_into(p.first(), Formula::box(p.second(), body), out, full);
      if (full) box_closure_into(p.second(), body, out, full);
      return;
    case Program::Kind::Choice:
      box_closure_into(p.first(), body, out, full);
      box_closure_into(p.second(), body, out, full);
      return;
    case Program::Kind::Star:
      box_closure_into(p.body(), self, out, full);
      return;
    case Program::Kind::Test:
      closure_into(p.condition(), out, full);
      return;
  }
}

void closure_into(const Formula& f, FormulaSet& out, bool full) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      out.insert(f);
      return;
    case Formula::Kind::Not:
      out.insert(f);
      closure_into(f.operand(), out, full);
      return;
    case Formula::Kind::And:
      out.insert(f);
      closure_into(f.lhs(), out, full);
      closure_into(f.rhs(), out, full);
      return;
    case Formula::Kind::Box:
      box_closure_into(f.program(), f.body(), out, full);
      closure_into(f.body(), out, full);
      return;
  }
}

void atoms_into(const Formula& f, AtomSet& out);

void atoms_into(const Program& p, AtomSet& out) {
  switch (p.kind()) {
    case Program::Kind::Atomic:
      for (const Atom& a : p.assignment().domain()) out.insert(a);
      return;
    case Program::Kind::Seq:
    case Program::Kind::Choice:
      atoms_into(p.first(), out);
      atoms_into(p.second(), out);
      return;
    case Program::Kind::Star:
      atoms_into(p.body(), out);
      return;
    case Program::Kind::Test:
      atoms_into(p.condition(), out);
      return;
  }
}

void atoms_into(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      out.insert(f.atom());
      return;
    case Formula::Kind::Not:
      atoms_into(f.operand(), out);
      return;
    case Formula::Kind::And:
      atoms_into(f.lhs(), out);
      atoms_into(f.rhs(), out);
      return;
    case Formula::Kind::Box:
      atoms_into(f.program(), out);
      atoms_into(f.body(), out);
      return;
  }
}

using TraceSet = std::set<Trace>;

TraceSet concat(const TraceSet& xs, const TraceSet& ys) {
  TraceSet out;
  for (const Trace& x : xs) {
    for (const Trace& y : ys) {
      Trace t = x;
      t.insert(t.end(), y.begin(), y.end());
      out.insert(std::move(t));
    }
  }
  return out;
}

}  // namespace

FormulaSet closure(const Formula& f) {
  FormulaSet out;
  closure_into(f, out, false);
  return out;
}

FormulaSet full_closure(const Formula& f) {
  FormulaSet out;
  closure_into(f, out, true);
  return out;
}

FormulaSet box_closure(const Formula& box) {
  assert(box.is_box());
  FormulaSet out;
  box_closure_into(box.program(), box.body(), out, false);
  return out;
}

FormulaSet extended_closure(const Formula& f) {
  FormulaSet out = closure(f);
  FormulaSet negations;
  for (const Formula& g : out) negations.insert(Formula::negate(g));
  out.merge(negations);
  return out;
}

AtomSet vocabulary(const Formula& f) {
  AtomSet out;
  atoms_into(f, out);
  return out;
}

AtomSet vocabulary(const Program& p) {
  AtomSet out;
  atoms_into(p, out);
  return out;
}

std::set<Trace> exe_traces(const Program& p, std::size_t star_bound) {
  switch (p.kind()) {
    case Program::Kind::Atomic:
      return {Trace{p.assignment()}};
    case Program::Kind::Seq:
      return concat(exe_traces(p.first(), star_bound), exe_traces(p.second(), star_bound));
    case Program::Kind::Choice: {
      TraceSet out = exe_traces(p.first(), star_bound);
      out.merge(exe_traces(p.second(), star_bound));
      return out;
    }
    case Program::Kind::Star: {
      const TraceSet step = exe_traces(p.body(), star_bound);
      TraceSet out{Trace{}};
      TraceSet layer{Trace{}};
      for (std::size_t n = 0; n < star_bound; ++n) {
        layer = concat(layer, step);
        out.insert(layer.begin(), layer.end());
      }
      return out;
    }
    case Program::Kind::Test:
      return exe_traces(p.condition(), star_bound);
  }
  return {};
}

std::set<Trace> exe_traces(const Formula& f, std::size_t star_bound) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return {Trace{}};
    case Formula::Kind::Not:
      return exe_traces(f.operand(), star_bound);
    case Formula::Kind::And: {
      TraceSet out = exe_traces(f.lhs(), star_bound);
      out.merge(exe_traces(f.rhs(), star_bound));
      return out;
    }
    case Formula::Kind::Box: {
      TraceSet out = exe_traces(f.program(), star_bound);
      out.merge(exe_traces(f.body(), star_bound));
      return out;
    }
  }
  return {};
}

}  // namespace dlpa
