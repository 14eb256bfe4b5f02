#include "dlpa/reductions.hpp"

#include <cctype>
#include <sstream>

#include "dlpa/error.hpp"
#include "dlpa/parser.hpp"

namespace dlpa {

Program master_program(const AtomSet& atoms) {
  std::optional<Program> out;
  for (const Atom& p : atoms) {
    Program step = Program::choice(Program::atomic(Assignment::set_true(p)),
                                   Program::atomic(Assignment::set_false(p)));
    out = out ? Program::seq(*out, step) : step;
  }
  if (!out) return Program::test(Formula::top());
  return *out;
}

McInstance sat_to_mc(const Formula& f) {
  return McInstance{Valuation{}, Formula::diamond(master_program(f), f)};
}

std::size_t reduction_length(const Formula& f) {
  return 1 + length(master_program(f)) + length(f);
}

Formula mc_to_sat(const Valuation& v, const Formula& f) {
  Formula out = f;
  const AtomSet vocab = vocabulary(f);
  for (const Atom& p : vocab) {
    if (v.contains(p)) out = Formula::conj(out, Formula::prop(p));
  }
  for (const Atom& p : vocab) {
    if (!v.contains(p)) out = Formula::conj(out, Formula::negate(Formula::prop(p)));
  }
  return out;
}

// ── PDL emission ────────────────────────────────────────────────────────────

namespace {

std::string action_name(const Atom& p, bool value) {
  return std::string(value ? "a_p" : "a_m") + p.name();
}

void pdl(std::ostream& os, const Formula& f);

void pdl_operand(std::ostream& os, const Formula& f) {
  if (f.is_and()) {
    os << '(';
    pdl(os, f);
    os << ')';
  } else {
    pdl(os, f);
  }
}

void pdl(std::ostream& os, const Program& p) {
  auto operand = [&os](const Program& q) {
    const bool wrap = q.kind() == Program::Kind::Seq || q.kind() == Program::Kind::Choice;
    if (wrap) os << '(';
    pdl(os, q);
    if (wrap) os << ')';
  };
  switch (p.kind()) {
    case Program::Kind::Atomic: {
      const Assignment& a = p.assignment();
      if (!a.is_singleton()) {
        throw PreconditionError("PDL translation needs single-atom assignments, got " + render(a));
      }
      os << action_name(a.bindings().front().first, a.bindings().front().second);
      return;
    }
    case Program::Kind::Seq:
      operand(p.first());
      os << " ; ";
      operand(p.second());
      return;
    case Program::Kind::Choice:
      operand(p.first());
      os << " u ";
      operand(p.second());
      return;
    case Program::Kind::Star:
      operand(p.body());
      os << '*';
      return;
    case Program::Kind::Test:
      pdl_operand(os, p.condition());
      os << '?';
      return;
  }
}

void pdl(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      os << f.atom().name();
      return;
    case Formula::Kind::Not:
      os << '~';
      pdl_operand(os, f.operand());
      return;
    case Formula::Kind::And:
      pdl_operand(os, f.lhs());
      os << " & ";
      pdl_operand(os, f.rhs());
      return;
    case Formula::Kind::Box:
      os << '[';
      pdl(os, f.program());
      os << "] ";
      pdl_operand(os, f.body());
      return;
  }
}

// Atoms, `true`, action names and connectives; brackets of a modality count
// once, grouping parentheses not at all.
std::size_t count_symbols(const std::string& text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      ++n;
      i = j;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      ++n;
      i += 2;
    } else {
      if (c == '~' || c == '&' || c == '[' || c == '<' || c == ';' || c == '*' || c == '?') ++n;
      ++i;
    }
  }
  return n;
}

}  // namespace

std::string PdlEmbedding::text() const {
  std::ostringstream os;
  os << translation << '\n';
  os << "& [" << universal << "] (\n";
  bool first = true;
  auto emit = [&](const std::vector<std::string>& clauses) {
    for (const auto& c : clauses) {
      os << (first ? "    " : "  & ") << c << '\n';
      first = false;
    }
  };
  emit(box_clauses);
  emit(seriality_clauses);
  emit(frame_clauses);
  os << ")\n";
  return os.str();
}

PdlEmbedding emit_pdl_embedding(const Formula& f) {
  PdlEmbedding out;
  {
    std::ostringstream os;
    pdl(os, f);
    out.translation = os.str();
  }
  const AtomSet atoms = vocabulary(f);
  {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const Atom& p : atoms) {
      if (!first) os << " u ";
      first = false;
      os << action_name(p, true) << " u " << action_name(p, false);
    }
    os << ")*";
    out.universal = os.str();
  }
  for (const Atom& p : atoms) {
    out.box_clauses.push_back("[" + action_name(p, true) + "] " + p.name());
    out.box_clauses.push_back("[" + action_name(p, false) + "] ~" + p.name());
  }
  for (const Atom& p : atoms) {
    out.seriality_clauses.push_back("<" + action_name(p, true) + "> true");
    out.seriality_clauses.push_back("<" + action_name(p, false) + "> true");
  }
  // Both assignments to p leave q alone; one clause per polarity of q covers
  // a_pp and a_mp together.
  for (const Atom& q : atoms) {
    for (const Atom& p : atoms) {
      if (p == q) continue;
      const std::string both = action_name(p, true) + " u " + action_name(p, false);
      out.frame_clauses.push_back(q.name() + " -> [" + both + "] " + q.name());
      out.frame_clauses.push_back("~" + q.name() + " -> [" + both + "] ~" + q.name());
    }
  }
  out.symbol_count = count_symbols(out.text());
  return out;
}

}  // namespace dlpa
