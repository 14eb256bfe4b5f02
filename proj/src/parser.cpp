#include "dlpa/parser.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "dlpa/error.hpp"

namespace dlpa {

// ── Errors ──────────────────────────────────────────────────────────────────

namespace {

std::string format_parse_message(std::size_t line, std::size_t column, const std::string& message,
                                 const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : Error(format_parse_message(line, column, message, expected)),
      line_(line),
      column_(column),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

InfeasibleSizeError::InfeasibleSizeError(std::size_t atoms, std::size_t cap)
    : Error("enumeration over " + std::to_string(atoms) + " atoms exceeds the cap of " +
            std::to_string(cap)),
      atoms_(atoms),
      cap_(cap) {}

// ── Lexer ───────────────────────────────────────────────────────────────────

namespace {

enum class Tok {
  Tilde, Amp, Bar, Arrow, Iff,
  LBrack, RBrack, LAngle, RAngle, LParen, RParen, LBrace, RBrace,
  Semi, Choice, Star, Quest, Plus, Minus, Comma,
  Top, Bot, Ident, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::Choice: return "'u'";
    case Tok::Star: return "'*'";
    case Tok::Quest: return "'?'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Comma: return "','";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::Ident: return "atom";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, col});
    advance(len);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (text.substr(i, 3) == "<->") { push(Tok::Iff, 3); continue; }
    if (text.substr(i, 2) == "->") { push(Tok::Arrow, 2); continue; }
    switch (c) {
      case '~': push(Tok::Tilde, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '|': push(Tok::Bar, 1); continue;
      case '[': push(Tok::LBrack, 1); continue;
      case ']': push(Tok::RBrack, 1); continue;
      case '<': push(Tok::LAngle, 1); continue;
      case '>': push(Tok::RAngle, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '{': push(Tok::LBrace, 1); continue;
      case '}': push(Tok::RBrace, 1); continue;
      case ';': push(Tok::Semi, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '?': push(Tok::Quest, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '-': push(Tok::Minus, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             ((text[j] >= 'a' && text[j] <= 'z') || (text[j] >= 'A' && text[j] <= 'Z') ||
              (text[j] >= '0' && text[j] <= '9') || text[j] == '_')) {
        ++j;
      }
      const std::string_view word = text.substr(i, j - i);
      Tok kind = Tok::Ident;
      if (word == "u") kind = Tok::Choice;
      else if (word == "top") kind = Tok::Top;
      else if (word == "bot") kind = Tok::Bot;
      push(kind, j - i);
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ── Recursive descent ───────────────────────────────────────────────────────

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula formula_eof() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Program program_eof() {
    Program p = program();
    expect_end();
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok t) const { return peek().kind == t; }

  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, "unexpected " + found, std::move(expected));
  }

  void expect(Tok t) {
    if (!at(t)) fail({describe(t)});
    ++pos_;
  }

  void expect_end() {
    if (!at(Tok::End)) fail({"end of input"});
  }

  Atom atom() {
    if (!at(Tok::Ident)) fail({"atom"});
    const Token& t = take();
    if (t.text == reserved_atom().name()) {
      throw ParseError(t.line, t.column, "atom '" + t.text + "' is reserved");
    }
    return Atom(t.text);
  }

  // formula levels, loosest first
  Formula formula() {
    Formula lhs = implication();
    while (at(Tok::Iff)) {
      ++pos_;
      lhs = Formula::iff(lhs, implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at(Tok::Arrow)) {
      ++pos_;
      return Formula::implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (at(Tok::Bar)) {
      ++pos_;
      lhs = Formula::disj(lhs, conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at(Tok::Amp)) {
      ++pos_;
      lhs = Formula::conj(lhs, unary());
    }
    return lhs;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        ++pos_;
        return Formula::negate(unary());
      case Tok::LBrack: {
        ++pos_;
        Program p = program();
        expect(Tok::RBrack);
        return Formula::box(p, unary());
      }
      case Tok::LAngle: {
        ++pos_;
        Program p = program();
        expect(Tok::RAngle);
        return Formula::diamond(p, unary());
      }
      case Tok::LParen: {
        ++pos_;
        Formula f = formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Top:
        ++pos_;
        return Formula::top();
      case Tok::Bot:
        ++pos_;
        return Formula::bot();
      case Tok::Ident:
        return Formula::prop(atom());
      default:
        fail({"'~'", "'['", "'<'", "'('", "'top'", "'bot'", "atom"});
    }
  }

  // program levels, loosest first
  Program program() {
    Program lhs = sequence();
    while (at(Tok::Choice) || at(Tok::Bar)) {
      ++pos_;
      lhs = Program::choice(lhs, sequence());
    }
    return lhs;
  }

  Program sequence() {
    Program lhs = postfix();
    while (at(Tok::Semi)) {
      ++pos_;
      lhs = Program::seq(lhs, postfix());
    }
    return lhs;
  }

  Program postfix() {
    Program p = program_primary();
    while (at(Tok::Star)) {
      ++pos_;
      p = Program::star(p);
    }
    return p;
  }

  Program program_primary() {
    switch (peek().kind) {
      case Tok::Plus:
      case Tok::Minus:
        return Program::atomic(Assignment({literal()}));
      case Tok::LBrace:
        return Program::atomic(braced_assignment());
      case Tok::LParen:
        return parenthesised_program();
      case Tok::Tilde:
      case Tok::LBrack:
      case Tok::LAngle:
      case Tok::Top:
      case Tok::Bot:
      case Tok::Ident:
        return test();
      default:
        fail({"'+'", "'-'", "'{'", "'('", "formula"});
    }
  }

  Program test() {
    Formula cond = formula();
    expect(Tok::Quest);
    return Program::test(cond);
  }

  // `(` opens either a grouped program or a parenthesised test condition.
  // Try the test reading first and fall back; report whichever attempt got
  // further into the input.
  Program parenthesised_program() {
    const std::size_t start = pos_;
    std::optional<ParseError> first_error;
    try {
      return test();
    } catch (const EmptyAssignmentError&) {
      throw;
    } catch (const ParseError& e) {
      first_error = e;
    }
    pos_ = start;
    try {
      expect(Tok::LParen);
      Program p = program();
      expect(Tok::RParen);
      return p;
    } catch (const EmptyAssignmentError&) {
      throw;
    } catch (const ParseError& e) {
      if (std::pair(e.line(), e.column()) >= std::pair(first_error->line(), first_error->column())) {
        throw;
      }
      throw *first_error;
    }
  }

  Assignment::Binding literal() {
    bool value = at(Tok::Plus);
    if (!at(Tok::Plus) && !at(Tok::Minus)) fail({"'+'", "'-'"});
    ++pos_;
    return {atom(), value};
  }

  Assignment braced_assignment() {
    const Token& open = take();
    if (at(Tok::RBrace)) {
      throw EmptyAssignmentError(open.line, open.column, "empty assignment '{}'");
    }
    std::vector<Assignment::Binding> bindings;
    std::set<Atom> seen;
    while (true) {
      const Token& start = peek();
      auto b = literal();
      if (!seen.insert(b.first).second) {
        throw ParseError(start.line, start.column,
                         "atom '" + b.first.name() + "' assigned twice in one assignment");
      }
      bindings.push_back(std::move(b));
      if (at(Tok::Comma)) {
        ++pos_;
        continue;
      }
      expect(Tok::RBrace);
      break;
    }
    return Assignment(std::move(bindings));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ── Printer ─────────────────────────────────────────────────────────────────

void print(std::ostream& os, const Formula& f);
void print(std::ostream& os, const Program& p);

// Operands of a prefix operator or of `&`: binary formulas get parentheses.
void print_operand(std::ostream& os, const Formula& f) {
  if (f.is_and()) {
    os << '(';
    print(os, f);
    os << ')';
  } else {
    print(os, f);
  }
}

void print_program_operand(std::ostream& os, const Program& p) {
  if (p.kind() == Program::Kind::Seq || p.kind() == Program::Kind::Choice) {
    os << '(';
    print(os, p);
    os << ')';
  } else {
    print(os, p);
  }
}

void print(std::ostream& os, const Formula& f) {
  if (f == Formula::top()) {
    os << "top";
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::Prop:
      os << f.atom().name();
      return;
    case Formula::Kind::Not:
      os << '~';
      print_operand(os, f.operand());
      return;
    case Formula::Kind::And:
      print_operand(os, f.lhs());
      os << " & ";
      print_operand(os, f.rhs());
      return;
    case Formula::Kind::Box:
      os << '[';
      print(os, f.program());
      os << "] ";
      print_operand(os, f.body());
      return;
  }
}

void print(std::ostream& os, const Assignment& a) {
  if (a.is_singleton()) {
    const auto& [atom, value] = a.bindings().front();
    os << (value ? '+' : '-') << atom.name();
    return;
  }
  os << '{';
  bool first = true;
  for (const auto& [atom, value] : a.bindings()) {
    if (!first) os << ',';
    first = false;
    os << (value ? '+' : '-') << atom.name();
  }
  os << '}';
}

void print(std::ostream& os, const Program& p) {
  switch (p.kind()) {
    case Program::Kind::Atomic:
      print(os, p.assignment());
      return;
    case Program::Kind::Seq:
      print_program_operand(os, p.first());
      os << " ; ";
      print_program_operand(os, p.second());
      return;
    case Program::Kind::Choice:
      print_program_operand(os, p.first());
      os << " u ";
      print_program_operand(os, p.second());
      return;
    case Program::Kind::Star:
      print_program_operand(os, p.body());
      os << '*';
      return;
    case Program::Kind::Test:
      print_operand(os, p.condition());
      os << '?';
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).formula_eof(); }

Program parse_program(std::string_view text) { return Parser(tokenize(text)).program_eof(); }

std::string render(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::string render(const Program& p) {
  std::ostringstream os;
  print(os, p);
  return os.str();
}

std::string render(const Assignment& a) {
  std::ostringstream os;
  print(os, a);
  return os.str();
}

std::string render(const Trace& t) {
  if (t.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) os << '.';
    print(os, t[i]);
  }
  return os.str();
}

}  // namespace dlpa
