#include "minlog/formula.hpp"

#include <cctype>
#include <sstream>

namespace minlog {

FormulaPtr mk_atom(std::string name) {
  return std::make_shared<Formula>(Conn::Atom, std::move(name), nullptr, nullptr);
}

FormulaPtr mk_bot() {
  static const FormulaPtr b = std::make_shared<Formula>(Conn::Bottom, "", nullptr, nullptr);
  return b;
}

FormulaPtr mk_top() {
  static const FormulaPtr t = std::make_shared<Formula>(Conn::Top, "", nullptr, nullptr);
  return t;
}

FormulaPtr mk_neg(FormulaPtr f) {
  return std::make_shared<Formula>(Conn::Neg, "", std::move(f), nullptr);
}

FormulaPtr mk_and(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Conn::Conj, "", std::move(l), std::move(r));
}

FormulaPtr mk_or(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Conn::Disj, "", std::move(l), std::move(r));
}

FormulaPtr mk_imp(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Conn::Impl, "", std::move(l), std::move(r));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->conn != b->conn) return false;
  switch (a->conn) {
    case Conn::Atom: return a->atom == b->atom;
    case Conn::Bottom:
    case Conn::Top: return true;
    case Conn::Neg: return equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

const std::string& top_atom_name() {
  static const std::string name = "⊤₀"; // outside the grammar's atom alphabet
  return name;
}

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom:
    case Conn::Bottom: return f;
    case Conn::Top: {
      static const FormulaPtr t = mk_imp(mk_atom(top_atom_name()), mk_atom(top_atom_name()));
      return t;
    }
    case Conn::Neg: return mk_imp(desugar(f->lhs), mk_bot());
    case Conn::Conj: return mk_and(desugar(f->lhs), desugar(f->rhs));
    case Conn::Disj: return mk_or(desugar(f->lhs), desugar(f->rhs));
    case Conn::Impl: {
      FormulaPtr l = desugar(f->lhs), r = desugar(f->rhs);
      if (l.get() == f->lhs.get() && r.get() == f->rhs.get()) return f;
      return mk_imp(std::move(l), std::move(r));
    }
  }
  return f; // unreachable
}

bool is_core(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom:
    case Conn::Bottom: return true;
    case Conn::Top:
    case Conn::Neg: return false;
    default: return is_core(f->lhs) && is_core(f->rhs);
  }
}

static void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->conn) {
    case Conn::Atom: out.insert(f->atom); return;
    case Conn::Bottom:
    case Conn::Top: return;
    case Conn::Neg: collect_atoms(f->lhs, out); return;
    default:
      collect_atoms(f->lhs, out);
      collect_atoms(f->rhs, out);
  }
}

std::set<std::string> atoms_of(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool contains_bottom(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Bottom: return true;
    case Conn::Atom:
    case Conn::Top: return false;
    case Conn::Neg: return contains_bottom(f->lhs);
    default: return contains_bottom(f->lhs) || contains_bottom(f->rhs);
  }
}

// Printer precedence levels: -> 1, | 2, & 3, ~ 4, leaves 5.
namespace {

bool is_top_sugar(const FormulaPtr& f) {
  return f->conn == Conn::Impl && f->lhs->conn == Conn::Atom && f->rhs->conn == Conn::Atom &&
         f->lhs->atom == top_atom_name() && f->rhs->atom == top_atom_name();
}

void print(std::ostringstream& os, const FormulaPtr& f, int min_prec) {
  if (is_top_sugar(f)) {
    os << "top";
    return;
  }
  // f -> bot renders as ~f so printed text stays inside the grammar.
  if (f->conn == Conn::Neg || (f->conn == Conn::Impl && f->rhs->conn == Conn::Bottom)) {
    os << '~';
    print(os, f->lhs, 4);
    return;
  }
  switch (f->conn) {
    case Conn::Atom: os << f->atom; return;
    case Conn::Bottom: os << "bot"; return;
    case Conn::Top: os << "top"; return;
    case Conn::Impl: {
      bool paren = min_prec > 1;
      if (paren) os << '(';
      print(os, f->lhs, 2);
      os << " -> ";
      print(os, f->rhs, 1);
      if (paren) os << ')';
      return;
    }
    case Conn::Disj: {
      bool paren = min_prec > 2;
      if (paren) os << '(';
      print(os, f->lhs, 2);
      os << " | ";
      print(os, f->rhs, 3);
      if (paren) os << ')';
      return;
    }
    case Conn::Conj: {
      bool paren = min_prec > 3;
      if (paren) os << '(';
      print(os, f->lhs, 3);
      os << " & ";
      print(os, f->rhs, 4);
      if (paren) os << ')';
      return;
    }
    case Conn::Neg: return; // handled above
  }
}

} // namespace

std::string to_string(const FormulaPtr& f) {
  std::ostringstream os;
  print(os, f, 1);
  return os.str();
}

// ---- parser ----

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  enum class Tok { Atom, Bot, Top, Neg, And, Or, Impl, LParen, RParen, End };
  Tok tok = Tok::End;
  std::string atom;
  int tok_line = 1, tok_col = 1;

  [[noreturn]] void fail(const std::string& msg, int l, int c) { throw ParseError(msg, l, c); }

  void bump(size_t n) {
    for (size_t i = 0; i < n; ++i) {
      if (text[pos + i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    pos += n;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) bump(1);
    tok_line = line;
    tok_col = col;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (text.substr(pos, 3) == "_|_") {
      bump(3);
      tok = Tok::Bot;
      return;
    }
    if (ident_start(c)) {
      size_t end = pos;
      while (end < text.size() && ident_char(text[end])) ++end;
      std::string word(text.substr(pos, end - pos));
      bump(end - pos);
      if (word == "bot") {
        tok = Tok::Bot;
      } else if (word == "top") {
        tok = Tok::Top;
      } else {
        tok = Tok::Atom;
        atom = std::move(word);
      }
      return;
    }
    switch (c) {
      case '~': bump(1); tok = Tok::Neg; return;
      case '&': bump(1); tok = Tok::And; return;
      case '|': bump(1); tok = Tok::Or; return;
      case '(': bump(1); tok = Tok::LParen; return;
      case ')': bump(1); tok = Tok::RParen; return;
      case '-':
        if (text.substr(pos, 2) == "->") {
          bump(2);
          tok = Tok::Impl;
          return;
        }
        fail("expected '->'", line, col);
      default: fail(std::string("unexpected character '") + c + "'", line, col);
    }
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(std::string_view text) {
    lx.text = text;
    lx.next();
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lx.tok_line, lx.tok_col); }

  FormulaPtr parse_impl() {
    FormulaPtr left = parse_or();
    if (lx.tok == Lexer::Tok::Impl) {
      lx.next();
      return mk_imp(std::move(left), parse_impl());
    }
    return left;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (lx.tok == Lexer::Tok::Or) {
      lx.next();
      f = mk_or(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_neg();
    while (lx.tok == Lexer::Tok::And) {
      lx.next();
      f = mk_and(std::move(f), parse_neg());
    }
    return f;
  }

  FormulaPtr parse_neg() {
    switch (lx.tok) {
      case Lexer::Tok::Neg: lx.next(); return mk_neg(parse_neg());
      case Lexer::Tok::Bot: lx.next(); return mk_bot();
      case Lexer::Tok::Top: lx.next(); return mk_top();
      case Lexer::Tok::Atom: {
        FormulaPtr f = mk_atom(lx.atom);
        lx.next();
        return f;
      }
      case Lexer::Tok::LParen: {
        lx.next();
        FormulaPtr f = parse_impl();
        if (lx.tok != Lexer::Tok::RParen) fail("expected ')'");
        lx.next();
        return f;
      }
      case Lexer::Tok::End: fail("unexpected end of input");
      default: fail("expected a formula");
    }
  }
};

} // namespace

FormulaPtr parse(std::string_view text) {
  Parser p(text);
  FormulaPtr f = p.parse_impl();
  if (p.lx.tok != Lexer::Tok::End) p.fail("trailing input");
  return f;
}

// ---- schemas ----

Schema Schema::over(FormulaPtr body, std::vector<std::string> variables) {
  std::set<std::string> declared;
  for (const auto& v : variables) {
    if (!declared.insert(v).second)
      throw std::invalid_argument("schema variable listed twice: " + v);
  }
  for (const auto& a : atoms_of(body)) {
    if (a != top_atom_name() && !declared.count(a))
      throw std::invalid_argument("schema body mentions undeclared variable: " + a);
  }
  return Schema{std::move(body), std::move(variables)};
}

Schema Schema::over(std::string_view text, std::vector<std::string> variables) {
  return over(parse(text), std::move(variables));
}

std::string to_string(const Schema& s) { return to_string(s.body); }

static FormulaPtr substitute_impl(const FormulaPtr& f,
                                  const std::map<std::string, FormulaPtr>& assignment) {
  switch (f->conn) {
    case Conn::Atom: {
      auto it = assignment.find(f->atom);
      if (it == assignment.end()) {
        if (f->atom == top_atom_name()) return f;
        throw std::invalid_argument("no assignment for schema variable: " + f->atom);
      }
      return it->second;
    }
    case Conn::Bottom:
    case Conn::Top: return f;
    case Conn::Neg: return mk_neg(substitute_impl(f->lhs, assignment));
    case Conn::Conj: return mk_and(substitute_impl(f->lhs, assignment), substitute_impl(f->rhs, assignment));
    case Conn::Disj: return mk_or(substitute_impl(f->lhs, assignment), substitute_impl(f->rhs, assignment));
    case Conn::Impl: return mk_imp(substitute_impl(f->lhs, assignment), substitute_impl(f->rhs, assignment));
  }
  return f; // unreachable
}

FormulaPtr substitute(const Schema& s, const std::map<std::string, FormulaPtr>& assignment) {
  for (const auto& v : s.variables) {
    if (!assignment.count(v)) throw std::invalid_argument("no assignment for schema variable: " + v);
  }
  return substitute_impl(s.body, assignment);
}

// ---- implicational translation ----

namespace {

FormulaPtr neg_core(FormulaPtr f) { return mk_imp(std::move(f), mk_bot()); }

// Single-formula positions: operands of a disjunction and antecedents.  A
// conjunction here cannot split, so it has no reading.
FormulaPtr tr_one(const FormulaPtr& f, OrForm form);

// Curries conjunctive antecedents through to the translated consequent.
FormulaPtr tr_arrow(const FormulaPtr& antecedent, FormulaPtr consequent, OrForm form) {
  if (antecedent->conn == Conn::Conj)
    return tr_arrow(antecedent->lhs, tr_arrow(antecedent->rhs, std::move(consequent), form), form);
  return mk_imp(tr_one(antecedent, form), std::move(consequent));
}

FormulaPtr tr_one(const FormulaPtr& f, OrForm form) {
  switch (f->conn) {
    case Conn::Atom:
    case Conn::Bottom: return f;
    case Conn::Disj: {
      FormulaPtr a = tr_one(f->lhs, form), b = tr_one(f->rhs, form);
      if (form == OrForm::NegRight) std::swap(a, b);
      return mk_imp(neg_core(std::move(a)), neg_core(neg_core(std::move(b))));
    }
    case Conn::Impl: return tr_arrow(f->lhs, tr_one(f->rhs, form), form);
    case Conn::Conj:
      throw UnsupportedShape("conjunction in a position that cannot split: " + to_string(f));
    default:
      throw UnsupportedShape("translation expects a desugared formula");
  }
}

// Splittable positions: the whole formula and consequents.
void tr_many(const FormulaPtr& f, OrForm form, std::vector<FormulaPtr>& out) {
  if (f->conn == Conn::Conj) {
    tr_many(f->lhs, form, out);
    tr_many(f->rhs, form, out);
    return;
  }
  if (f->conn == Conn::Impl) {
    std::vector<FormulaPtr> parts;
    tr_many(f->rhs, form, parts);
    for (auto& part : parts) out.push_back(tr_arrow(f->lhs, std::move(part), form));
    return;
  }
  out.push_back(tr_one(f, form));
}

} // namespace

ImplicationalTranslation translate_implicational(const FormulaPtr& f, OrForm form) {
  ImplicationalTranslation t;
  t.source = desugar(f);
  tr_many(t.source, form, t.result);
  return t;
}

std::vector<Schema> translate_implicational(const Schema& s, OrForm form) {
  ImplicationalTranslation t = translate_implicational(s.body, form);
  std::vector<Schema> out;
  out.reserve(t.result.size());
  for (auto& part : t.result) {
    std::vector<std::string> vars;
    auto used = atoms_of(part);
    for (const auto& v : s.variables)
      if (used.count(v)) vars.push_back(v);
    out.push_back(Schema{std::move(part), std::move(vars)});
  }
  return out;
}

} // namespace minlog
