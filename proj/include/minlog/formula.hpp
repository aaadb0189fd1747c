#ifndef MINLOG_FORMULA_HPP
#define MINLOG_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minlog {

// Propositional formulas over ->, &, |, ~, bot, top.  Values are immutable
// and structurally shared; compare with equal(), never by pointer.
enum class Conn : unsigned char { Atom, Bottom, Top, Neg, Conj, Disj, Impl };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
  Formula(Conn c, std::string name, FormulaPtr l, FormulaPtr r)
      : conn(c), atom(std::move(name)), lhs(std::move(l)), rhs(std::move(r)) {}

  const Conn conn;
  const std::string atom; // Atom only
  const FormulaPtr lhs;   // Neg stores its child here
  const FormulaPtr rhs;
};

FormulaPtr mk_atom(std::string name);
FormulaPtr mk_bot();
FormulaPtr mk_top();
FormulaPtr mk_neg(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_imp(FormulaPtr l, FormulaPtr r);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Name of the fresh atom that top elaborates into.  Not expressible in the
// concrete grammar, so it can never collide with a parsed atom.
const std::string& top_atom_name();

// Rewrites ~f into f -> bot and top into the self-implication of the
// reserved atom.  Idempotent.  Everything downstream of the parser and the
// builders above works on desugared cores.
FormulaPtr desugar(const FormulaPtr& f);

// True when f contains no Neg or Top node.
bool is_core(const FormulaPtr& f);

// Atom names occurring in f, sorted.
std::set<std::string> atoms_of(const FormulaPtr& f);

bool contains_bottom(const FormulaPtr& f);

// Minimal-parenthesis rendering; ~ and top are resugared so that
// parse(to_string(f)) == desugar(f).
std::string to_string(const FormulaPtr& f);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg), line(line), col(col) {}
  int line;
  int col;
};

// Grammar:  impl := or ('->' impl)?          (right associative)
//           or   := and ('|' and)*
//           and  := neg ('&' neg)*
//           neg  := '~' neg | atom | 'bot' | '_|_' | 'top' | '(' impl ')'
// Atom names match [A-Za-z_][A-Za-z0-9_]* minus the keywords.
FormulaPtr parse(std::string_view text);

// A formula together with the ordered list of atoms read as metavariables.
struct Schema {
  FormulaPtr body;
  std::vector<std::string> variables;

  // Validates that variables are distinct and cover every atom of body.
  static Schema over(FormulaPtr body, std::vector<std::string> variables);
  static Schema over(std::string_view text, std::vector<std::string> variables);
};

std::string to_string(const Schema& s);

// Replaces every metavariable by its assignment; throws std::invalid_argument
// when a variable of s has no assignment.
FormulaPtr substitute(const Schema& s, const std::map<std::string, FormulaPtr>& assignment);

struct UnsupportedShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which implication a disjunction turns into.  The two are interderivable;
// NegLeft is the canonical choice.
enum class OrForm : unsigned char {
  NegLeft,  // a | b  ~>  ~a -> ~~b
  NegRight, // a | b  ~>  ~b -> ~~a
};

struct ImplicationalTranslation {
  FormulaPtr source;              // desugared input
  std::vector<FormulaPtr> result; // nonempty; disjunction- and conjunction-free
};

// Rewrites f into implication-only form: disjunctions become negated
// implications, conjunctions in antecedent position curry, conjunctions in
// consequent or top-level position split the result.  Conjunctions anywhere
// else have no implicational reading and raise UnsupportedShape.
ImplicationalTranslation translate_implicational(const FormulaPtr& f, OrForm form = OrForm::NegLeft);

// Same rewrite applied to a schema body; variables carry over per part.
std::vector<Schema> translate_implicational(const Schema& s, OrForm form = OrForm::NegLeft);

} // namespace minlog

#endif
