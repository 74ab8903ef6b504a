#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rasp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

struct NestedEpistemicError : ParseError {
  using ParseError::ParseError;
};

struct NoConstantsError : Error {
  using Error::Error;
};

struct Atom {
  std::string name;
  std::vector<std::string> args;

  // (name, args) ordering coincides with the printed-form ordering because
  // '(' , ')' and ',' sort below every identifier/number character.
  auto operator<=>(const Atom&) const = default;
};

std::string print_atom(const Atom& a);

enum class Kind { Top, Bot, Atom, Not, And, Or, Implies, Iff, EpNot, Neq };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  Kind kind;
  rasp::Atom atom;       // Kind::Atom
  FormulaPtr lhs, rhs;   // unary ops use lhs only
  std::string t1, t2;    // Kind::Neq terms (pre-grounding only)
};

FormulaPtr f_top();
FormulaPtr f_bot();
FormulaPtr f_atom(Atom a);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r);
FormulaPtr f_iff(FormulaPtr l, FormulaPtr r);
FormulaPtr f_epnot(FormulaPtr f);  // throws NestedEpistemicError on nesting
FormulaPtr f_neq(std::string t1, std::string t2);

int formula_cmp(const Formula& a, const Formula& b);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const;
};

void collect_atoms(const FormulaPtr& f, std::set<Atom>& out);
bool contains_epnot(const FormulaPtr& f);
bool contains_variables(const FormulaPtr& f);

std::string print_formula(const FormulaPtr& f);

// Top-level And chain as a flat list; non-conjunctions yield themselves.
void flatten_conjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out);
// Left-nested conjunction of the given formulas; Top when empty.
FormulaPtr conjoin(const std::vector<FormulaPtr>& conjs);

struct Rule {
  int id = 0;                     // 1-based source order
  std::vector<FormulaPtr> heads;  // nonempty; a single Bot head is a constraint
  FormulaPtr body;                // Top when absent
};

bool is_constraint(const Rule& r);
std::string print_rule(const Rule& r);

struct Program {
  std::vector<Rule> rules;
  std::set<Atom> signature;
};

Program make_program(std::vector<Rule> rules);
Program make_program(std::vector<Rule> rules, std::set<Atom> extra_atoms);
std::string print_program(const Program& p);

Program parse_program(const std::string& text);
FormulaPtr parse_formula(const std::string& text);

Program ground(const Program& p);

// All F with `not F` occurring in p, structurally deduplicated, in canonical
// (FormulaLess) order.
std::vector<FormulaPtr> ep_negations(const Program& p);

bool is_epistemic(const Program& p);
// Heads are atoms (or a lone constraint head); bodies are conjunctions of
// literals over atoms.
bool is_simple(const Program& p);
// Exactly one head formula per rule, everything classical.
bool is_normal(const Program& p);
// Normal with every head a plain atom (constraints excluded).
bool is_atomic_head(const Program& p);

}  // namespace rasp
