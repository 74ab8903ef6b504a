#include "rasp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace rasp {

namespace {

FormulaPtr make_node(Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

const FormulaPtr kTop = make_node(Kind::Top);
const FormulaPtr kBot = make_node(Kind::Bot);

}  // namespace

FormulaPtr f_top() { return kTop; }
FormulaPtr f_bot() { return kBot; }

FormulaPtr f_atom(Atom a) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->atom = std::move(a);
  return f;
}

FormulaPtr f_not(FormulaPtr x) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Not;
  f->lhs = std::move(x);
  return f;
}

static FormulaPtr binary(Kind k, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr f_and(FormulaPtr l, FormulaPtr r) { return binary(Kind::And, std::move(l), std::move(r)); }
FormulaPtr f_or(FormulaPtr l, FormulaPtr r) { return binary(Kind::Or, std::move(l), std::move(r)); }
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) { return binary(Kind::Implies, std::move(l), std::move(r)); }
FormulaPtr f_iff(FormulaPtr l, FormulaPtr r) { return binary(Kind::Iff, std::move(l), std::move(r)); }

FormulaPtr f_epnot(FormulaPtr x) {
  if (contains_epnot(x)) {
    throw NestedEpistemicError("nested epistemic negation", 0, 0);
  }
  auto f = std::make_shared<Formula>();
  f->kind = Kind::EpNot;
  f->lhs = std::move(x);
  return f;
}

FormulaPtr f_neq(std::string t1, std::string t2) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Neq;
  f->t1 = std::move(t1);
  f->t2 = std::move(t2);
  return f;
}

int formula_cmp(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  switch (a.kind) {
    case Kind::Top:
    case Kind::Bot:
      return 0;
    case Kind::Atom:
      if (a.atom < b.atom) return -1;
      if (b.atom < a.atom) return 1;
      return 0;
    case Kind::Not:
    case Kind::EpNot:
      return formula_cmp(*a.lhs, *b.lhs);
    case Kind::Neq: {
      if (int c = a.t1.compare(b.t1)) return c < 0 ? -1 : 1;
      if (int c = a.t2.compare(b.t2)) return c < 0 ? -1 : 1;
      return 0;
    }
    default: {
      if (int c = formula_cmp(*a.lhs, *b.lhs)) return c;
      return formula_cmp(*a.rhs, *b.rhs);
    }
  }
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  return formula_cmp(*a, *b) == 0;
}

bool FormulaLess::operator()(const FormulaPtr& a, const FormulaPtr& b) const {
  return formula_cmp(*a, *b) < 0;
}

void collect_atoms(const FormulaPtr& f, std::set<Atom>& out) {
  switch (f->kind) {
    case Kind::Atom:
      out.insert(f->atom);
      return;
    case Kind::Not:
    case Kind::EpNot:
      collect_atoms(f->lhs, out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      collect_atoms(f->lhs, out);
      collect_atoms(f->rhs, out);
      return;
    default:
      return;
  }
}

bool contains_epnot(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::EpNot:
      return true;
    case Kind::Not:
      return contains_epnot(f->lhs);
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return contains_epnot(f->lhs) || contains_epnot(f->rhs);
    default:
      return false;
  }
}

static bool is_variable_term(const std::string& t) {
  return !t.empty() && t[0] >= 'A' && t[0] <= 'Z';
}

bool contains_variables(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::Atom:
      return std::any_of(f->atom.args.begin(), f->atom.args.end(), is_variable_term);
    case Kind::Not:
    case Kind::EpNot:
      return contains_variables(f->lhs);
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return contains_variables(f->lhs) || contains_variables(f->rhs);
    case Kind::Neq:
      return is_variable_term(f->t1) || is_variable_term(f->t2);
    default:
      return false;
  }
}

std::string print_atom(const Atom& a) {
  if (a.args.empty()) return a.name;
  std::string s = a.name + "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ",";
    s += a.args[i];
  }
  return s + ")";
}

namespace {

int level(const Formula& f) {
  switch (f.kind) {
    case Kind::Iff:
      return 1;
    case Kind::Implies:
      return 2;
    case Kind::Or:
      return 3;
    case Kind::And:
      return 4;
    case Kind::Not:
    case Kind::EpNot:
      return 5;
    default:
      return 6;
  }
}

void print_rec(const FormulaPtr& f, int ctx, std::string& out) {
  int lv = level(*f);
  bool paren = lv < ctx;
  if (paren) out += "(";
  switch (f->kind) {
    case Kind::Top:
      out += "#true";
      break;
    case Kind::Bot:
      out += "#false";
      break;
    case Kind::Atom:
      out += print_atom(f->atom);
      break;
    case Kind::Neq:
      out += f->t1 + " != " + f->t2;
      break;
    case Kind::Not:
      out += "~";
      print_rec(f->lhs, 5, out);
      break;
    case Kind::EpNot:
      out += "not ";
      print_rec(f->lhs, 5, out);
      break;
    case Kind::And:
      print_rec(f->lhs, 4, out);
      out += " & ";
      print_rec(f->rhs, 5, out);
      break;
    case Kind::Or:
      print_rec(f->lhs, 3, out);
      out += " | ";
      print_rec(f->rhs, 4, out);
      break;
    case Kind::Implies:
      print_rec(f->lhs, 3, out);
      out += " -> ";
      print_rec(f->rhs, 2, out);
      break;
    case Kind::Iff:
      print_rec(f->lhs, 1, out);
      out += " <-> ";
      print_rec(f->rhs, 2, out);
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string s;
  print_rec(f, 1, s);
  return s;
}

void flatten_conjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == Kind::And) {
    flatten_conjuncts(f->lhs, out);
    flatten_conjuncts(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

FormulaPtr conjoin(const std::vector<FormulaPtr>& conjs) {
  if (conjs.empty()) return f_top();
  FormulaPtr acc = conjs[0];
  for (size_t i = 1; i < conjs.size(); ++i) acc = f_and(acc, conjs[i]);
  return acc;
}

bool is_constraint(const Rule& r) {
  return r.heads.size() == 1 && r.heads[0]->kind == Kind::Bot;
}

std::string print_rule(const Rule& r) {
  if (is_constraint(r)) {
    return ":- " + print_formula(r.body) + ".";
  }
  std::string s;
  for (size_t i = 0; i < r.heads.size(); ++i) {
    if (i) s += " ; ";
    s += print_formula(r.heads[i]);
  }
  if (r.body->kind != Kind::Top) {
    s += " :- " + print_formula(r.body);
  }
  return s + ".";
}

Program make_program(std::vector<Rule> rules) {
  return make_program(std::move(rules), {});
}

Program make_program(std::vector<Rule> rules, std::set<Atom> extra_atoms) {
  Program p;
  p.signature = std::move(extra_atoms);
  for (const Rule& r : rules) {
    for (const FormulaPtr& h : r.heads) collect_atoms(h, p.signature);
    collect_atoms(r.body, p.signature);
  }
  p.rules = std::move(rules);
  return p;
}

std::string print_program(const Program& p) {
  std::string s;
  for (const Rule& r : p.rules) {
    s += print_rule(r);
    s += "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Lexing and parsing

namespace {

enum class Tok {
  Ident,
  Var,
  Int,
  LParen,
  RParen,
  Comma,
  Semi,
  Dot,
  Pipe,
  Amp,
  Tilde,
  Arrow,
  IffOp,
  If,
  Neq,
  HashTrue,
  HashFalse,
  HashAtom,
  KwNot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", l, c});
        return out;
      }
      char ch = src_[pos_];
      if (ch == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (std::islower(static_cast<unsigned char>(ch))) {
        std::string w = word();
        out.push_back({w == "not" ? Tok::KwNot : Tok::Ident, w, l, c});
        continue;
      }
      if (std::isupper(static_cast<unsigned char>(ch))) {
        out.push_back({Tok::Var, word(), l, c});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch)) ||
          (ch == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        std::string n;
        if (ch == '-') {
          n += '-';
          advance();
        }
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          n += src_[pos_];
          advance();
        }
        out.push_back({Tok::Int, n, l, c});
        continue;
      }
      switch (ch) {
        case '(': advance(); out.push_back({Tok::LParen, "(", l, c}); continue;
        case ')': advance(); out.push_back({Tok::RParen, ")", l, c}); continue;
        case ',': advance(); out.push_back({Tok::Comma, ",", l, c}); continue;
        case ';': advance(); out.push_back({Tok::Semi, ";", l, c}); continue;
        case '.': advance(); out.push_back({Tok::Dot, ".", l, c}); continue;
        case '|': advance(); out.push_back({Tok::Pipe, "|", l, c}); continue;
        case '&': advance(); out.push_back({Tok::Amp, "&", l, c}); continue;
        case '~': advance(); out.push_back({Tok::Tilde, "~", l, c}); continue;
        case ':':
          if (peek(1) == '-') {
            advance();
            advance();
            out.push_back({Tok::If, ":-", l, c});
            continue;
          }
          throw ParseError("unexpected ':'", l, c);
        case '-':
          if (peek(1) == '>') {
            advance();
            advance();
            out.push_back({Tok::Arrow, "->", l, c});
            continue;
          }
          throw ParseError("unexpected '-'", l, c);
        case '<':
          if (peek(1) == '-' && peek(2) == '>') {
            advance();
            advance();
            advance();
            out.push_back({Tok::IffOp, "<->", l, c});
            continue;
          }
          throw ParseError("unexpected '<'", l, c);
        case '!':
          if (peek(1) == '=') {
            advance();
            advance();
            out.push_back({Tok::Neq, "!=", l, c});
            continue;
          }
          throw ParseError("unexpected '!'", l, c);
        case '#': {
          advance();
          std::string w = word();
          if (w == "true") out.push_back({Tok::HashTrue, "#true", l, c});
          else if (w == "false") out.push_back({Tok::HashFalse, "#false", l, c});
          else if (w == "atom") out.push_back({Tok::HashAtom, "#atom", l, c});
          else throw ParseError("unknown directive '#" + w + "'", l, c);
          continue;
        }
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  char peek(size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  std::string word() {
    std::string w;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      w += src_[pos_];
      advance();
    }
    return w;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    std::vector<Rule> rules;
    std::set<Atom> declared;
    while (cur().kind != Tok::End) {
      if (cur().kind == Tok::HashAtom) {
        next();
        declared.insert(ground_atom());
        expect(Tok::Dot, "'.'");
        continue;
      }
      rules.push_back(rule(static_cast<int>(rules.size()) + 1));
    }
    return make_program(std::move(rules), std::move(declared));
  }

  FormulaPtr single_formula() {
    FormulaPtr f = eform();
    if (cur().kind != Tok::End) throw err("trailing input after formula");
    return f;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  ParseError err(const std::string& msg) const { return ParseError(msg, cur().line, cur().col); }

  void expect(Tok k, const std::string& what) {
    if (cur().kind != k) throw err("expected " + what);
    next();
  }

  Rule rule(int id) {
    Rule r;
    r.id = id;
    if (cur().kind == Tok::If) {
      next();
      r.heads.push_back(f_bot());
      r.body = eform();
    } else {
      r.heads.push_back(eform());
      while (cur().kind == Tok::Semi) {
        next();
        r.heads.push_back(eform());
      }
      if (cur().kind == Tok::If) {
        next();
        r.body = eform();
      } else {
        r.body = f_top();
      }
    }
    expect(Tok::Dot, "'.'");
    validate_rule(r);
    return r;
  }

  // Inequalities may appear only as top-level conjuncts of a body.
  void validate_rule(const Rule& r) const {
    for (const FormulaPtr& h : r.heads) {
      if (has_neq(h)) throw err("inequality not allowed in a rule head");
    }
    check_neq_conjuncts(r.body);
  }

  static bool has_neq(const FormulaPtr& f) {
    switch (f->kind) {
      case Kind::Neq:
        return true;
      case Kind::Not:
      case Kind::EpNot:
        return has_neq(f->lhs);
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
      case Kind::Iff:
        return has_neq(f->lhs) || has_neq(f->rhs);
      default:
        return false;
    }
  }

  void check_neq_conjuncts(const FormulaPtr& f) const {
    if (f->kind == Kind::And) {
      check_neq_conjuncts(f->lhs);
      check_neq_conjuncts(f->rhs);
      return;
    }
    if (f->kind != Kind::Neq && has_neq(f)) {
      throw err("inequality must be a top-level body conjunct");
    }
  }

  FormulaPtr eform() { return iff(); }

  FormulaPtr iff() {
    FormulaPtr l = implies();
    while (cur().kind == Tok::IffOp) {
      next();
      l = f_iff(l, implies());
    }
    return l;
  }

  FormulaPtr implies() {
    FormulaPtr l = disj();
    if (cur().kind == Tok::Arrow) {
      next();
      return f_implies(l, implies());
    }
    return l;
  }

  FormulaPtr disj() {
    FormulaPtr l = conj();
    while (cur().kind == Tok::Pipe) {
      next();
      l = f_or(l, conj());
    }
    return l;
  }

  FormulaPtr conj() {
    FormulaPtr l = prefix();
    while (cur().kind == Tok::Amp) {
      next();
      l = f_and(l, prefix());
    }
    return l;
  }

  FormulaPtr epnot_checked(FormulaPtr arg, int line, int col) {
    if (contains_epnot(arg)) throw NestedEpistemicError("nested epistemic negation", line, col);
    return f_epnot(std::move(arg));
  }

  FormulaPtr prefix() {
    const Token t = cur();
    if (t.kind == Tok::Tilde) {
      next();
      return f_not(prefix());
    }
    if (t.kind == Tok::KwNot) {
      next();
      return epnot_checked(prefix(), t.line, t.col);
    }
    if (t.kind == Tok::Var && t.text == "K") {
      next();
      return f_not(epnot_checked(prefix(), t.line, t.col));
    }
    if (t.kind == Tok::Var && t.text == "M") {
      next();
      return epnot_checked(f_not(prefix()), t.line, t.col);
    }
    return primary();
  }

  FormulaPtr primary() {
    const Token t = cur();
    switch (t.kind) {
      case Tok::LParen: {
        next();
        FormulaPtr f = eform();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::HashTrue:
        next();
        return f_top();
      case Tok::HashFalse:
        next();
        return f_bot();
      case Tok::Ident: {
        next();
        if (cur().kind == Tok::Neq) {
          next();
          return f_neq(t.text, term());
        }
        Atom a;
        a.name = t.text;
        if (cur().kind == Tok::LParen) {
          next();
          a.args.push_back(term());
          while (cur().kind == Tok::Comma) {
            next();
            a.args.push_back(term());
          }
          expect(Tok::RParen, "')'");
        }
        return f_atom(std::move(a));
      }
      case Tok::Var:
      case Tok::Int: {
        next();
        if (cur().kind != Tok::Neq) throw ParseError("expected '!=' after term", t.line, t.col);
        next();
        return f_neq(t.text, term());
      }
      default:
        throw err("expected formula");
    }
  }

  std::string term() {
    const Token t = cur();
    if (t.kind == Tok::Ident || t.kind == Tok::Var || t.kind == Tok::Int) {
      next();
      return t.text;
    }
    throw err("expected term");
  }

  Atom ground_atom() {
    const Token t = cur();
    if (t.kind != Tok::Ident) throw err("expected atom");
    next();
    Atom a;
    a.name = t.text;
    if (cur().kind == Tok::LParen) {
      next();
      a.args.push_back(term());
      while (cur().kind == Tok::Comma) {
        next();
        a.args.push_back(term());
      }
      expect(Tok::RParen, "')'");
    }
    if (std::any_of(a.args.begin(), a.args.end(), is_variable_term)) {
      throw ParseError("declared atom must be ground", t.line, t.col);
    }
    return a;
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
};

}  // namespace

Program parse_program(const std::string& text) {
  return Parser(Lexer(text).run()).program();
}

FormulaPtr parse_formula(const std::string& text) {
  return Parser(Lexer(text).run()).single_formula();
}

// ---------------------------------------------------------------------------
// Grounding

namespace {

void collect_rule_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::Atom:
      for (const std::string& a : f->atom.args)
        if (is_variable_term(a)) out.insert(a);
      return;
    case Kind::Neq:
      if (is_variable_term(f->t1)) out.insert(f->t1);
      if (is_variable_term(f->t2)) out.insert(f->t2);
      return;
    case Kind::Not:
    case Kind::EpNot:
      collect_rule_vars(f->lhs, out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      collect_rule_vars(f->lhs, out);
      collect_rule_vars(f->rhs, out);
      return;
    default:
      return;
  }
}

void collect_constants(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::Atom:
      for (const std::string& a : f->atom.args)
        if (!is_variable_term(a)) out.insert(a);
      return;
    case Kind::Neq:
      if (!is_variable_term(f->t1)) out.insert(f->t1);
      if (!is_variable_term(f->t2)) out.insert(f->t2);
      return;
    case Kind::Not:
    case Kind::EpNot:
      collect_constants(f->lhs, out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      collect_constants(f->lhs, out);
      collect_constants(f->rhs, out);
      return;
    default:
      return;
  }
}

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, std::string>& sub) {
  auto term_of = [&](const std::string& t) {
    auto it = sub.find(t);
    return it == sub.end() ? t : it->second;
  };
  switch (f->kind) {
    case Kind::Atom: {
      Atom a = f->atom;
      for (std::string& arg : a.args) arg = term_of(arg);
      return f_atom(std::move(a));
    }
    case Kind::Neq:
      return f_neq(term_of(f->t1), term_of(f->t2));
    case Kind::Not:
      return f_not(substitute(f->lhs, sub));
    case Kind::EpNot:
      return f_epnot(substitute(f->lhs, sub));
    case Kind::And:
      return f_and(substitute(f->lhs, sub), substitute(f->rhs, sub));
    case Kind::Or:
      return f_or(substitute(f->lhs, sub), substitute(f->rhs, sub));
    case Kind::Implies:
      return f_implies(substitute(f->lhs, sub), substitute(f->rhs, sub));
    case Kind::Iff:
      return f_iff(substitute(f->lhs, sub), substitute(f->rhs, sub));
    default:
      return f;
  }
}

// Evaluates ground inequality conjuncts; false means the instance is dropped.
bool resolve_builtins(Rule& r) {
  std::vector<FormulaPtr> conjs;
  flatten_conjuncts(r.body, conjs);
  std::vector<FormulaPtr> kept;
  bool changed = false;
  for (const FormulaPtr& c : conjs) {
    if (c->kind == Kind::Neq) {
      if (c->t1 == c->t2) return false;
      changed = true;
      continue;
    }
    kept.push_back(c);
  }
  if (changed) r.body = conjoin(kept);
  return true;
}

void head_atoms_of(const Rule& r, std::set<Atom>& out) {
  for (const FormulaPtr& h : r.heads) collect_atoms(h, out);
}

// Drops instances whose positive body atom conjuncts can never be derived:
// an atom conjunct with no occurrence in any retained rule head cannot be
// true in a well-supported model.
void relevance_filter(std::vector<Rule>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<Atom> heads;
    for (const Rule& r : rules) head_atoms_of(r, heads);
    std::vector<Rule> kept;
    kept.reserve(rules.size());
    for (Rule& r : rules) {
      std::vector<FormulaPtr> conjs;
      flatten_conjuncts(r.body, conjs);
      bool ok = true;
      for (const FormulaPtr& c : conjs) {
        if (c->kind == Kind::Atom && !heads.count(c->atom)) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(std::move(r));
      else changed = true;
    }
    rules = std::move(kept);
  }
}

}  // namespace

Program ground(const Program& p) {
  bool has_vars = false;
  for (const Rule& r : p.rules) {
    for (const FormulaPtr& h : r.heads) has_vars = has_vars || contains_variables(h);
    has_vars = has_vars || contains_variables(r.body);
  }
  if (!has_vars) return p;

  std::set<std::string> constants;
  for (const Rule& r : p.rules) {
    for (const FormulaPtr& h : r.heads) collect_constants(h, constants);
    collect_constants(r.body, constants);
  }
  for (const Atom& a : p.signature) {
    for (const std::string& arg : a.args)
      if (!is_variable_term(arg)) constants.insert(arg);
  }
  if (constants.empty()) throw NoConstantsError("variables occur but the program has no constants");
  std::vector<std::string> consts(constants.begin(), constants.end());

  std::vector<Rule> out;
  for (const Rule& src : p.rules) {
    std::set<std::string> varset;
    for (const FormulaPtr& h : src.heads) collect_rule_vars(h, varset);
    collect_rule_vars(src.body, varset);

    if (varset.empty()) {
      Rule r = src;
      if (resolve_builtins(r)) out.push_back(std::move(r));
      continue;
    }

    std::vector<std::string> vars(varset.begin(), varset.end());
    std::vector<size_t> idx(vars.size(), 0);
    while (true) {
      std::map<std::string, std::string> sub;
      for (size_t v = 0; v < vars.size(); ++v) sub[vars[v]] = consts[idx[v]];
      Rule inst;
      inst.body = substitute(src.body, sub);
      for (const FormulaPtr& h : src.heads) inst.heads.push_back(substitute(h, sub));
      if (resolve_builtins(inst)) out.push_back(std::move(inst));

      size_t v = vars.size();
      while (v > 0) {
        --v;
        if (++idx[v] < consts.size()) break;
        idx[v] = 0;
        if (v == 0) goto done;
      }
      if (vars.size() == 0) break;
    }
  done:;
  }

  relevance_filter(out);
  for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i) + 1;

  // Ground atoms of the source signature (facts, #atom declarations) stay in
  // the vocabulary even when no retained instance mentions them.
  std::set<Atom> declared;
  for (const Atom& a : p.signature) {
    if (std::none_of(a.args.begin(), a.args.end(), is_variable_term)) declared.insert(a);
  }
  return make_program(std::move(out), std::move(declared));
}

std::vector<FormulaPtr> ep_negations(const Program& p) {
  std::set<FormulaPtr, FormulaLess> found;
  auto walk = [&](const FormulaPtr& f, auto&& self) -> void {
    switch (f->kind) {
      case Kind::EpNot:
        found.insert(f->lhs);
        return;
      case Kind::Not:
        self(f->lhs, self);
        return;
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
      case Kind::Iff:
        self(f->lhs, self);
        self(f->rhs, self);
        return;
      default:
        return;
    }
  };
  for (const Rule& r : p.rules) {
    for (const FormulaPtr& h : r.heads) walk(h, walk);
    walk(r.body, walk);
  }
  return {found.begin(), found.end()};
}

bool is_epistemic(const Program& p) {
  for (const Rule& r : p.rules) {
    for (const FormulaPtr& h : r.heads)
      if (contains_epnot(h)) return true;
    if (contains_epnot(r.body)) return true;
  }
  return false;
}

namespace {

bool is_literal(const FormulaPtr& f) {
  return f->kind == Kind::Atom || (f->kind == Kind::Not && f->lhs->kind == Kind::Atom);
}

bool is_literal_conjunction(const FormulaPtr& f) {
  if (f->kind == Kind::Top) return true;
  std::vector<FormulaPtr> conjs;
  flatten_conjuncts(f, conjs);
  return std::all_of(conjs.begin(), conjs.end(), is_literal);
}

}  // namespace

bool is_simple(const Program& p) {
  for (const Rule& r : p.rules) {
    if (!is_constraint(r)) {
      for (const FormulaPtr& h : r.heads)
        if (h->kind != Kind::Atom) return false;
    }
    if (!is_literal_conjunction(r.body)) return false;
  }
  return true;
}

bool is_normal(const Program& p) {
  for (const Rule& r : p.rules) {
    if (r.heads.size() != 1) return false;
    if (contains_epnot(r.heads[0]) || contains_epnot(r.body)) return false;
  }
  return true;
}

bool is_atomic_head(const Program& p) {
  if (!is_normal(p)) return false;
  for (const Rule& r : p.rules)
    if (r.heads[0]->kind != Kind::Atom) return false;
  return true;
}

}  // namespace rasp
