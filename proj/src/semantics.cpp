#include "rasp/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>

#include "rasp/reducts.hpp"

namespace rasp {

namespace {

void require_cap(const Program& p, size_t max_atoms) {
  if (max_atoms < 1) throw Error("max_atoms must be at least 1");
  if (p.signature.size() > max_atoms) {
    throw Error("signature has " + std::to_string(p.signature.size()) +
                " atoms, exceeding the enumeration cap of " + std::to_string(max_atoms));
  }
}

void require_ground(const Program& p) {
  for (const Rule& r : p.rules) {
    if (contains_variables(r.body)) throw Error("program must be ground");
    for (const FormulaPtr& h : r.heads)
      if (contains_variables(h)) throw Error("program must be ground");
  }
}

void require_epistemic_free(const Program& p) {
  if (is_epistemic(p)) throw EpistemicProgramError("program must be epistemic-free");
}

std::vector<Interpretation> minimal_of(const std::vector<Interpretation>& xs) {
  std::vector<Interpretation> out;
  for (const Interpretation& i : xs) {
    bool minimal = true;
    for (const Interpretation& j : xs) {
      if (j != i && is_subset(j, i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

void check_outputs(const Program& p, const std::vector<Interpretation>& out, bool antichain) {
  for (const Interpretation& i : out) {
    if (!is_model(p, i)) throw Error("internal: enumerated answer set is not a model");
  }
  if (!antichain) return;
  for (const Interpretation& i : out) {
    for (const Interpretation& j : out) {
      if (i != j && is_subset(i, j))
        throw Error("internal: answer sets are not an antichain");
    }
  }
}

// Least model of the definite rules; m-anchored callers compare against m, so
// constraints need no separate treatment.
Interpretation least_model_definite(const Program& red) {
  Interpretation derived;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : red.rules) {
      if (is_constraint(r)) continue;
      if (!satisfies(derived, r.body)) continue;
      const Atom& a = r.heads.front()->atom;
      if (derived.insert(a).second) changed = true;
    }
  }
  return derived;
}

bool wj_accepts(const Program& p, const Interpretation& m) {
  Theory neg = negated_complement(p, m);
  Theory base = lfp_t(p, neg, false).back();
  base.insert(base.end(), neg.begin(), neg.end());
  for (const Atom& a : m) {
    if (!entails(base, f_atom(a))) return false;
  }
  return true;
}

FormulaPtr rule_formula(const Rule& r) {
  FormulaPtr heads = r.heads.front();
  for (size_t k = 1; k < r.heads.size(); ++k) heads = f_or(heads, r.heads[k]);
  return f_implies(r.body, heads);
}

// not F holds in a iff F fails somewhere in a.
bool ep_not_true(const EpistemicModel& a, const FormulaPtr& f) {
  return std::any_of(a.begin(), a.end(),
                     [&](const Interpretation& j) { return !satisfies(j, f); });
}

// Truth of a (¬)*EpNot(...) modal literal in a.
bool modal_literal_true(const EpistemicModel& a, const FormulaPtr& lit) {
  bool negate = false;
  FormulaPtr cur = lit;
  while (cur->kind == Kind::Not) {
    negate = !negate;
    cur = cur->lhs;
  }
  bool val = ep_not_true(a, cur->lhs);
  return negate ? !val : val;
}

std::string kind_name(SemKind k) {
  switch (k) {
    case SemKind::Rational: return "RATIONAL";
    case SemKind::Gl: return "GL";
    case SemKind::GlNlp: return "GL_NLP";
    case SemKind::Wj: return "WJ";
    case SemKind::Flp: return "FLP";
    case SemKind::Equilibrium: return "EQUILIBRIUM";
    case SemKind::DiGlnlp: return "DI_GLNLP";
    case SemKind::DiWj: return "DI_WJ";
    case SemKind::ThreeValued: return "THREE_VALUED";
    case SemKind::G91: return "G91";
    case SemKind::Se16: return "SE16";
  }
  throw Error("internal: unhandled semantics kind");
}

bool phi_less(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  for (size_t k = 0; k < a.size() && k < b.size(); ++k) {
    int c = formula_cmp(*a[k], *b[k]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool phi_equal(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (!formula_equal(a[k], b[k])) return false;
  return true;
}

void sort_world_views(std::vector<WorldView>& ws) {
  std::sort(ws.begin(), ws.end(), [](const WorldView& x, const WorldView& y) {
    if (!phi_equal(x.phi, y.phi)) return phi_less(x.phi, y.phi);
    return x.model < y.model;
  });
}

std::vector<FormulaPtr> phi_of(const EpistemicModel& a, const std::vector<FormulaPtr>& eps) {
  std::vector<FormulaPtr> phi;
  for (const FormulaPtr& f : eps)
    if (ep_not_true(a, f)) phi.push_back(f);
  return phi;
}

EpistemicModel canonical_epistemic_model(std::vector<Interpretation> as) {
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());
  return as;
}

// Shared Φ-subset search: candidates are the Φ whose reduct has answer sets
// matching Φ exactly on epistemic-negation truth; Φ-maximal candidates win.
std::vector<WorldView> phi_search(const Program& p, size_t max_atoms,
                                  const std::function<std::vector<Interpretation>(
                                      const Program&, size_t)>& base_sets) {
  require_cap(p, max_atoms);
  require_ground(p);
  std::vector<FormulaPtr> eps = ep_negations(p);
  if (eps.size() > 20) throw Error("too many epistemic negations to enumerate");
  struct Cand {
    uint32_t mask;
    std::vector<FormulaPtr> phi;
    EpistemicModel model;
  };
  std::vector<Cand> cands;
  for (uint32_t mask = 0; mask < (uint32_t{1} << eps.size()); ++mask) {
    std::vector<FormulaPtr> phi;
    for (size_t k = 0; k < eps.size(); ++k)
      if (mask & (uint32_t{1} << k)) phi.push_back(eps[k]);
    Program red = se16_reduct(p, phi);
    std::vector<Interpretation> as = base_sets(red, max_atoms);
    if (as.empty()) continue;
    EpistemicModel a = canonical_epistemic_model(std::move(as));
    bool ok = true;
    for (size_t k = 0; k < eps.size(); ++k) {
      bool in_phi = (mask & (uint32_t{1} << k)) != 0;
      if (ep_not_true(a, eps[k]) != in_phi) {
        ok = false;
        break;
      }
    }
    if (ok) cands.push_back({mask, std::move(phi), std::move(a)});
  }
  std::vector<WorldView> out;
  for (const Cand& c : cands) {
    bool maximal = true;
    for (const Cand& d : cands) {
      if (d.mask != c.mask && (c.mask & d.mask) == c.mask) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back({c.model, c.phi});
  }
  sort_world_views(out);
  return out;
}

}  // namespace

SemanticsId parse_semantics(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s.rfind("SE16(", 0) == 0 && s.back() == ')') {
    SemanticsId base = parse_semantics(s.substr(5, s.size() - 6));
    if (is_world_view_semantics(base))
      throw Error("SE16 base must be an answer-set semantics");
    return {SemKind::Se16, base.kind};
  }
  static const std::map<std::string, SemKind> names = {
      {"RATIONAL", SemKind::Rational},   {"GL", SemKind::Gl},
      {"GL_NLP", SemKind::GlNlp},        {"WJ", SemKind::Wj},
      {"FLP", SemKind::Flp},             {"EQUILIBRIUM", SemKind::Equilibrium},
      {"DI_GLNLP", SemKind::DiGlnlp},    {"DI_WJ", SemKind::DiWj},
      {"THREE_VALUED", SemKind::ThreeValued}, {"G91", SemKind::G91},
  };
  auto it = names.find(s);
  if (it == names.end()) throw Error("unknown semantics: " + text);
  return {it->second, std::nullopt};
}

std::string to_string(const SemanticsId& id) {
  if (id.kind == SemKind::Se16) {
    if (!id.base) throw Error("SE16 requires a base semantics");
    return "SE16(" + kind_name(*id.base) + ")";
  }
  return kind_name(id.kind);
}

bool is_world_view_semantics(const SemanticsId& sem) {
  return sem.kind == SemKind::G91 || sem.kind == SemKind::Se16;
}

bool world_view_equal(const WorldView& a, const WorldView& b) {
  return a.model == b.model && phi_equal(a.phi, b.phi);
}

std::vector<Interpretation> rational_answer_sets(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  require_epistemic_free(p);
  std::vector<Interpretation> ws;
  for (const Interpretation& m : models(p)) {
    if (ws_check_disjunctive(p, m)) ws.push_back(m);
  }
  std::vector<Interpretation> out = minimal_of(ws);
  check_outputs(p, out, true);
  return out;
}

std::vector<Interpretation> wj_answer_sets(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  if (!is_normal(p)) throw NotNormalError("wj_answer_sets requires an epistemic-free normal program");
  std::vector<Interpretation> out;
  for (const Interpretation& m : models(p)) {
    if (wj_accepts(p, m)) out.push_back(m);
  }
  check_outputs(p, out, true);
  return out;
}

std::vector<Interpretation> gl_nlp_answer_sets(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  if (!is_simple(p) || !is_normal(p))
    throw NotSimpleError("gl_nlp_answer_sets requires a simple normal program");
  std::vector<Interpretation> out;
  for (const Interpretation& m : models(p)) {
    if (least_model_definite(gl_reduct(p, m)) == m) out.push_back(m);
  }
  check_outputs(p, out, true);
  return out;
}

std::vector<Interpretation> gl_answer_sets(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  if (!is_simple(p)) throw NotSimpleError("gl_answer_sets requires a simple program");
  std::vector<Interpretation> out;
  for (const Interpretation& m : models(p)) {
    if (is_minimal_model(gl_reduct(p, m), m)) out.push_back(m);
  }
  check_outputs(p, out, true);
  return out;
}

std::vector<Interpretation> flp_answer_sets(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  require_epistemic_free(p);
  std::vector<Interpretation> out;
  for (const Interpretation& m : models(p)) {
    if (is_minimal_model(flp_reduct(p, m), m)) out.push_back(m);
  }
  check_outputs(p, out, true);
  return out;
}

std::vector<Interpretation> equilibrium_answer_sets(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  require_epistemic_free(p);
  std::vector<Interpretation> out;
  for (const Interpretation& m : models(p)) {
    Theory red;
    red.reserve(p.rules.size());
    for (const Rule& r : p.rules) red.push_back(ferraris_reduct(rule_formula(r), m));
    std::vector<Interpretation> ms = models(red, p.signature);
    bool minimal = std::find(ms.begin(), ms.end(), m) != ms.end();
    for (const Interpretation& j : ms) {
      if (!minimal) break;
      if (j != m && is_subset(j, m)) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  // Answer sets of arbitrary-formula programs need not be an antichain
  // (p :- ~~p has both {} and {p}), so only model-hood is checked here.
  check_outputs(p, out, false);
  return out;
}

std::vector<Interpretation> di_answer_sets(const Program& p, const SemanticsId& base,
                                           size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  require_epistemic_free(p);
  if (base.kind == SemKind::GlNlp) {
    if (!is_simple(p))
      throw BaseMismatchError("DI over GL_NLP requires a simple program");
  } else if (base.kind != SemKind::Wj) {
    throw BaseMismatchError("DI base must be GL_NLP or WJ");
  }
  std::vector<Interpretation> cands;
  for (const Interpretation& m : models(p)) {
    for (const HeadSelection& sel : enumerate_variant_selections(p, m)) {
      Program red = disjunctive_reduct(p, m, sel);
      bool accepted = base.kind == SemKind::GlNlp
                          ? least_model_definite(gl_reduct(red, m)) == m
                          : wj_accepts(red, m);
      if (accepted) {
        cands.push_back(m);
        break;
      }
    }
  }
  std::vector<Interpretation> out = minimal_of(cands);
  check_outputs(p, out, true);
  return out;
}

std::vector<Interpretation> three_valued_answer_sets(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  if (!is_atomic_head(p))
    throw NotAtomicHeadError("three-valued semantics requires an atomic-head normal program");
  std::vector<Interpretation> out;
  for (const Interpretation& m : models(p)) {
    if (is_two_valued_stable(p, m)) out.push_back(m);
  }
  check_outputs(p, out, true);
  return out;
}

Tv three_valued_eval(const ThreeValuedInterp& tv, const FormulaPtr& f) {
  auto neg = [](Tv v) { return static_cast<Tv>(2 - static_cast<int>(v)); };
  switch (f->kind) {
    case Kind::Top:
      return Tv::True;
    case Kind::Bot:
      return Tv::False;
    case Kind::Atom:
      if (tv.i1.count(f->atom)) return Tv::True;
      if (tv.i2.count(f->atom)) return Tv::Undef;
      return Tv::False;
    case Kind::Not:
      return neg(three_valued_eval(tv, f->lhs));
    case Kind::And:
      return std::min(three_valued_eval(tv, f->lhs), three_valued_eval(tv, f->rhs));
    case Kind::Or:
      return std::max(three_valued_eval(tv, f->lhs), three_valued_eval(tv, f->rhs));
    case Kind::Implies:
      return std::max(neg(three_valued_eval(tv, f->lhs)), three_valued_eval(tv, f->rhs));
    case Kind::Iff: {
      Tv l = three_valued_eval(tv, f->lhs);
      Tv r = three_valued_eval(tv, f->rhs);
      return std::min(std::max(neg(l), r), std::max(neg(r), l));
    }
    case Kind::EpNot:
      throw EpistemicProgramError("three-valued evaluation is classical");
    case Kind::Neq:
      if (!f->t1.empty() && std::isupper(static_cast<unsigned char>(f->t1[0])))
        throw Error("three-valued evaluation requires ground formulas");
      if (!f->t2.empty() && std::isupper(static_cast<unsigned char>(f->t2[0])))
        throw Error("three-valued evaluation requires ground formulas");
      return f->t1 != f->t2 ? Tv::True : Tv::False;
  }
  throw Error("internal: unhandled formula kind");
}

ThreeValuedInterp phi_op(const Program& p, const ThreeValuedInterp& tv) {
  if (!is_atomic_head(p))
    throw NotAtomicHeadError("the fixpoint operator requires an atomic-head normal program");
  ThreeValuedInterp out;
  for (const Rule& r : p.rules) {
    Tv b = three_valued_eval(tv, r.body);
    const Atom& h = r.heads.front()->atom;
    if (b == Tv::True) out.i1.insert(h);
    if (b != Tv::False) out.i2.insert(h);
  }
  return out;
}

ThreeValuedInterp stable_revision(const Program& p, const ThreeValuedInterp& tv) {
  if (!is_atomic_head(p))
    throw NotAtomicHeadError("the fixpoint operator requires an atomic-head normal program");
  // Lower bound: least fixpoint of X -> Φ(X, i2).i1 from the empty set.
  Interpretation lower;
  for (;;) {
    Interpretation next = phi_op(p, {lower, tv.i2}).i1;
    if (next == lower) break;
    lower = std::move(next);
  }
  // Upper bound: iterate Y -> Φ(i1, Y).i2 from i1.
  Interpretation upper = tv.i1;
  std::vector<Interpretation> seen{upper};
  for (;;) {
    Interpretation next = phi_op(p, {tv.i1, upper}).i2;
    if (next == upper) break;
    if (std::find(seen.begin(), seen.end(), next) != seen.end())
      throw Error("stable revision did not converge");
    seen.push_back(next);
    upper = std::move(next);
  }
  return {std::move(lower), std::move(upper)};
}

std::optional<ThreeValuedInterp> stable_revision_fixpoint(const Program& p,
                                                          const Interpretation& i) {
  ThreeValuedInterp cur{i, i};
  std::vector<ThreeValuedInterp> seen{cur};
  for (;;) {
    ThreeValuedInterp next = stable_revision(p, cur);
    if (next == cur) return cur;
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) return std::nullopt;
    seen.push_back(next);
    cur = std::move(next);
  }
}

bool is_two_valued_stable(const Program& p, const Interpretation& i) {
  std::optional<ThreeValuedInterp> fp = stable_revision_fixpoint(p, i);
  return fp && fp->i1 == i && fp->i2 == i;
}

std::vector<WorldView> rational_world_views(const Program& p, size_t max_atoms) {
  return phi_search(p, max_atoms, [](const Program& red, size_t cap) {
    return rational_answer_sets(red, cap);
  });
}

std::vector<WorldView> se16_world_views(const Program& p, const SemanticsId& base,
                                        size_t max_atoms) {
  if (is_world_view_semantics(base))
    throw Error("SE16 base must be an answer-set semantics");
  return phi_search(p, max_atoms, [&base](const Program& red, size_t cap) {
    return answer_sets(red, base, cap);
  });
}

std::vector<WorldView> g91_world_views(const Program& p, size_t max_atoms) {
  require_cap(p, max_atoms);
  require_ground(p);
  std::vector<FormulaPtr> mlits = modal_literals(p);
  if (mlits.size() > 20) throw Error("too many modal literals to enumerate");
  std::vector<FormulaPtr> eps = ep_negations(p);
  std::vector<WorldView> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << mlits.size()); ++mask) {
    ModalTruth truth;
    for (size_t k = 0; k < mlits.size(); ++k)
      truth[mlits[k]] = (mask & (uint32_t{1} << k)) != 0;
    Program red = g91_reduct_under(p, truth);
    std::vector<Interpretation> as = gl_answer_sets(red, max_atoms);
    if (as.empty()) continue;
    EpistemicModel a = canonical_epistemic_model(std::move(as));
    bool ok = true;
    for (size_t k = 0; k < mlits.size(); ++k) {
      bool guessed = (mask & (uint32_t{1} << k)) != 0;
      if (modal_literal_true(a, mlits[k]) != guessed) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    bool duplicate = std::any_of(out.begin(), out.end(), [&](const WorldView& w) {
      return w.model == a;
    });
    if (!duplicate) out.push_back({a, phi_of(a, eps)});
  }
  sort_world_views(out);
  return out;
}

std::vector<Interpretation> answer_sets(const Program& p, const SemanticsId& sem,
                                        size_t max_atoms) {
  switch (sem.kind) {
    case SemKind::Rational:
      return rational_answer_sets(p, max_atoms);
    case SemKind::Gl:
      return gl_answer_sets(p, max_atoms);
    case SemKind::GlNlp:
      return gl_nlp_answer_sets(p, max_atoms);
    case SemKind::Wj:
      return wj_answer_sets(p, max_atoms);
    case SemKind::Flp:
      return flp_answer_sets(p, max_atoms);
    case SemKind::Equilibrium:
      return equilibrium_answer_sets(p, max_atoms);
    case SemKind::DiGlnlp:
      return di_answer_sets(p, {SemKind::GlNlp, std::nullopt}, max_atoms);
    case SemKind::DiWj:
      return di_answer_sets(p, {SemKind::Wj, std::nullopt}, max_atoms);
    case SemKind::ThreeValued:
      return three_valued_answer_sets(p, max_atoms);
    case SemKind::G91:
    case SemKind::Se16:
      throw Error(to_string(sem) + " is a world-view semantics; use world_views");
  }
  throw Error("internal: unhandled semantics kind");
}

std::vector<WorldView> world_views(const Program& p, const SemanticsId& sem,
                                   size_t max_atoms) {
  switch (sem.kind) {
    case SemKind::Rational:
      return rational_world_views(p, max_atoms);
    case SemKind::G91:
      return g91_world_views(p, max_atoms);
    case SemKind::Se16:
      if (!sem.base) throw Error("SE16 requires a base semantics");
      return se16_world_views(p, {*sem.base, std::nullopt}, max_atoms);
    default:
      throw Error(to_string(sem) + " is not a world-view semantics; wrap it as SE16(" +
                  to_string(sem) + ")");
  }
}

}  // namespace rasp
