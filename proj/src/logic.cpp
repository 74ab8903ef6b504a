#include "rasp/logic.hpp"

#include <algorithm>
#include <map>

namespace rasp {

namespace {

bool is_variable_term(const std::string& t) {
  return !t.empty() && t[0] >= 'A' && t[0] <= 'Z';
}

template <class Lookup>
bool eval_f(const Formula& f, const Lookup& truth) {
  switch (f.kind) {
    case Kind::Top:
      return true;
    case Kind::Bot:
      return false;
    case Kind::Atom:
      return truth(f.atom);
    case Kind::Not:
      return !eval_f(*f.lhs, truth);
    case Kind::And:
      return eval_f(*f.lhs, truth) && eval_f(*f.rhs, truth);
    case Kind::Or:
      return eval_f(*f.lhs, truth) || eval_f(*f.rhs, truth);
    case Kind::Implies:
      return !eval_f(*f.lhs, truth) || eval_f(*f.rhs, truth);
    case Kind::Iff:
      return eval_f(*f.lhs, truth) == eval_f(*f.rhs, truth);
    case Kind::EpNot:
      throw EpistemicProgramError("epistemic negation in a classical context");
    case Kind::Neq:
      if (is_variable_term(f.t1) || is_variable_term(f.t2)) {
        throw Error("inequality over variables cannot be evaluated");
      }
      return f.t1 != f.t2;
  }
  return false;
}

struct SetTruth {
  const Interpretation& i;
  bool operator()(const Atom& a) const { return i.count(a) != 0; }
};

struct MaskTruth {
  const std::map<Atom, int>& index;
  unsigned long long mask;
  bool operator()(const Atom& a) const {
    auto it = index.find(a);
    return it != index.end() && ((mask >> it->second) & 1ULL);
  }
};

Interpretation mask_to_interp(const std::map<Atom, int>& index, unsigned long long mask) {
  Interpretation i;
  for (const auto& [atom, bit] : index) {
    if ((mask >> bit) & 1ULL) i.insert(atom);
  }
  return i;
}

void require_enumerable(size_t n) {
  if (n > 30) throw Error("signature too large to enumerate (" + std::to_string(n) + " atoms)");
}

}  // namespace

std::string print_interpretation(const Interpretation& i) {
  std::string s = "{";
  bool first = true;
  for (const Atom& a : i) {
    if (!first) s += ",";
    first = false;
    s += print_atom(a);
  }
  return s + "}";
}

std::string print_epistemic_model(const EpistemicModel& a) {
  std::string s;
  for (size_t k = 0; k < a.size(); ++k) {
    if (k) s += ";";
    s += print_interpretation(a[k]);
  }
  return s;
}

bool is_subset(const Interpretation& a, const Interpretation& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool satisfies(const Interpretation& i, const FormulaPtr& f) {
  return eval_f(*f, SetTruth{i});
}

bool satisfies(const Interpretation& i, const Theory& t) {
  return std::all_of(t.begin(), t.end(), [&](const FormulaPtr& f) { return satisfies(i, f); });
}

bool satisfies_rule(const Interpretation& i, const Rule& r) {
  if (!satisfies(i, r.body)) return true;
  return std::any_of(r.heads.begin(), r.heads.end(),
                     [&](const FormulaPtr& h) { return satisfies(i, h); });
}

// ---------------------------------------------------------------------------
// Backend

namespace {

// Substitutes fixed truth values and constant-folds the result.
FormulaPtr fold_assign(const FormulaPtr& f, const std::map<Atom, bool>& fixed) {
  switch (f->kind) {
    case Kind::Atom: {
      auto it = fixed.find(f->atom);
      if (it == fixed.end()) return f;
      return it->second ? f_top() : f_bot();
    }
    case Kind::Not: {
      FormulaPtr x = fold_assign(f->lhs, fixed);
      if (x->kind == Kind::Top) return f_bot();
      if (x->kind == Kind::Bot) return f_top();
      return x == f->lhs ? f : f_not(x);
    }
    case Kind::And: {
      FormulaPtr l = fold_assign(f->lhs, fixed);
      FormulaPtr r = fold_assign(f->rhs, fixed);
      if (l->kind == Kind::Bot || r->kind == Kind::Bot) return f_bot();
      if (l->kind == Kind::Top) return r;
      if (r->kind == Kind::Top) return l;
      return l == f->lhs && r == f->rhs ? f : f_and(l, r);
    }
    case Kind::Or: {
      FormulaPtr l = fold_assign(f->lhs, fixed);
      FormulaPtr r = fold_assign(f->rhs, fixed);
      if (l->kind == Kind::Top || r->kind == Kind::Top) return f_top();
      if (l->kind == Kind::Bot) return r;
      if (r->kind == Kind::Bot) return l;
      return l == f->lhs && r == f->rhs ? f : f_or(l, r);
    }
    case Kind::Implies: {
      FormulaPtr l = fold_assign(f->lhs, fixed);
      FormulaPtr r = fold_assign(f->rhs, fixed);
      if (l->kind == Kind::Bot || r->kind == Kind::Top) return f_top();
      if (l->kind == Kind::Top) return r;
      if (r->kind == Kind::Bot) return l->kind == Kind::Not ? l->lhs : f_not(l);
      return l == f->lhs && r == f->rhs ? f : f_implies(l, r);
    }
    case Kind::Iff: {
      FormulaPtr l = fold_assign(f->lhs, fixed);
      FormulaPtr r = fold_assign(f->rhs, fixed);
      if (l->kind == Kind::Top) return r;
      if (r->kind == Kind::Top) return l;
      if (l->kind == Kind::Bot) return r->kind == Kind::Not ? r->lhs : f_not(r);
      if (r->kind == Kind::Bot) return l->kind == Kind::Not ? l->lhs : f_not(l);
      return l == f->lhs && r == f->rhs ? f : f_iff(l, r);
    }
    case Kind::Neq:
      if (!is_variable_term(f->t1) && !is_variable_term(f->t2)) {
        return f->t1 != f->t2 ? f_top() : f_bot();
      }
      return f;
    case Kind::EpNot:
      throw EpistemicProgramError("epistemic negation in a classical context");
    default:
      return f;
  }
}

}  // namespace

bool ExhaustiveBackend::satisfiable(const Theory& t, const std::set<Atom>& sig) {
  std::vector<FormulaPtr> fs(t.begin(), t.end());
  std::map<Atom, bool> fixed;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<FormulaPtr> rest;
    rest.reserve(fs.size());
    for (const FormulaPtr& f : fs) {
      if (f->kind == Kind::Top) {
        progress = true;
        continue;
      }
      if (f->kind == Kind::Bot) return false;
      if (f->kind == Kind::Atom) {
        auto [it, inserted] = fixed.emplace(f->atom, true);
        if (!inserted && !it->second) return false;
        progress = true;
        continue;
      }
      if (f->kind == Kind::Not && f->lhs->kind == Kind::Atom) {
        auto [it, inserted] = fixed.emplace(f->lhs->atom, false);
        if (!inserted && it->second) return false;
        progress = true;
        continue;
      }
      rest.push_back(f);
    }
    fs = std::move(rest);
    if (progress) {
      for (FormulaPtr& f : fs) f = fold_assign(f, fixed);
    }
  }
  if (fs.empty()) return true;

  // Atoms of sig that no residual formula mentions are unconstrained, so the
  // enumeration only needs the atoms still occurring.
  (void)sig;
  std::set<Atom> open;
  for (const FormulaPtr& f : fs) collect_atoms(f, open);
  require_enumerable(open.size());
  std::map<Atom, int> index;
  int k = 0;
  for (const Atom& a : open) index[a] = k++;
  const unsigned long long count = 1ULL << open.size();
  for (unsigned long long mask = 0; mask < count; ++mask) {
    MaskTruth truth{index, mask};
    bool ok = std::all_of(fs.begin(), fs.end(),
                          [&](const FormulaPtr& f) { return eval_f(*f, truth); });
    if (ok) return true;
  }
  return false;
}

SatBackend& default_backend() {
  static ExhaustiveBackend backend;
  return backend;
}

bool entails(const Theory& t, const FormulaPtr& f, SatBackend& backend) {
  Theory refuted(t.begin(), t.end());
  refuted.push_back(f_not(f));
  std::set<Atom> sig;
  for (const FormulaPtr& g : refuted) collect_atoms(g, sig);
  return !backend.satisfiable(refuted, sig);
}

bool entails(const Theory& t, const FormulaPtr& f) {
  return entails(t, f, default_backend());
}

std::vector<Interpretation> models(const Theory& t, const std::set<Atom>& sig) {
  require_enumerable(sig.size());
  std::map<Atom, int> index;
  int k = 0;
  for (const Atom& a : sig) index[a] = k++;
  std::vector<Interpretation> out;
  const unsigned long long count = 1ULL << sig.size();
  for (unsigned long long mask = 0; mask < count; ++mask) {
    MaskTruth truth{index, mask};
    bool ok = std::all_of(t.begin(), t.end(),
                          [&](const FormulaPtr& f) { return eval_f(*f, truth); });
    if (ok) out.push_back(mask_to_interp(index, mask));
  }
  return out;
}

namespace {

void require_classical(const Program& p) {
  if (is_epistemic(p)) throw EpistemicProgramError("program contains epistemic negation");
}

}  // namespace

bool is_model(const Program& p, const Interpretation& i) {
  require_classical(p);
  return std::all_of(p.rules.begin(), p.rules.end(),
                     [&](const Rule& r) { return satisfies_rule(i, r); });
}

std::vector<Interpretation> models(const Program& p) {
  require_classical(p);
  require_enumerable(p.signature.size());
  std::map<Atom, int> index;
  int k = 0;
  for (const Atom& a : p.signature) index[a] = k++;
  std::vector<Interpretation> out;
  const unsigned long long count = 1ULL << p.signature.size();
  for (unsigned long long mask = 0; mask < count; ++mask) {
    MaskTruth truth{index, mask};
    bool ok = true;
    for (const Rule& r : p.rules) {
      if (!eval_f(*r.body, truth)) continue;
      bool head = std::any_of(r.heads.begin(), r.heads.end(),
                              [&](const FormulaPtr& h) { return eval_f(*h, truth); });
      if (!head) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(mask_to_interp(index, mask));
  }
  return out;
}

std::vector<Interpretation> minimal_models(const Program& p) {
  std::vector<Interpretation> all = models(p);
  std::vector<Interpretation> out;
  for (const Interpretation& m : all) {
    bool minimal = std::none_of(all.begin(), all.end(), [&](const Interpretation& other) {
      return other != m && is_subset(other, m);
    });
    if (minimal) out.push_back(m);
  }
  return out;
}

bool is_minimal_model(const Program& p, const Interpretation& i) {
  if (!is_model(p, i)) return false;
  std::vector<Interpretation> all = models(p);
  return std::none_of(all.begin(), all.end(), [&](const Interpretation& other) {
    return other != i && is_subset(other, i);
  });
}

bool equivalent(const FormulaPtr& a, const FormulaPtr& b) {
  std::set<Atom> sig;
  collect_atoms(a, sig);
  collect_atoms(b, sig);
  require_enumerable(sig.size());
  std::map<Atom, int> index;
  int k = 0;
  for (const Atom& at : sig) index[at] = k++;
  const unsigned long long count = 1ULL << sig.size();
  for (unsigned long long mask = 0; mask < count; ++mask) {
    MaskTruth truth{index, mask};
    if (eval_f(*a, truth) != eval_f(*b, truth)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Epistemic satisfaction

namespace {

bool ep_not_holds(const EpistemicModel& a, const FormulaPtr& g) {
  return std::any_of(a.begin(), a.end(),
                     [&](const Interpretation& j) { return !satisfies(j, g); });
}

FormulaPtr ep_transform(const EpistemicModel& a, const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::EpNot:
      return ep_not_holds(a, f->lhs) ? f_top() : f_bot();
    case Kind::Not:
      return f_not(ep_transform(a, f->lhs));
    case Kind::And:
      return f_and(ep_transform(a, f->lhs), ep_transform(a, f->rhs));
    case Kind::Or:
      return f_or(ep_transform(a, f->lhs), ep_transform(a, f->rhs));
    case Kind::Implies:
      return f_implies(ep_transform(a, f->lhs), ep_transform(a, f->rhs));
    case Kind::Iff:
      return f_iff(ep_transform(a, f->lhs), ep_transform(a, f->rhs));
    default:
      return f;
  }
}

}  // namespace

bool ep_satisfies(const EpistemicModel& a, const Interpretation& i, const FormulaPtr& f) {
  if (a.empty()) throw Error("epistemic model must be nonempty");
  return satisfies(i, ep_transform(a, f));
}

bool is_epistemic_model(const Program& p, const EpistemicModel& a) {
  if (a.empty()) throw Error("epistemic model must be nonempty");
  for (const Interpretation& i : a) {
    for (const Rule& r : p.rules) {
      if (!ep_satisfies(a, i, r.body)) continue;
      bool head = std::any_of(r.heads.begin(), r.heads.end(),
                              [&](const FormulaPtr& h) { return ep_satisfies(a, i, h); });
      if (!head) return false;
    }
  }
  return true;
}

}  // namespace rasp
