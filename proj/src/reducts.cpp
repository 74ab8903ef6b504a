#include "rasp/reducts.hpp"

#include <algorithm>

namespace rasp {

namespace {

Program with_signature(std::vector<Rule> rules, const Program& source) {
  Program p;
  p.rules = std::move(rules);
  p.signature = source.signature;
  for (const Rule& r : p.rules) {
    for (const FormulaPtr& h : r.heads) collect_atoms(h, p.signature);
    collect_atoms(r.body, p.signature);
  }
  return p;
}

}  // namespace

Program gl_reduct(const Program& p, const Interpretation& i) {
  if (!is_simple(p)) throw NotSimpleError("gl_reduct requires a simple program");
  std::vector<Rule> out;
  for (const Rule& r : p.rules) {
    std::vector<FormulaPtr> conjs;
    flatten_conjuncts(r.body, conjs);
    bool drop = false;
    std::vector<FormulaPtr> positive;
    for (const FormulaPtr& c : conjs) {
      if (c->kind == Kind::Atom) {
        positive.push_back(c);
      } else if (c->kind == Kind::Not) {
        if (i.count(c->lhs->atom)) {
          drop = true;
          break;
        }
      }
    }
    if (drop) continue;
    Rule nr = r;
    nr.body = conjoin(positive);
    out.push_back(std::move(nr));
  }
  return with_signature(std::move(out), p);
}

Program flp_reduct(const Program& p, const Interpretation& i) {
  std::vector<Rule> out;
  for (const Rule& r : p.rules) {
    if (satisfies(i, r.body)) out.push_back(r);
  }
  return with_signature(std::move(out), p);
}

FormulaPtr ferraris_reduct(const FormulaPtr& f, const Interpretation& i) {
  switch (f->kind) {
    case Kind::Top:
      return f_top();
    case Kind::Bot:
      return f_bot();
    case Kind::Atom:
      return i.count(f->atom) ? f : f_bot();
    case Kind::Not:
      return satisfies(i, f->lhs) ? f_bot() : f_top();
    case Kind::And:
      if (!satisfies(i, f)) return f_bot();
      return f_and(ferraris_reduct(f->lhs, i), ferraris_reduct(f->rhs, i));
    case Kind::Or:
      if (!satisfies(i, f)) return f_bot();
      return f_or(ferraris_reduct(f->lhs, i), ferraris_reduct(f->rhs, i));
    case Kind::Implies:
      if (!satisfies(i, f)) return f_bot();
      return f_implies(ferraris_reduct(f->lhs, i), ferraris_reduct(f->rhs, i));
    case Kind::Iff:
      return ferraris_reduct(
          f_and(f_implies(f->lhs, f->rhs), f_implies(f->rhs, f->lhs)), i);
    case Kind::EpNot:
      throw EpistemicProgramError("epistemic negation in a classical context");
    case Kind::Neq:
      return satisfies(i, f) ? f_top() : f_bot();
  }
  return f;
}

// ---------------------------------------------------------------------------
// Epistemic reducts

namespace {

bool phi_contains(const std::vector<FormulaPtr>& phi, const FormulaPtr& f) {
  return std::any_of(phi.begin(), phi.end(),
                     [&](const FormulaPtr& g) { return formula_equal(f, g); });
}

FormulaPtr substitute_epnot(const FormulaPtr& f, const std::vector<FormulaPtr>& phi) {
  switch (f->kind) {
    case Kind::EpNot:
      return phi_contains(phi, f->lhs) ? f_top() : f_not(f->lhs);
    case Kind::Not:
      return f_not(substitute_epnot(f->lhs, phi));
    case Kind::And:
      return f_and(substitute_epnot(f->lhs, phi), substitute_epnot(f->rhs, phi));
    case Kind::Or:
      return f_or(substitute_epnot(f->lhs, phi), substitute_epnot(f->rhs, phi));
    case Kind::Implies:
      return f_implies(substitute_epnot(f->lhs, phi), substitute_epnot(f->rhs, phi));
    case Kind::Iff:
      return f_iff(substitute_epnot(f->lhs, phi), substitute_epnot(f->rhs, phi));
    default:
      return f;
  }
}

Program substitute_program(const Program& p, const std::vector<FormulaPtr>& phi) {
  std::vector<Rule> out;
  out.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    Rule nr;
    nr.id = r.id;
    for (const FormulaPtr& h : r.heads) nr.heads.push_back(substitute_epnot(h, phi));
    nr.body = substitute_epnot(r.body, phi);
    out.push_back(std::move(nr));
  }
  return with_signature(std::move(out), p);
}

}  // namespace

EpistemicReduct epistemic_reduct(const Program& p, const EpistemicModel& a) {
  if (!is_epistemic_model(p, a)) {
    throw NotEpistemicModelError("collection is not an epistemic model of the program");
  }
  std::vector<FormulaPtr> phi;
  for (const FormulaPtr& f : ep_negations(p)) {
    bool true_in_a = std::any_of(a.begin(), a.end(),
                                 [&](const Interpretation& j) { return !satisfies(j, f); });
    if (true_in_a) phi.push_back(f);
  }
  EpistemicReduct red;
  red.program = substitute_program(p, phi);
  red.phi = std::move(phi);
  return red;
}

Program se16_reduct(const Program& p, const std::vector<FormulaPtr>& phi) {
  std::vector<FormulaPtr> eps = ep_negations(p);
  for (const FormulaPtr& f : phi) {
    if (!phi_contains(eps, f)) {
      throw PhiNotSubsetError("phi member is not an epistemic negation of the program: " +
                              print_formula(f));
    }
  }
  return substitute_program(p, phi);
}

// ---------------------------------------------------------------------------
// Modal reducts

namespace {

bool is_objective_literal(const FormulaPtr& f) {
  return f->kind == Kind::Atom || (f->kind == Kind::Not && f->lhs->kind == Kind::Atom);
}

bool is_modal_literal(const FormulaPtr& f) {
  const Formula* g = f.get();
  if (g->kind == Kind::Not) g = g->lhs.get();
  if (g->kind != Kind::EpNot) return false;
  return is_objective_literal(g->lhs);
}

void require_specification(const Program& p) {
  for (const Rule& r : p.rules) {
    if (!is_constraint(r)) {
      for (const FormulaPtr& h : r.heads) {
        if (h->kind != Kind::Atom) {
          throw NotSpecificationError("rule " + std::to_string(r.id) +
                                      ": heads must be atoms");
        }
      }
    }
    std::vector<FormulaPtr> conjs;
    flatten_conjuncts(r.body, conjs);
    for (const FormulaPtr& c : conjs) {
      if (c->kind == Kind::Top) continue;
      if (is_objective_literal(c) || is_modal_literal(c)) continue;
      throw NotSpecificationError("rule " + std::to_string(r.id) +
                                  ": body conjunct is neither a literal nor a modal literal: " +
                                  print_formula(c));
    }
  }
}

bool modal_true(const EpistemicModel& a, const FormulaPtr& lit) {
  bool negated = lit->kind == Kind::Not;
  const FormulaPtr& ep = negated ? lit->lhs : lit;
  bool val = std::any_of(a.begin(), a.end(),
                         [&](const Interpretation& j) { return !satisfies(j, ep->lhs); });
  return negated ? !val : val;
}

}  // namespace

std::vector<FormulaPtr> modal_literals(const Program& p) {
  require_specification(p);
  std::set<FormulaPtr, FormulaLess> found;
  for (const Rule& r : p.rules) {
    std::vector<FormulaPtr> conjs;
    flatten_conjuncts(r.body, conjs);
    for (const FormulaPtr& c : conjs) {
      if (is_modal_literal(c)) found.insert(c);
    }
  }
  return {found.begin(), found.end()};
}

Program g91_reduct_under(const Program& p, const ModalTruth& truth) {
  require_specification(p);
  std::vector<Rule> out;
  for (const Rule& r : p.rules) {
    std::vector<FormulaPtr> conjs;
    flatten_conjuncts(r.body, conjs);
    std::vector<FormulaPtr> kept;
    bool drop = false;
    for (const FormulaPtr& c : conjs) {
      if (!is_modal_literal(c)) {
        if (c->kind != Kind::Top) kept.push_back(c);
        continue;
      }
      auto it = truth.find(c);
      if (it == truth.end()) throw Error("modal literal without a truth value: " + print_formula(c));
      if (!it->second) {
        drop = true;
        break;
      }
    }
    if (drop) continue;
    Rule nr = r;
    nr.body = conjoin(kept);
    out.push_back(std::move(nr));
  }
  return with_signature(std::move(out), p);
}

Program g91_modal_reduct(const Program& p, const EpistemicModel& a) {
  if (a.empty()) throw Error("epistemic model must be nonempty");
  ModalTruth truth;
  for (const FormulaPtr& lit : modal_literals(p)) truth[lit] = modal_true(a, lit);
  return g91_reduct_under(p, truth);
}

// ---------------------------------------------------------------------------
// Head selections

Program disjunctive_reduct(const Program& p, const Interpretation& i, const HeadSelection& sel) {
  std::vector<Rule> out;
  for (const Rule& r : p.rules) {
    if (!satisfies(i, r.body)) continue;
    auto it = sel.choice.find(r.id);
    if (it == sel.choice.end()) {
      throw SelectionMismatchError("no head choice for rule " + std::to_string(r.id));
    }
    int idx = it->second;
    if (idx == HeadSelection::kBot) {
      throw SelectionMismatchError("bottom selected for rule " + std::to_string(r.id) +
                                   " whose body is satisfied");
    }
    if (idx < 0 || idx >= static_cast<int>(r.heads.size())) {
      throw SelectionMismatchError("head index out of range for rule " + std::to_string(r.id));
    }
    if (!satisfies(i, r.heads[idx])) {
      throw SelectionMismatchError("selected head not satisfied for rule " + std::to_string(r.id));
    }
    Rule nr;
    nr.id = r.id;
    nr.heads.push_back(r.heads[idx]);
    nr.body = r.body;
    out.push_back(std::move(nr));
  }
  return with_signature(std::move(out), p);
}

namespace {

struct ChoicePoint {
  std::vector<int> rule_ids;           // rules sharing this choice
  std::vector<std::vector<int>> idxs;  // per rule, head index per option (parallel across rules)
  size_t options = 0;
};

std::vector<HeadSelection> expand(const std::vector<ChoicePoint>& points) {
  std::vector<HeadSelection> out;
  std::vector<size_t> pos(points.size(), 0);
  while (true) {
    HeadSelection s;
    for (size_t k = 0; k < points.size(); ++k) {
      const ChoicePoint& cp = points[k];
      for (size_t r = 0; r < cp.rule_ids.size(); ++r) {
        s.choice[cp.rule_ids[r]] = cp.options ? cp.idxs[r][pos[k]] : HeadSelection::kBot;
      }
    }
    out.push_back(std::move(s));
    int k = static_cast<int>(points.size()) - 1;
    while (k >= 0) {
      if (points[k].options != 0 && ++pos[k] < points[k].options) break;
      pos[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace

std::vector<HeadSelection> enumerate_selections(const Program& p, const Interpretation& i) {
  std::vector<ChoicePoint> points;
  for (const Rule& r : p.rules) {
    if (!satisfies(i, r.body)) continue;
    std::vector<int> idxs;
    for (size_t k = 0; k < r.heads.size(); ++k) {
      if (!satisfies(i, r.heads[k])) continue;
      bool dup = std::any_of(idxs.begin(), idxs.end(), [&](int j) {
        return formula_equal(r.heads[j], r.heads[k]);
      });
      if (!dup) idxs.push_back(static_cast<int>(k));
    }
    ChoicePoint cp;
    cp.rule_ids.push_back(r.id);
    cp.options = idxs.size();
    cp.idxs.push_back(std::move(idxs));
    points.push_back(std::move(cp));
  }
  return expand(points);
}

bool variant_heads(const std::vector<FormulaPtr>& h1, const std::vector<FormulaPtr>& h2) {
  auto covered = [](const std::vector<FormulaPtr>& from, const std::vector<FormulaPtr>& in) {
    return std::all_of(from.begin(), from.end(), [&](const FormulaPtr& f) {
      return std::any_of(in.begin(), in.end(),
                         [&](const FormulaPtr& g) { return equivalent(f, g); });
    });
  };
  return covered(h1, h2) && covered(h2, h1);
}

std::vector<HeadSelection> enumerate_variant_selections(const Program& p, const Interpretation& i) {
  struct HeadList {
    std::vector<FormulaPtr> heads;
    std::vector<int> rule_ids;
  };
  auto same_list = [](const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k) {
      if (!formula_equal(a[k], b[k])) return false;
    }
    return true;
  };

  // Identical head lists share one choice: the selection is a function of the
  // head, not of the rule.
  std::vector<HeadList> lists;
  for (const Rule& r : p.rules) {
    if (!satisfies(i, r.body)) continue;
    auto it = std::find_if(lists.begin(), lists.end(),
                           [&](const HeadList& hl) { return same_list(hl.heads, r.heads); });
    if (it == lists.end()) {
      lists.push_back({r.heads, {r.id}});
    } else {
      it->rule_ids.push_back(r.id);
    }
  }

  // Union distinct lists into variance classes.
  std::vector<int> cls(lists.size());
  for (size_t k = 0; k < lists.size(); ++k) cls[k] = static_cast<int>(k);
  for (size_t a = 0; a < lists.size(); ++a) {
    for (size_t b = a + 1; b < lists.size(); ++b) {
      if (cls[a] != cls[b] && variant_heads(lists[a].heads, lists[b].heads)) {
        int from = cls[b], to = cls[a];
        for (int& c : cls) {
          if (c == from) c = to;
        }
      }
    }
  }

  std::vector<ChoicePoint> points;
  std::vector<bool> seen(lists.size(), false);
  for (size_t a = 0; a < lists.size(); ++a) {
    if (seen[a]) continue;
    std::vector<size_t> members;
    for (size_t b = a; b < lists.size(); ++b) {
      if (cls[b] == cls[a]) {
        members.push_back(b);
        seen[b] = true;
      }
    }
    // Equivalence classes of the representative's formulas, in head order.
    const std::vector<FormulaPtr>& rep = lists[a].heads;
    std::vector<FormulaPtr> reps;
    for (const FormulaPtr& f : rep) {
      bool known = std::any_of(reps.begin(), reps.end(),
                               [&](const FormulaPtr& g) { return equivalent(f, g); });
      if (!known) reps.push_back(f);
    }
    ChoicePoint cp;
    for (size_t m : members) {
      for (int id : lists[m].rule_ids) cp.rule_ids.push_back(id);
    }
    std::sort(cp.rule_ids.begin(), cp.rule_ids.end());
    // One option per satisfied equivalence class; equivalent formulas agree
    // on satisfaction, so testing the representative suffices. Every list of
    // the class covers every equivalence class (mutual matching), each list
    // contributing its first index from the class.
    std::vector<std::vector<int>> idx_per_rule(cp.rule_ids.size());
    size_t options = 0;
    for (const FormulaPtr& classrep : reps) {
      if (!satisfies(i, classrep)) continue;
      std::map<int, int> by_rule;
      bool complete = true;
      for (size_t m : members) {
        int idx = -1;
        for (size_t k = 0; k < lists[m].heads.size(); ++k) {
          if (equivalent(lists[m].heads[k], classrep)) {
            idx = static_cast<int>(k);
            break;
          }
        }
        if (idx < 0) {
          complete = false;
          break;
        }
        for (int id : lists[m].rule_ids) by_rule[id] = idx;
      }
      if (!complete) continue;
      for (size_t slot = 0; slot < cp.rule_ids.size(); ++slot) {
        idx_per_rule[slot].push_back(by_rule[cp.rule_ids[slot]]);
      }
      ++options;
    }
    cp.options = options;
    cp.idxs = std::move(idx_per_rule);
    points.push_back(std::move(cp));
  }
  return expand(points);
}

}  // namespace rasp
