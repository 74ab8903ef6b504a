#include "rasp/properties.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>

#include "rasp/reducts.hpp"

namespace rasp {

namespace {

std::vector<Atom> sorted_atoms(const std::set<Atom>& s) {
  return {s.begin(), s.end()};
}

std::set<Atom> mask_subset(const std::vector<Atom>& atoms, uint32_t mask) {
  std::set<Atom> out;
  for (size_t k = 0; k < atoms.size(); ++k)
    if (mask & (uint32_t{1} << k)) out.insert(atoms[k]);
  return out;
}

std::vector<Atom> head_atoms(const Rule& r) {
  std::vector<Atom> out;
  if (is_constraint(r)) return out;
  for (const FormulaPtr& h : r.heads) out.push_back(h->atom);
  return out;
}

// One rule of the foundedness fragment, pre-classified.
struct FragmentRule {
  std::vector<Atom> head;
  FormulaPtr body;
  std::set<Atom> pos_objective;   // conjunct A or ¬¬A
  std::set<Atom> pos_subjective;  // conjunct K A or ¬¬K A
};

FragmentRule classify_fragment_rule(const Rule& r) {
  FragmentRule out;
  out.body = r.body;
  if (!is_constraint(r)) {
    for (const FormulaPtr& h : r.heads) {
      if (h->kind != Kind::Atom)
        throw FragmentError("fragment heads must be atom disjunctions");
      out.head.push_back(h->atom);
    }
  }
  std::vector<FormulaPtr> conjuncts;
  flatten_conjuncts(r.body, conjuncts);
  for (const FormulaPtr& c : conjuncts) {
    if (c->kind == Kind::Top) continue;
    if (contains_epnot(c)) {
      // K L, ¬K L, or ¬¬K L with K L encoded as ¬(not L).
      int nots = 0;
      FormulaPtr cur = c;
      while (cur->kind == Kind::Not && nots <= 3) {
        ++nots;
        cur = cur->lhs;
      }
      if (cur->kind != Kind::EpNot || nots < 1 || nots > 3)
        throw FragmentError("subjective conjuncts must be K L, ~K L, or ~~K L");
      FormulaPtr l = cur->lhs;
      bool positive_l = l->kind == Kind::Atom;
      if (!positive_l && !(l->kind == Kind::Not && l->lhs->kind == Kind::Atom))
        throw FragmentError("K must apply to an objective literal");
      if (nots != 2 && positive_l) out.pos_subjective.insert(l->atom);
    } else if (c->kind == Kind::Atom) {
      out.pos_objective.insert(c->atom);
    } else if (c->kind == Kind::Not && c->lhs->kind == Kind::Atom) {
      // negative literal
    } else if (c->kind == Kind::Not && c->lhs->kind == Kind::Not &&
               c->lhs->lhs->kind == Kind::Atom) {
      out.pos_objective.insert(c->lhs->lhs->atom);
    } else {
      throw FragmentError("objective conjuncts must be A, ~A, or ~~A");
    }
  }
  return out;
}

bool intersects(const std::set<Atom>& a, const std::set<Atom>& b) {
  for (const Atom& x : a)
    if (b.count(x)) return true;
  return false;
}

bool intersects(const std::vector<Atom>& a, const std::set<Atom>& b) {
  for (const Atom& x : a)
    if (b.count(x)) return true;
  return false;
}

Program with_constraint(const Program& p, const Rule& c) {
  std::vector<Rule> rules = p.rules;
  int next_id = 0;
  for (const Rule& r : rules) next_id = std::max(next_id, r.id);
  Rule copy = c;
  copy.id = next_id + 1;
  rules.push_back(std::move(copy));
  std::set<Atom> sig = p.signature;
  collect_atoms(c.body, sig);
  for (const FormulaPtr& h : c.heads) collect_atoms(h, sig);
  return make_program(std::move(rules), std::move(sig));
}

// An epistemic model satisfies a subjective constraint when no member makes
// the body true w.r.t. the model.
bool model_satisfies_constraint(const EpistemicModel& a, const Rule& c) {
  return std::none_of(a.begin(), a.end(), [&](const Interpretation& i) {
    return ep_satisfies(a, i, c.body);
  });
}

}  // namespace

std::string to_string(PropertyId id) {
  switch (id) {
    case PropertyId::MM: return "MM";
    case PropertyId::FN: return "FN";
    case PropertyId::WFN: return "WFN";
    case PropertyId::CM: return "CM";
    case PropertyId::SCM: return "SCM";
  }
  throw Error("internal: unhandled property id");
}

PropertyId parse_property(const std::string& text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s == "MM") return PropertyId::MM;
  if (s == "FN") return PropertyId::FN;
  if (s == "WFN") return PropertyId::WFN;
  if (s == "CM") return PropertyId::CM;
  if (s == "SCM") return PropertyId::SCM;
  throw Error("unknown property: " + text);
}

std::vector<UnfoundedWitness> unfounded_sets(const Program& p, const Interpretation& i) {
  if (!is_simple(p)) throw NotSimpleError("unfounded_sets requires a simple program");
  if (i.size() > 20) throw Error("interpretation too large to enumerate subsets");
  std::vector<Atom> atoms = sorted_atoms(i);
  std::vector<UnfoundedWitness> out;
  for (uint32_t mask = 1; mask < (uint32_t{1} << atoms.size()); ++mask) {
    std::set<Atom> x = mask_subset(atoms, mask);
    bool supported = false;
    for (const Rule& r : p.rules) {
      std::vector<Atom> head = head_atoms(r);
      if (!intersects(head, x)) continue;
      if (!satisfies(i, r.body)) continue;  // (f1)
      std::vector<FormulaPtr> conjuncts;
      flatten_conjuncts(r.body, conjuncts);
      bool pos_hits_x = std::any_of(conjuncts.begin(), conjuncts.end(), [&](const FormulaPtr& c) {
        return c->kind == Kind::Atom && x.count(c->atom);
      });
      if (pos_hits_x) continue;  // (f2)
      bool rest_true = std::any_of(head.begin(), head.end(), [&](const Atom& a) {
        return !x.count(a) && i.count(a);
      });
      if (rest_true) continue;  // (f3)
      supported = true;
      break;
    }
    if (!supported) out.push_back({std::move(x), {}});
  }
  return out;
}

std::vector<UnfoundedWitness> epistemic_unfounded(const Program& p, const EpistemicModel& w,
                                                  size_t max_pairs) {
  if (w.empty()) throw Error("epistemic model must be nonempty");
  if (max_pairs < 1) throw Error("max_pairs must be at least 1");
  std::vector<FragmentRule> rules;
  rules.reserve(p.rules.size());
  for (const Rule& r : p.rules) rules.push_back(classify_fragment_rule(r));
  if (p.signature.size() > 20) throw Error("signature too large to enumerate subsets");

  std::vector<Atom> atoms = sorted_atoms(p.signature);
  using Pair = std::pair<std::set<Atom>, Interpretation>;
  std::vector<Pair> universe;
  for (const Interpretation& i : w) {
    for (uint32_t mask = 1; mask < (uint32_t{1} << atoms.size()); ++mask) {
      std::set<Atom> x = mask_subset(atoms, mask);
      if (intersects(x, i)) universe.push_back({std::move(x), i});
    }
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > 2048) throw Error("unfounded-pair search space too large");

  auto is_unfounded = [&](const std::vector<size_t>& member_idx) {
    for (size_t idx : member_idx) {
      const Pair& pair = universe[idx];
      for (const FragmentRule& r : rules) {
        if (!intersects(r.head, pair.first)) continue;
        if (!ep_satisfies(w, pair.second, r.body)) continue;       // (ef1)
        if (intersects(r.pos_objective, pair.first)) continue;     // (ef2)
        bool rest_true = std::any_of(r.head.begin(), r.head.end(), [&](const Atom& a) {
          return !pair.first.count(a) && pair.second.count(a);
        });
        if (rest_true) continue;  // (ef3)
        bool sub_hits = std::any_of(member_idx.begin(), member_idx.end(), [&](size_t other) {
          return intersects(r.pos_subjective, universe[other].first);
        });
        if (sub_hits) continue;  // (ef4)
        return false;            // this rule supports the pair
      }
    }
    return true;
  };

  // Enumerate subsets of the universe, smallest first.
  std::vector<UnfoundedWitness> out;
  std::vector<size_t> chosen;
  for (size_t size = 1; size <= max_pairs; ++size) {
    std::function<void(size_t)> combos = [&](size_t start) {
      if (chosen.size() == size) {
        if (is_unfounded(chosen)) {
          UnfoundedWitness wit;
          for (size_t k : chosen) wit.pairs.push_back(universe[k]);
          out.push_back(std::move(wit));
        }
        return;
      }
      for (size_t k = start; k < universe.size(); ++k) {
        chosen.push_back(k);
        combos(k + 1);
        chosen.pop_back();
      }
    };
    combos(0);
  }
  return out;
}

bool is_wfn_founded(const Program& p, const EpistemicModel& w, size_t max_pairs) {
  return epistemic_unfounded(p, w, max_pairs).empty();
}

PropertyReport check_mm(const Program& p, const SemanticsId& sem, size_t max_atoms) {
  PropertyReport report;
  report.property = PropertyId::MM;
  for (const Interpretation& i : answer_sets(p, sem, max_atoms)) {
    if (is_minimal_model(p, i)) continue;
    report.holds = false;
    report.as_witness = i;
    for (const Interpretation& j : models(p)) {
      if (j != i && is_subset(j, i)) {
        report.smaller_model = j;
        break;
      }
    }
    break;
  }
  return report;
}

PropertyReport check_fn(const Program& p, const SemanticsId& sem, size_t max_atoms) {
  PropertyReport report;
  report.property = PropertyId::FN;
  for (const Interpretation& i : answer_sets(p, sem, max_atoms)) {
    std::vector<UnfoundedWitness> xs = unfounded_sets(p, i);
    if (xs.empty()) continue;
    report.holds = false;
    report.as_witness = i;
    report.unfounded = xs.front();
    break;
  }
  return report;
}

PropertyReport check_wfn(const Program& p, const SemanticsId& sem, size_t max_atoms,
                         size_t max_pairs) {
  PropertyReport report;
  report.property = PropertyId::WFN;
  for (const WorldView& w : world_views(p, sem, max_atoms)) {
    std::vector<UnfoundedWitness> ss = epistemic_unfounded(p, w.model, max_pairs);
    if (ss.empty()) continue;
    report.holds = false;
    report.wv_witness = w.model;
    report.unfounded = ss.front();
    break;
  }
  return report;
}

PropertyReport check_cm(const Program& p, const Rule& c, const SemanticsId& sem,
                        size_t max_atoms) {
  if (!is_constraint(c)) throw NotConstraintError("CM requires a constraint rule");
  if (contains_epnot(c.body))
    throw NotConstraintError("CM requires an objective constraint; use SCM");
  PropertyReport report;
  report.property = PropertyId::CM;
  std::vector<Interpretation> with = answer_sets(with_constraint(p, c), sem, max_atoms);
  std::vector<Interpretation> without = answer_sets(p, sem, max_atoms);
  std::vector<Interpretation> filtered;
  for (const Interpretation& i : without)
    if (satisfies_rule(i, c)) filtered.push_back(i);
  for (const Interpretation& i : with) {
    if (std::find(filtered.begin(), filtered.end(), i) != filtered.end()) continue;
    report.holds = false;
    report.as_witness = i;
    break;
  }
  return report;
}

PropertyReport check_scm(const Program& p, const Rule& c, const SemanticsId& sem,
                         size_t max_atoms) {
  if (!is_constraint(c)) throw NotConstraintError("SCM requires a constraint rule");
  std::vector<FormulaPtr> conjuncts;
  flatten_conjuncts(c.body, conjuncts);
  for (const FormulaPtr& f : conjuncts) {
    if (f->kind == Kind::Top) continue;
    // ~K a arrives as ~~not a, so peel every classical negation.
    FormulaPtr cur = f;
    while (cur->kind == Kind::Not) cur = cur->lhs;
    bool modal = cur->kind == Kind::EpNot &&
                 (cur->lhs->kind == Kind::Atom ||
                  (cur->lhs->kind == Kind::Not && cur->lhs->lhs->kind == Kind::Atom));
    if (!modal)
      throw NotConstraintError("SCM constraints take a conjunction of modal literals");
  }
  PropertyReport report;
  report.property = PropertyId::SCM;
  std::vector<WorldView> with = world_views(with_constraint(p, c), sem, max_atoms);
  std::vector<WorldView> without = world_views(p, sem, max_atoms);
  std::vector<EpistemicModel> filtered;
  for (const WorldView& w : without)
    if (model_satisfies_constraint(w.model, c)) filtered.push_back(w.model);
  for (const WorldView& w : with) {
    if (std::find(filtered.begin(), filtered.end(), w.model) != filtered.end()) continue;
    report.holds = false;
    report.wv_witness = w.model;
    break;
  }
  return report;
}

}  // namespace rasp
