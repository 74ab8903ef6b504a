#include "rasp/wellsupport.hpp"

#include <algorithm>
#include <map>

namespace rasp {

namespace {

using FormulaSet = std::set<FormulaPtr, FormulaLess>;

FormulaSet to_set(const Theory& t) { return FormulaSet(t.begin(), t.end()); }

// Structural equality; std::set::operator== would compare the shared_ptrs.
bool set_equal(const FormulaSet& a, const FormulaSet& b) {
  return a.size() == b.size() &&
         std::all_of(a.begin(), a.end(), [&](const FormulaPtr& f) { return b.count(f) > 0; });
}

bool entails_with(const Theory& base, const Theory& extra, const FormulaPtr& f) {
  Theory joined(base.begin(), base.end());
  joined.insert(joined.end(), extra.begin(), extra.end());
  return entails(joined, f);
}

bool contains_equivalent(const Theory& t, const FormulaPtr& f) {
  return std::any_of(t.begin(), t.end(),
                     [&](const FormulaPtr& g) { return equivalent(g, f); });
}

void require_normal(const Program& p) {
  for (const Rule& r : p.rules) {
    if (r.heads.size() != 1) {
      throw Error("rule " + std::to_string(r.id) + " has multiple head formulas");
    }
  }
}

void require_model(const Program& p, const Interpretation& i) {
  if (!is_model(p, i)) throw NotModelError("interpretation is not a model of the program");
}

void require_acyclic(const PartialOrder& o) {
  std::map<Atom, std::vector<Atom>> adj;
  std::map<Atom, int> indeg;
  for (const auto& [q, pnode] : o.pairs) {
    adj[q].push_back(pnode);
    indeg.emplace(q, 0);
    ++indeg[pnode];
  }
  std::vector<Atom> queue;
  for (const auto& [a, d] : indeg) {
    if (d == 0) queue.push_back(a);
  }
  size_t seen = 0;
  while (!queue.empty()) {
    Atom a = queue.back();
    queue.pop_back();
    ++seen;
    for (const Atom& b : adj[a]) {
      if (--indeg[b] == 0) queue.push_back(b);
    }
  }
  if (seen != indeg.size()) throw Error("derivation order contains a cycle");
}

void require_acyclic(const HeadOrder& o) {
  std::map<FormulaPtr, int, FormulaLess> id;
  auto key = [&](const FormulaPtr& f) {
    auto [it, inserted] = id.emplace(f, static_cast<int>(id.size()));
    return it->second;
  };
  std::vector<std::vector<int>> adj;
  std::vector<int> indeg;
  auto grow = [&](int k) {
    while (static_cast<int>(adj.size()) <= k) {
      adj.emplace_back();
      indeg.push_back(0);
    }
  };
  for (const auto& [f, h] : o.pairs) {
    int a = key(f), b = key(h);
    grow(std::max(a, b));
    adj[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> queue;
  for (size_t k = 0; k < indeg.size(); ++k) {
    if (indeg[k] == 0) queue.push_back(static_cast<int>(k));
  }
  size_t seen = 0;
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    ++seen;
    for (int b : adj[a]) {
      if (--indeg[b] == 0) queue.push_back(b);
    }
  }
  if (seen != indeg.size()) throw Error("head derivation order contains a cycle");
}

}  // namespace

Theory negated_complement(const Program& p, const Interpretation& i) {
  Theory out;
  for (const Atom& a : p.signature) {
    if (!i.count(a)) out.push_back(f_not(f_atom(a)));
  }
  return out;
}

Theory t_operator(const Program& p, const Theory& o, const Theory& n) {
  require_normal(p);
  Theory out;
  FormulaSet seen;
  for (const Rule& r : p.rules) {
    if (!entails_with(o, n, r.body)) continue;
    const FormulaPtr& head = r.heads[0];
    if (head->kind == Kind::Bot) {
      throw BotDerivedError("constraint body derivable: rule " + std::to_string(r.id));
    }
    if (seen.insert(head).second) out.push_back(head);
  }
  return out;
}

std::vector<Theory> lfp_t(const Program& p, const Theory& n, bool prune) {
  require_normal(p);
  std::vector<Theory> stages;
  stages.push_back({});
  while (true) {
    const Theory& cur = stages.back();
    Theory raw = t_operator(p, cur, n);
    Theory next;
    if (prune) {
      for (const FormulaPtr& f : raw) {
        if (!contains_equivalent(next, f)) next.push_back(f);
      }
    } else {
      next = std::move(raw);
    }
    if (set_equal(to_set(next), to_set(cur))) break;
    stages.push_back(std::move(next));
  }
  return stages;
}

std::optional<PartialOrder> ws_check_atomic(const Program& p, const Interpretation& i) {
  require_normal(p);
  for (const Rule& r : p.rules) {
    if (!is_constraint(r) && r.heads[0]->kind != Kind::Atom) {
      throw Error("rule " + std::to_string(r.id) + " head is not an atom");
    }
  }
  require_model(p, i);

  const Theory neg = negated_complement(p, i);
  std::vector<const Rule*> active;
  for (const Rule& r : p.rules) {
    if (satisfies(i, r.body)) active.push_back(&r);
  }

  Interpretation derived;
  PartialOrder order;
  while (!active.empty()) {
    Theory stage;
    for (const Atom& a : derived) stage.push_back(f_atom(a));

    std::vector<const Rule*> fired;
    for (const Rule* r : active) {
      if (entails_with(stage, neg, r->body)) fired.push_back(r);
    }
    if (fired.empty()) break;

    std::set<Atom> fired_heads;
    for (const Rule* r : fired) {
      if (r->heads[0]->kind == Kind::Bot) {
        throw BotDerivedError("constraint body derivable: rule " + std::to_string(r->id));
      }
      const Atom& head = r->heads[0]->atom;
      fired_heads.insert(head);
      std::set<Atom> body_atoms;
      collect_atoms(r->body, body_atoms);
      for (const Atom& q : derived) {
        if (body_atoms.count(q)) order.pairs.emplace(q, head);
      }
    }
    derived.insert(fired_heads.begin(), fired_heads.end());
    std::erase_if(active, [&](const Rule* r) {
      return r->heads[0]->kind == Kind::Atom && fired_heads.count(r->heads[0]->atom);
    });
  }

  if (derived != i) return std::nullopt;
  require_acyclic(order);
  return order;
}

namespace {

Interpretation entailed_atoms(const Interpretation& i, const Theory& stage, const Theory& neg) {
  Interpretation out;
  for (const Atom& a : i) {
    if (entails_with(stage, neg, f_atom(a))) out.insert(a);
  }
  return out;
}

}  // namespace

std::optional<WsWitness> ws_check_normal(const Program& p, const Interpretation& i) {
  require_normal(p);
  require_model(p, i);

  const Theory neg = negated_complement(p, i);
  std::vector<const Rule*> active;
  for (const Rule& r : p.rules) {
    if (satisfies(i, r.body)) active.push_back(&r);
  }

  WsWitness w;
  Theory stage;
  Interpretation entailed = entailed_atoms(i, stage, neg);
  while (!active.empty()) {
    std::vector<const Rule*> fired;
    for (const Rule* r : active) {
      if (entails_with(stage, neg, r->body)) fired.push_back(r);
    }
    if (fired.empty()) break;

    Theory next = stage;
    std::vector<FormulaPtr> fired_heads;
    for (const Rule* r : fired) {
      const FormulaPtr& head = r->heads[0];
      if (head->kind == Kind::Bot) {
        throw BotDerivedError("constraint body derivable: rule " + std::to_string(r->id));
      }
      fired_heads.push_back(head);
      for (const FormulaPtr& f : stage) w.head_order.pairs.emplace(f, head);
      if (!contains_equivalent(next, head)) next.push_back(head);
    }

    Interpretation entailed_next = entailed_atoms(i, next, neg);
    for (const Atom& a : entailed_next) {
      if (entailed.count(a)) continue;
      for (const Atom& q : entailed) w.order.pairs.emplace(q, a);
    }

    std::erase_if(active, [&](const Rule* r) {
      return std::any_of(fired_heads.begin(), fired_heads.end(), [&](const FormulaPtr& h) {
        return equivalent(r->heads[0], h);
      });
    });
    stage = std::move(next);
    entailed = std::move(entailed_next);
  }

  if (entailed != i) return std::nullopt;
  require_acyclic(w.order);
  require_acyclic(w.head_order);
  w.lfp_stages = lfp_t(p, neg, false);
  return w;
}

Theory ws_heads(const Program& p, const Interpretation& i) {
  require_normal(p);
  require_model(p, i);
  return lfp_t(p, negated_complement(p, i), true).back();
}

std::optional<WsWitness> ws_check_disjunctive(const Program& p, const Interpretation& i) {
  require_model(p, i);
  for (const HeadSelection& sel : enumerate_selections(p, i)) {
    std::optional<WsWitness> w = ws_check_normal(disjunctive_reduct(p, i, sel), i);
    if (w) {
      w->selection = sel;
      return w;
    }
  }
  return std::nullopt;
}

std::vector<WsWitness> ws_all_witnesses(const Program& p, const Interpretation& i) {
  require_model(p, i);
  std::vector<WsWitness> out;
  for (const HeadSelection& sel : enumerate_selections(p, i)) {
    std::optional<WsWitness> w = ws_check_normal(disjunctive_reduct(p, i, sel), i);
    if (w) {
      w->selection = sel;
      out.push_back(std::move(*w));
    }
  }
  return out;
}

std::optional<std::map<Interpretation, WsWitness>> ws_check_epistemic(const Program& p,
                                                                      const EpistemicModel& a) {
  EpistemicReduct red = epistemic_reduct(p, a);
  std::map<Interpretation, WsWitness> out;
  for (const Interpretation& i : a) {
    std::optional<WsWitness> w = ws_check_disjunctive(red.program, i);
    if (!w) return std::nullopt;
    out.emplace(i, std::move(*w));
  }
  return out;
}

}  // namespace rasp
